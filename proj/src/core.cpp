#include "subclust/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subclust {

Subspace::Subspace(std::vector<int> dims) : dims_(std::move(dims)) {
    std::sort(dims_.begin(), dims_.end());
    if (std::adjacent_find(dims_.begin(), dims_.end()) != dims_.end())
        throw std::invalid_argument("subspace has duplicate dimensions");
    if (!dims_.empty() && dims_.front() < 0)
        throw std::out_of_range("subspace has negative dimension index");
}

bool Subspace::contains(int dim) const {
    return std::binary_search(dims_.begin(), dims_.end(), dim);
}

bool Subspace::subset_of(const Subspace& other) const {
    return std::includes(other.dims_.begin(), other.dims_.end(), dims_.begin(), dims_.end());
}

bool Subspace::strict_superset_of(const Subspace& other) const {
    return dims_.size() > other.dims_.size() && other.subset_of(*this);
}

void Subspace::validate_for(int d) const {
    if (!dims_.empty() && dims_.back() >= d)
        throw std::out_of_range("subspace dimension " + std::to_string(dims_.back()) +
                                " out of range for d=" + std::to_string(d));
}

std::string Subspace::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(dims_[i]);
    }
    return out + "}";
}

Dataset::Dataset(std::vector<double> points, int d,
                 std::vector<std::string> attribute_names,
                 std::vector<std::string> labels)
    : points_(std::move(points)),
      d_(d),
      attribute_names_(std::move(attribute_names)),
      labels_(std::move(labels)) {
    if (d_ < 1) throw std::invalid_argument("dataset needs d >= 1");
    if (points_.size() % static_cast<std::size_t>(d_) != 0)
        throw std::invalid_argument("point data is not a whole number of rows");
    n_ = static_cast<int>(points_.size() / static_cast<std::size_t>(d_));
    for (double v : points_)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite coordinate");
    if (attribute_names_.empty()) {
        attribute_names_.reserve(d_);
        for (int j = 0; j < d_; ++j) attribute_names_.push_back("a" + std::to_string(j));
    } else if (attribute_names_.size() != static_cast<std::size_t>(d_)) {
        throw std::invalid_argument("attribute name count does not match d");
    }
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("label count does not match n");
}

double distance(const Dataset& ds, int a, int b, const Subspace& s) {
    if (a < 0 || a >= ds.n() || b < 0 || b >= ds.n())
        throw std::out_of_range("point id out of range");
    if (s.empty()) throw std::invalid_argument("distance over empty subspace");
    s.validate_for(ds.d());
    return std::sqrt(detail::dist_sq(ds, a, b, s.dims()));
}

Dataset project(const Dataset& ds, const Subspace& s) {
    if (s.empty()) throw std::invalid_argument("projection onto empty subspace");
    s.validate_for(ds.d());
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(ds.n()) * s.size());
    for (int i = 0; i < ds.n(); ++i)
        for (int dim : s.dims()) data.push_back(ds.at(i, dim));
    std::vector<std::string> names;
    names.reserve(s.size());
    for (int dim : s.dims()) names.push_back(ds.attribute_names()[dim]);
    return Dataset(std::move(data), static_cast<int>(s.size()), std::move(names),
                   ds.labels());
}

Dataset min_max_normalized(const Dataset& ds) {
    std::vector<double> lo(ds.d(), 0.0), hi(ds.d(), 0.0);
    for (int j = 0; j < ds.d(); ++j) {
        lo[j] = hi[j] = ds.n() ? ds.at(0, j) : 0.0;
        for (int i = 1; i < ds.n(); ++i) {
            lo[j] = std::min(lo[j], ds.at(i, j));
            hi[j] = std::max(hi[j], ds.at(i, j));
        }
    }
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(ds.n()) * ds.d());
    for (int i = 0; i < ds.n(); ++i)
        for (int j = 0; j < ds.d(); ++j) {
            double range = hi[j] - lo[j];
            data.push_back(range > 0.0 ? (ds.at(i, j) - lo[j]) / range : 0.0);
        }
    return Dataset(std::move(data), ds.d(), ds.attribute_names(), ds.labels());
}

std::vector<int> uncovered_ids(const std::vector<SubspaceCluster>& clusters, int n) {
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& c : clusters)
        for (int id : c.members) covered[static_cast<std::size_t>(id)] = 1;
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!covered[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

} // namespace subclust
