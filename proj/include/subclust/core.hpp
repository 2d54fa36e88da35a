#ifndef SUBCLUST_CORE_HPP
#define SUBCLUST_CORE_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

namespace subclust {

/// An ordered set of dimension indices selecting a projection of a dataset.
/// Indices are kept strictly increasing; duplicates are rejected.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::vector<int> dims);

    std::size_t size() const { return dims_.size(); }
    bool empty() const { return dims_.empty(); }
    const std::vector<int>& dims() const { return dims_; }
    int operator[](std::size_t i) const { return dims_[i]; }

    bool contains(int dim) const;
    bool subset_of(const Subspace& other) const;
    bool strict_superset_of(const Subspace& other) const;

    /// Throws std::out_of_range unless every index lies in [0, d).
    void validate_for(int d) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace& a, const Subspace& b) {
        return a.dims_ <=> b.dims_;
    }

    std::string to_string() const;

private:
    std::vector<int> dims_;
};

/// Immutable n x d matrix of finite real coordinates with optional per-point
/// class labels. Point ids are dense integers [0, n) in construction order.
class Dataset {
public:
    /// `points` is row-major with n*d entries. Empty `attribute_names` gets
    /// defaults a0..a{d-1}. Empty `labels` means no labels.
    Dataset(std::vector<double> points, int d,
            std::vector<std::string> attribute_names = {},
            std::vector<std::string> labels = {});

    int n() const { return n_; }
    int d() const { return d_; }
    double at(int i, int j) const { return points_[static_cast<std::size_t>(i) * d_ + j]; }
    std::span<const double> row(int i) const {
        return {points_.data() + static_cast<std::size_t>(i) * d_, static_cast<std::size_t>(d_)};
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& attribute_names() const { return attribute_names_; }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<double> points_;
    int n_ = 0;
    int d_ = 1;
    std::vector<std::string> attribute_names_;
    std::vector<std::string> labels_;
};

/// A set of point ids that is density-connected in the projection onto
/// `subspace`. Members are sorted ascending and non-empty.
struct SubspaceCluster {
    Subspace subspace;
    std::vector<int> members;

    friend bool operator==(const SubspaceCluster&, const SubspaceCluster&) = default;
};

/// Full output of one algorithm run. `noise` holds the ids that appear in no
/// cluster. Equality of two runs is compared field-wise by callers; the
/// timing field is the only nondeterministic one.
struct Clustering {
    std::string algorithm;
    std::vector<SubspaceCluster> clusters;
    std::vector<int> noise;
    std::map<std::string, std::string> params;
    double clustering_time_ms = 0.0;
};

/// Euclidean distance between points a and b over the dimensions in s.
/// Throws std::out_of_range / std::invalid_argument on bad ids or empty s.
double distance(const Dataset& ds, int a, int b, const Subspace& s);

/// Copy of `ds` restricted to the dimensions in `s` (labels carried over).
Dataset project(const Dataset& ds, const Subspace& s);

/// Min-max rescaling of every attribute to [0,1]; constant attributes map
/// to 0. Never applied implicitly by any algorithm.
Dataset min_max_normalized(const Dataset& ds);

/// Sorted ids not covered by any cluster, given dataset size n.
std::vector<int> uncovered_ids(const std::vector<SubspaceCluster>& clusters, int n);

namespace detail {

/// Squared distance over the given dims, no argument checking.
inline double dist_sq(const Dataset& ds, int a, int b, const std::vector<int>& dims) {
    double acc = 0.0;
    for (int dim : dims) {
        double diff = ds.at(a, dim) - ds.at(b, dim);
        acc += diff * diff;
    }
    return acc;
}

} // namespace detail

} // namespace subclust

#endif
