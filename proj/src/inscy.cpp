#include "subclust/inscy.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace subclust {

namespace {

std::string double_to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

} // namespace

void InscyParams::validate() const {
    density.validate();
    if (xi < 1) throw std::invalid_argument("xi must be at least 1");
    if (!(redundancy_factor > 0.0) || redundancy_factor > 1.0)
        throw std::invalid_argument("redundancy factor must be in (0, 1]");
}

ScyTree::ScyTree(const Dataset& ds, int xi) : ds_(&ds), xi_(xi) {
    if (xi < 1) throw std::invalid_argument("xi must be at least 1");
    lo_.assign(ds.d(), 0.0);
    width_.assign(ds.d(), 0.0);
    for (int j = 0; j < ds.d(); ++j) {
        double lo = ds.n() ? ds.at(0, j) : 0.0;
        double hi = lo;
        for (int i = 1; i < ds.n(); ++i) {
            lo = std::min(lo, ds.at(i, j));
            hi = std::max(hi, ds.at(i, j));
        }
        lo_[j] = lo;
        width_[j] = hi > lo ? (hi - lo) / xi : 0.0;
    }
    points_.resize(static_cast<std::size_t>(ds.n()));
    std::iota(points_.begin(), points_.end(), 0);
    recount();
}

int ScyTree::intervals(int dim) const { return width_[dim] > 0.0 ? xi_ : 1; }

int ScyTree::bin(int dim, double v) const {
    if (width_[dim] <= 0.0) return 0;
    auto idx = static_cast<int>((v - lo_[dim]) / width_[dim]);
    return std::clamp(idx, 0, xi_ - 1);
}

double ScyTree::interval_low(int dim, int interval) const {
    return lo_[dim] + width_[dim] * interval;
}

double ScyTree::interval_high(int dim, int interval) const {
    return lo_[dim] + width_[dim] * (interval + 1);
}

bool ScyTree::is_restricted(int dim) const {
    return std::any_of(restrictions_.begin(), restrictions_.end(),
                       [&](const Descriptor& r) { return r.dim == dim; });
}

Subspace ScyTree::restricted_subspace() const {
    std::vector<int> dims;
    dims.reserve(restrictions_.size());
    for (const auto& r : restrictions_) dims.push_back(r.dim);
    return Subspace(std::move(dims));
}

void ScyTree::recount() {
    counts_.assign(static_cast<std::size_t>(ds_->d()), {});
    for (int j = 0; j < ds_->d(); ++j)
        counts_[j].assign(static_cast<std::size_t>(intervals(j)), 0);
    for (int id : points_)
        for (int j = 0; j < ds_->d(); ++j) ++counts_[j][bin(j, ds_->at(id, j))];
}

ScyTree build_scytree(const Dataset& ds, int xi) { return ScyTree(ds, xi); }

ScyTree restrict_tree(const ScyTree& tree, Descriptor desc) {
    if (desc.dim < 0 || desc.dim >= tree.dataset().d())
        throw std::invalid_argument("descriptor dimension out of range");
    if (tree.is_restricted(desc.dim))
        throw std::invalid_argument("dimension already restricted");
    if (desc.interval < 0 || desc.interval >= tree.intervals(desc.dim))
        throw std::invalid_argument("descriptor interval out of range");

    ScyTree out(tree);
    out.prev_points_ = tree.points_;
    out.points_.clear();
    for (int id : tree.points_)
        if (out.bin(desc.dim, out.ds_->at(id, desc.dim)) == desc.interval)
            out.points_.push_back(id);
    out.restrictions_.push_back(desc);
    out.recount();
    return out;
}

ScyTree merge_with_neighbors(const ScyTree& tree, double eps) {
    if (tree.restrictions_.empty())
        throw std::invalid_argument("merge needs a restricted tree");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    const Descriptor last = tree.restrictions_.back();
    const double low = tree.interval_low(last.dim, last.interval);
    const double high = tree.interval_high(last.dim, last.interval);

    ScyTree out(tree);
    for (int id : tree.prev_points_) {
        const double v = out.ds_->at(id, last.dim);
        const int b = out.bin(last.dim, v);
        const bool near_low = b == last.interval - 1 && v >= low - eps;
        const bool near_high = b == last.interval + 1 && v <= high + eps;
        if (near_low || near_high) out.points_.push_back(id);
    }
    std::sort(out.points_.begin(), out.points_.end());
    out.recount();
    return out;
}

bool prune_recursion(const ScyTree& tree, const DensityParams& density) {
    density.validate();
    return tree.points().size() < static_cast<std::size_t>(density.minpts);
}

bool prune_redundancy(const SubspaceCluster& cluster,
                      const std::vector<SubspaceCluster>& found,
                      double redundancy_factor) {
    const auto needed = redundancy_factor * static_cast<double>(cluster.members.size());
    for (const auto& prior : found) {
        if (!prior.subspace.strict_superset_of(cluster.subspace)) continue;
        if (static_cast<double>(intersection_size(prior.members, cluster.members)) >= needed)
            return true;
    }
    return false;
}

std::vector<SubspaceCluster> db_clustering(const ScyTree& tree, const DensityParams& density) {
    if (tree.restrictions().empty())
        throw std::invalid_argument("clustering needs a restricted tree");
    const Subspace s = tree.restricted_subspace();
    DbscanOutcome res = dbscan(tree.dataset(), s, density, tree.points());
    std::vector<SubspaceCluster> out;
    out.reserve(res.clusters.size());
    for (auto& members : res.clusters) out.push_back({s, std::move(members)});
    return out;
}

namespace {

// Restrict with every interval of every dim after the tree's last restricted
// dim, recursing before clustering. Extending only toward higher dims visits
// each subspace region once, and the recurse-first order guarantees that all
// strict superspaces of a cluster are already in `result` when the cluster
// is checked for redundancy.
void mine(const ScyTree& tree, const InscyParams& params,
          std::vector<SubspaceCluster>& result) {
    const int first_dim =
        tree.restrictions().empty() ? 0 : tree.restrictions().back().dim + 1;
    for (int dim = first_dim; dim < tree.dataset().d(); ++dim) {
        for (int interval = 0; interval < tree.intervals(dim); ++interval) {
            ScyTree restricted = restrict_tree(tree, {dim, interval});
            restricted = merge_with_neighbors(restricted, params.density.eps);
            if (prune_recursion(restricted, params.density)) continue;
            mine(restricted, params, result);
            for (auto& cluster : db_clustering(restricted, params.density))
                if (!prune_redundancy(cluster, result, params.redundancy_factor))
                    result.push_back(std::move(cluster));
        }
    }
}

} // namespace

Clustering inscy(const Dataset& ds, const InscyParams& params) {
    params.validate();
    const auto t0 = std::chrono::steady_clock::now();

    Clustering out;
    out.algorithm = "INSCY";
    out.params["eps"] = double_to_string(params.density.eps);
    out.params["minpts"] = std::to_string(params.density.minpts);
    out.params["xi"] = std::to_string(params.xi);
    out.params["redundancy_factor"] = double_to_string(params.redundancy_factor);

    mine(build_scytree(ds, params.xi), params, out.clusters);

    out.noise = uncovered_ids(out.clusters, ds.n());
    out.clustering_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return out;
}

} // namespace subclust
