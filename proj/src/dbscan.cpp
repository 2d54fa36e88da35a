#include "subclust/dbscan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace subclust {

namespace {

constexpr int kUnclassified = -2;
constexpr int kNoise = -1;

void validate_inputs(const Dataset& ds, const Subspace& s, double eps) {
    if (s.empty()) throw std::invalid_argument("dbscan needs a non-empty subspace");
    s.validate_for(ds.d());
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
}

std::vector<int> checked_ids(const Dataset& ds, std::span<const int> ids) {
    std::vector<int> out(ids.begin(), ids.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!out.empty() && (out.front() < 0 || out.back() >= ds.n()))
        throw std::out_of_range("point id out of range");
    return out;
}

// Uniform grid over the subspace dims with cell width eps; neighbors of a
// point can only live in the 3^|s| surrounding cells. Intended for small
// subspaces, which is all the algorithms here ever query.
class GridIndex {
public:
    GridIndex(const Dataset& ds, const Subspace& s, double eps, const std::vector<int>& ids)
        : ds_(ds), dims_(s.dims()), eps_(eps) {
        origin_.assign(dims_.size(), 0.0);
        if (!ids.empty()) {
            for (std::size_t k = 0; k < dims_.size(); ++k) {
                double lo = ds.at(ids[0], dims_[k]);
                for (int id : ids) lo = std::min(lo, ds.at(id, dims_[k]));
                origin_[k] = lo;
            }
        }
        for (int id : ids) cells_[cell_key(cell_of(id))].push_back(id);
    }

    std::vector<int> query(int p) const {
        const double eps_sq = eps_ * eps_;
        std::vector<int> out;
        const std::vector<int64_t> center = cell_of(p);
        std::vector<int> offset(dims_.size(), -1);
        for (;;) {
            std::vector<int64_t> cell(center);
            for (std::size_t k = 0; k < cell.size(); ++k) cell[k] += offset[k];
            auto it = cells_.find(cell_key(cell));
            if (it != cells_.end())
                for (int q : it->second)
                    if (detail::dist_sq(ds_, p, q, dims_) <= eps_sq) out.push_back(q);
            std::size_t k = 0;
            while (k < offset.size() && offset[k] == 1) offset[k++] = -1;
            if (k == offset.size()) break;
            ++offset[k];
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<int64_t> cell_of(int id) const {
        std::vector<int64_t> cell(dims_.size());
        for (std::size_t k = 0; k < dims_.size(); ++k)
            cell[k] = static_cast<int64_t>(
                std::floor((ds_.at(id, dims_[k]) - origin_[k]) / eps_));
        return cell;
    }

    static std::string cell_key(const std::vector<int64_t>& cell) {
        return {reinterpret_cast<const char*>(cell.data()), cell.size() * sizeof(int64_t)};
    }

    const Dataset& ds_;
    const std::vector<int>& dims_;
    double eps_;
    std::vector<double> origin_;
    std::unordered_map<std::string, std::vector<int>> cells_;
};

std::vector<int> scan_query(const Dataset& ds, const std::vector<int>& dims, int p,
                            double eps, const std::vector<int>& ids) {
    const double eps_sq = eps * eps;
    std::vector<int> out;
    for (int q : ids)
        if (detail::dist_sq(ds, p, q, dims) <= eps_sq) out.push_back(q);
    return out;
}

} // namespace

void DensityParams::validate() const {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    if (minpts < 1) throw std::invalid_argument("minpts must be at least 1");
}

std::vector<int> region_query(const Dataset& ds, const Subspace& s, int p, double eps) {
    std::vector<int> all(static_cast<std::size_t>(ds.n()));
    std::iota(all.begin(), all.end(), 0);
    return region_query(ds, s, p, eps, all);
}

std::vector<int> region_query(const Dataset& ds, const Subspace& s, int p, double eps,
                              std::span<const int> ids) {
    validate_inputs(ds, s, eps);
    if (p < 0 || p >= ds.n()) throw std::out_of_range("query point id out of range");
    return scan_query(ds, s.dims(), p, eps, checked_ids(ds, ids));
}

DbscanOutcome dbscan(const Dataset& ds, const Subspace& s, const DensityParams& params,
                     const DbscanOptions& opts) {
    std::vector<int> all(static_cast<std::size_t>(ds.n()));
    std::iota(all.begin(), all.end(), 0);
    return dbscan(ds, s, params, all, opts);
}

DbscanOutcome dbscan(const Dataset& ds, const Subspace& s, const DensityParams& params,
                     std::span<const int> ids, const DbscanOptions& opts) {
    params.validate();
    validate_inputs(ds, s, params.eps);
    const std::vector<int> subset = checked_ids(ds, ids);
    const auto minpts = static_cast<std::size_t>(params.minpts);

    std::optional<GridIndex> grid;
    if (opts.use_grid) grid.emplace(ds, s, params.eps, subset);
    auto neighbors = [&](int p) {
        return grid ? grid->query(p) : scan_query(ds, s.dims(), p, params.eps, subset);
    };

    DbscanOutcome out;
    out.core_flags.assign(static_cast<std::size_t>(ds.n()), 0);
    std::vector<int> assignment(static_cast<std::size_t>(ds.n()), kUnclassified);
    std::vector<char> visited(static_cast<std::size_t>(ds.n()), 0);
    std::vector<char> queued(static_cast<std::size_t>(ds.n()), 0);
    int next_cluster = 0;

    for (int p : subset) {
        if (visited[p]) continue;
        visited[p] = 1;
        const std::vector<int> n0 = neighbors(p);
        if (n0.size() < minpts) {
            assignment[p] = kNoise; // provisional; may still be adopted as border
            continue;
        }
        const int cluster = next_cluster++;
        out.core_flags[p] = 1;
        assignment[p] = cluster;
        std::vector<int> seeds;
        for (int q : n0)
            if (!queued[q] && assignment[q] != cluster) {
                queued[q] = 1;
                seeds.push_back(q);
            }
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            const int q = seeds[i];
            queued[q] = 0;
            if (!visited[q]) {
                visited[q] = 1;
                const std::vector<int> nq = neighbors(q);
                if (nq.size() >= minpts) {
                    out.core_flags[q] = 1;
                    // N joined with N': only ids still lacking a membership
                    // decision need to enter the seed list.
                    for (int r : nq)
                        if (!queued[r] &&
                            (assignment[r] == kUnclassified || assignment[r] == kNoise)) {
                            queued[r] = 1;
                            seeds.push_back(r);
                        }
                }
            }
            if (assignment[q] == kUnclassified || assignment[q] == kNoise)
                assignment[q] = cluster;
        }
    }

    out.clusters.assign(static_cast<std::size_t>(next_cluster), {});
    for (int id : subset) {
        if (assignment[id] >= 0)
            out.clusters[static_cast<std::size_t>(assignment[id])].push_back(id);
        else
            out.noise.push_back(id);
    }
    return out;
}

} // namespace subclust
