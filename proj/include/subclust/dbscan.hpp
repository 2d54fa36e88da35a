#ifndef SUBCLUST_DBSCAN_HPP
#define SUBCLUST_DBSCAN_HPP

#include <span>
#include <vector>

#include "subclust/core.hpp"

namespace subclust {

/// Density threshold: closed ball of radius eps must hold at least minpts
/// points (the query point included) for a point to be core.
struct DensityParams {
    double eps = 0.0;
    int minpts = 0;

    /// Throws std::invalid_argument unless eps > 0 and minpts >= 1.
    void validate() const;
};

struct DbscanOutcome {
    std::vector<std::vector<int>> clusters; // discovery order, members sorted
    std::vector<int> noise;                 // sorted
    std::vector<char> core_flags;           // indexed by point id, size n
};

struct DbscanOptions {
    /// Route region queries through a uniform grid instead of a linear scan.
    /// Results are identical; only the lookup strategy changes.
    bool use_grid = false;
};

/// All ids q among `ids` with distance(p, q, s) <= eps, p itself included.
/// Returned ascending. The whole-dataset overload scans every point.
std::vector<int> region_query(const Dataset& ds, const Subspace& s, int p, double eps);
std::vector<int> region_query(const Dataset& ds, const Subspace& s, int p, double eps,
                              std::span<const int> ids);

/// Classic density clustering restricted to the projection onto `s`.
/// Points are scanned in ascending id order; a point whose neighborhood is
/// too small is provisionally noise and may still be adopted as a border
/// point by a later expansion. Border points reachable from two clusters go
/// to the cluster whose expansion touches them first, which under the
/// ascending scan makes the whole outcome deterministic.
DbscanOutcome dbscan(const Dataset& ds, const Subspace& s, const DensityParams& params,
                     const DbscanOptions& opts = {});

/// Same, restricted to the subset `ids` (neighborhoods are computed within
/// the subset only). Ids outside the subset are ignored entirely.
DbscanOutcome dbscan(const Dataset& ds, const Subspace& s, const DensityParams& params,
                     std::span<const int> ids, const DbscanOptions& opts = {});

} // namespace subclust

#endif
