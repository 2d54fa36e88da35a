#ifndef SUBCLUST_INSCY_HPP
#define SUBCLUST_INSCY_HPP

#include <vector>

#include "subclust/core.hpp"
#include "subclust/dbscan.hpp"

namespace subclust {

/// One grid restriction: dimension `dim` narrowed to interval `interval`.
struct Descriptor {
    int dim = 0;
    int interval = 0;
};

struct InscyParams {
    DensityParams density;
    int xi = 10;                    // intervals per dimension
    double redundancy_factor = 1.0; // overlap fraction that suppresses a cluster

    void validate() const;
};

/// Grid index state: the dataset's per-dimension value ranges split into xi
/// equal-width intervals, a list of restrictions applied so far, and the
/// point ids surviving them (plus any border points re-admitted next to the
/// last restriction). Cheap to copy; restriction produces a new tree.
class ScyTree {
public:
    ScyTree(const Dataset& ds, int xi);

    const Dataset& dataset() const { return *ds_; }
    int xi() const { return xi_; }
    const std::vector<Descriptor>& restrictions() const { return restrictions_; }
    const std::vector<int>& points() const { return points_; }

    /// Number of intervals in `dim`: xi, or 1 when the value range is a point.
    int intervals(int dim) const;
    /// Interval index of value v in `dim`, clamped into [0, intervals(dim)).
    int bin(int dim, double v) const;
    /// [low, high) bounds of one interval (the last interval is closed).
    double interval_low(int dim, int interval) const;
    double interval_high(int dim, int interval) const;

    /// Point tallies per (dim, interval) within the current point set.
    const std::vector<std::vector<int>>& counts() const { return counts_; }

    bool is_restricted(int dim) const;
    /// The restricted dims, sorted, as a Subspace.
    Subspace restricted_subspace() const;

    friend ScyTree restrict_tree(const ScyTree&, Descriptor);
    friend ScyTree merge_with_neighbors(const ScyTree&, double eps);

private:
    void recount();

    const Dataset* ds_;
    int xi_;
    std::vector<double> lo_, width_;
    std::vector<Descriptor> restrictions_;
    std::vector<int> points_;      // sorted
    std::vector<int> prev_points_; // point set before the last restriction
    std::vector<std::vector<int>> counts_;
};

ScyTree build_scytree(const Dataset& ds, int xi);

/// Narrow the tree by one descriptor. Throws std::invalid_argument when the
/// dimension is already restricted or the interval is out of range.
ScyTree restrict_tree(const ScyTree& tree, Descriptor desc);

/// Re-admit points from the intervals adjacent to the last restriction that
/// lie within eps of its boundaries, so clusters spanning a grid border stay
/// in one piece. Requires at least one restriction.
ScyTree merge_with_neighbors(const ScyTree& tree, double eps);

/// True when the region cannot contain a cluster (fewer than minpts points).
bool prune_recursion(const ScyTree& tree, const DensityParams& density);

/// True when some already-found cluster in a strict superspace covers at
/// least `redundancy_factor` of this cluster's members.
bool prune_redundancy(const SubspaceCluster& cluster,
                      const std::vector<SubspaceCluster>& found,
                      double redundancy_factor);

/// Density clusters of the tree's points in the projection onto its
/// restricted dims. Requires at least one restriction.
std::vector<SubspaceCluster> db_clustering(const ScyTree& tree, const DensityParams& density);

/// Depth-first mining over descriptors in (dim ascending, interval ascending)
/// order, recursing before clustering so higher-dimensional projections are
/// found first and can suppress their redundant shadows.
Clustering inscy(const Dataset& ds, const InscyParams& params);

} // namespace subclust

#endif
