#ifndef SUBCLUST_FIRES_HPP
#define SUBCLUST_FIRES_HPP

#include <cstddef>
#include <vector>

#include "subclust/core.hpp"
#include "subclust/dbscan.hpp"

namespace subclust {

/// A 1-dimensional density cluster, the merge primitive of the filter phase.
struct BaseCluster {
    int dim = 0;
    std::vector<int> members; // sorted ascending
};

struct FiresParams {
    DensityParams density;
    int k_neighbors = 3; // size of each base cluster's most-similar list
    int mu = 1;          // min best-merge pairs for a base to become mergeable
    int min_clu = 1;     // min shared entries between two most-similar lists

    void validate() const;
};

/// A merged subspace-cluster approximation awaiting refinement.
struct CandidateRegion {
    Subspace subspace;
    std::vector<int> members;
};

struct MergeStats {
    std::size_t similarity_evaluations = 0;
};

/// Runs the density engine per single dimension and keeps every resulting
/// cluster, then drops bases smaller than a quarter of the average base size.
std::vector<BaseCluster> pre_cluster(const Dataset& ds, const DensityParams& density);

/// Bases below 25% of the mean base size, measured before any removal, are
/// dropped. Exposed separately so the rule is testable on fabricated sizes.
std::vector<BaseCluster> drop_undersized_bases(std::vector<BaseCluster> bases);

/// Shared-object count between two base clusters.
int similarity(const BaseCluster& a, const BaseCluster& b);

/// Merge phase: most-similar lists, best-merge pairs, and connected
/// components of mergeable bases become candidate regions; bases that never
/// merge pass through as 1-D candidates. Work is quadratic in the number of
/// bases, never exponential in the dimension count.
std::vector<CandidateRegion> generate_approximations(const std::vector<BaseCluster>& bases,
                                                     const FiresParams& params,
                                                     MergeStats* stats = nullptr);

/// Refinement phase: each candidate is re-clustered on its own points in its
/// subspace with eps scaled by sqrt(|subspace|); empty refinements vanish.
Clustering refine(const Dataset& ds, const std::vector<CandidateRegion>& candidates,
                  const DensityParams& density);

/// The full three-phase pipeline.
Clustering fires(const Dataset& ds, const FiresParams& params);

} // namespace subclust

#endif
