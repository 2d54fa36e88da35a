#ifndef SUBCLUST_SUBCLU_HPP
#define SUBCLUST_SUBCLU_HPP

#include <map>
#include <vector>

#include "subclust/core.hpp"
#include "subclust/dbscan.hpp"

namespace subclust {

/// Map from a subspace to the clusters found in it (one per-level slice of
/// the enumeration state).
using SubspaceClusterMap = std::map<Subspace, std::vector<std::vector<int>>>;

/// Per-level snapshots of the bottom-up enumeration, for inspection.
struct SubcluTrace {
    std::vector<SubspaceClusterMap> levels;
};

/// Apriori join of the k-dimensional subspaces in `sk`: pairs sharing their
/// k-1 smallest dimensions are merged, and any candidate with a k-subset
/// missing from `sk` is pruned. Candidates come back sorted.
std::vector<Subspace> generate_candidates(const std::vector<Subspace>& sk);

/// Among cand's k-subsets present in `ck`, the one with the fewest total
/// objects across its clusters; ties go to the lexicographically smallest
/// dimension set. Throws std::invalid_argument when no subset is present.
Subspace best_subspace(const Subspace& cand, const SubspaceClusterMap& ck);

/// Bottom-up enumeration of every subspace that contains density-connected
/// clusters: 1-D clusters seed the lattice, candidates are grown apriori
/// style, and each candidate is confirmed by running the density engine on
/// the points of its cheapest confirmed subset subspace.
Clustering subclu(const Dataset& ds, const DensityParams& params,
                  SubcluTrace* trace = nullptr);

} // namespace subclust

#endif
