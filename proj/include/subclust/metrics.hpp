#ifndef SUBCLUST_METRICS_HPP
#define SUBCLUST_METRICS_HPP

#include <string>
#include <vector>

#include "subclust/core.hpp"

namespace subclust {

/// Per-point class labels plus, when known, the planted clusters behind them.
struct GroundTruth {
    std::vector<std::string> labels;
    std::string noise_label = "noise";
    std::vector<SubspaceCluster> hidden_clusters;
};

/// One evaluation row: everything a comparison table needs about one run.
struct EvaluationReport {
    std::string method;
    long long no_of_clusters = 0;
    double clustering_time_ms = 0.0;
    double accuracy = 0.0;
    double coverage = 0.0;
    double io_entropy = 0.0;
    double f1_measure = 0.0;
    double calculation_time_ms = 0.0;
};

/// Fraction of the n points assigned to at least one cluster.
double coverage(const Clustering& c, int n);

/// Inverse-normalized object entropy: 1 minus the size-weighted mean of each
/// cluster's label entropy over log(L), L the number of distinct true
/// labels. 1 = every cluster pure, 0 = uniformly mixed. Empty clusterings
/// score 0; a single distinct label scores 1.
double io_entropy(const Clustering& c, const GroundTruth& truth);

/// Mean over hidden clusters of the best harmonic mean of precision and
/// recall against any found cluster; membership only, subspaces are not
/// compared. Throws when the truth has no hidden clusters.
double f1_measure(const Clustering& c, const GroundTruth& truth);

/// Majority-vote accuracy: each cluster predicts its majority true label,
/// each point takes the label of the largest cluster containing it, and
/// uncovered points fall back to the global majority label. Ties break
/// lexicographically (labels) and by lowest cluster index.
double accuracy(const Clustering& c, const GroundTruth& truth);

/// All four metrics plus the timing columns; calculation_time_ms is the
/// wall-clock time spent inside this call (monotonic clock).
EvaluationReport evaluate(const Clustering& c, const GroundTruth& truth);

} // namespace subclust

#endif
