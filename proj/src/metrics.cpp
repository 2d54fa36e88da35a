#include "subclust/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace subclust {

namespace {

void require_labels(const GroundTruth& truth) {
    if (truth.labels.empty()) throw std::invalid_argument("ground truth has no labels");
}

void require_valid_ids(const Clustering& c, std::size_t n) {
    for (const auto& cluster : c.clusters)
        for (int id : cluster.members)
            if (id < 0 || static_cast<std::size_t>(id) >= n)
                throw std::out_of_range("cluster member id outside ground truth");
}

std::string majority_label(const std::map<std::string, int>& counts) {
    // Ties go to the lexicographically smallest label, which is the first
    // maximal entry of the ordered map.
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it)
        if (it->second > best->second) best = it;
    return best->first;
}

} // namespace

double coverage(const Clustering& c, int n) {
    if (n < 1) throw std::invalid_argument("coverage needs n >= 1");
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& cluster : c.clusters)
        for (int id : cluster.members) {
            if (id < 0 || id >= n) throw std::out_of_range("cluster member id out of range");
            covered[static_cast<std::size_t>(id)] = 1;
        }
    const auto hit = std::count(covered.begin(), covered.end(), char(1));
    return static_cast<double>(hit) / static_cast<double>(n);
}

double io_entropy(const Clustering& c, const GroundTruth& truth) {
    require_labels(truth);
    require_valid_ids(c, truth.labels.size());
    if (c.clusters.empty()) return 0.0;

    const std::set<std::string> distinct(truth.labels.begin(), truth.labels.end());
    if (distinct.size() < 2) return 1.0;
    const double log_l = std::log(static_cast<double>(distinct.size()));

    double total = 0.0;
    for (const auto& cluster : c.clusters) total += static_cast<double>(cluster.members.size());

    double weighted = 0.0;
    for (const auto& cluster : c.clusters) {
        std::map<std::string, int> counts;
        for (int id : cluster.members) ++counts[truth.labels[static_cast<std::size_t>(id)]];
        double entropy = 0.0;
        for (const auto& [_, count] : counts) {
            const double p = static_cast<double>(count) /
                             static_cast<double>(cluster.members.size());
            entropy -= p * std::log(p);
        }
        weighted += (static_cast<double>(cluster.members.size()) / total) * (entropy / log_l);
    }
    return std::clamp(1.0 - weighted, 0.0, 1.0);
}

double f1_measure(const Clustering& c, const GroundTruth& truth) {
    if (truth.hidden_clusters.empty())
        throw std::invalid_argument("f1 measure needs hidden clusters");

    double sum = 0.0;
    for (const auto& hidden : truth.hidden_clusters) {
        double best = 0.0;
        for (const auto& found : c.clusters) {
            std::vector<int> common;
            std::set_intersection(hidden.members.begin(), hidden.members.end(),
                                  found.members.begin(), found.members.end(),
                                  std::back_inserter(common));
            if (common.empty()) continue;
            const double shared = static_cast<double>(common.size());
            const double precision = shared / static_cast<double>(found.members.size());
            const double recall = shared / static_cast<double>(hidden.members.size());
            best = std::max(best, 2.0 * precision * recall / (precision + recall));
        }
        sum += best;
    }
    return sum / static_cast<double>(truth.hidden_clusters.size());
}

double accuracy(const Clustering& c, const GroundTruth& truth) {
    require_labels(truth);
    require_valid_ids(c, truth.labels.size());
    const auto n = truth.labels.size();

    std::vector<std::string> cluster_label(c.clusters.size());
    for (std::size_t i = 0; i < c.clusters.size(); ++i) {
        std::map<std::string, int> counts;
        for (int id : c.clusters[i].members) ++counts[truth.labels[static_cast<std::size_t>(id)]];
        cluster_label[i] = majority_label(counts);
    }

    std::map<std::string, int> global;
    for (const auto& label : truth.labels) ++global[label];
    const std::string fallback = majority_label(global);

    // Largest containing cluster wins; scanning in index order means a later
    // equal-sized cluster never displaces an earlier one.
    std::vector<int> chosen(n, -1);
    for (std::size_t i = 0; i < c.clusters.size(); ++i)
        for (int id : c.clusters[i].members) {
            auto& cur = chosen[static_cast<std::size_t>(id)];
            if (cur < 0 || c.clusters[i].members.size() >
                               c.clusters[static_cast<std::size_t>(cur)].members.size())
                cur = static_cast<int>(i);
        }

    std::size_t correct = 0;
    for (std::size_t id = 0; id < n; ++id) {
        const std::string& predicted =
            chosen[id] >= 0 ? cluster_label[static_cast<std::size_t>(chosen[id])] : fallback;
        if (predicted == truth.labels[id]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(n);
}

EvaluationReport evaluate(const Clustering& c, const GroundTruth& truth) {
    require_labels(truth);
    const auto t0 = std::chrono::steady_clock::now();

    EvaluationReport report;
    report.method = c.algorithm;
    report.no_of_clusters = static_cast<long long>(c.clusters.size());
    report.clustering_time_ms = c.clustering_time_ms;
    report.coverage = coverage(c, static_cast<int>(truth.labels.size()));
    report.io_entropy = io_entropy(c, truth);
    report.f1_measure = f1_measure(c, truth);
    report.accuracy = accuracy(c, truth);

    report.calculation_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

} // namespace subclust
