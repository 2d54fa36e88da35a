#include "subclust/subclu.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <stdexcept>

namespace subclust {

namespace {

std::string double_to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

std::size_t total_objects(const std::vector<std::vector<int>>& clusters) {
    std::size_t total = 0;
    for (const auto& c : clusters) total += c.size();
    return total;
}

std::vector<int> member_union(const std::vector<std::vector<int>>& clusters) {
    std::vector<int> pool;
    for (const auto& c : clusters) pool.insert(pool.end(), c.begin(), c.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

} // namespace

std::vector<Subspace> generate_candidates(const std::vector<Subspace>& sk) {
    if (sk.empty()) return {};
    const std::size_t k = sk.front().size();
    for (const auto& s : sk)
        if (s.size() != k) throw std::invalid_argument("mixed cardinality in candidate join");

    std::vector<Subspace> sorted(sk);
    std::sort(sorted.begin(), sorted.end());

    std::vector<Subspace> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const auto& a = sorted[i].dims();
            const auto& b = sorted[j].dims();
            if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) continue;
            std::vector<int> joined(a);
            joined.push_back(b.back());
            Subspace cand(std::move(joined));

            // Downward closure: every k-subset must already contain clusters.
            bool keep = true;
            for (std::size_t drop = 0; keep && drop < cand.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t m = 0; m < cand.size(); ++m)
                    if (m != drop) sub.push_back(cand[m]);
                keep = std::binary_search(sorted.begin(), sorted.end(), Subspace(std::move(sub)));
            }
            if (keep) out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subspace best_subspace(const Subspace& cand, const SubspaceClusterMap& ck) {
    bool found = false;
    Subspace best;
    std::size_t best_total = 0;
    for (std::size_t drop = 0; drop < cand.size(); ++drop) {
        std::vector<int> sub;
        for (std::size_t m = 0; m < cand.size(); ++m)
            if (m != cand.size() - 1 - drop) sub.push_back(cand[m]);
        Subspace candidate_subset(std::move(sub));
        auto it = ck.find(candidate_subset);
        if (it == ck.end()) continue;
        const std::size_t total = total_objects(it->second);
        if (!found || total < best_total ||
            (total == best_total && candidate_subset < best)) {
            found = true;
            best = std::move(candidate_subset);
            best_total = total;
        }
    }
    if (!found) throw std::invalid_argument("candidate has no subset among confirmed subspaces");
    return best;
}

Clustering subclu(const Dataset& ds, const DensityParams& params, SubcluTrace* trace) {
    params.validate();
    const auto t0 = std::chrono::steady_clock::now();

    Clustering out;
    out.algorithm = "SUBCLU";
    out.params["eps"] = double_to_string(params.eps);
    out.params["minpts"] = std::to_string(params.minpts);

    // STEP 1: clusters in every single dimension.
    SubspaceClusterMap current;
    for (int dim = 0; dim < ds.d(); ++dim) {
        Subspace s({dim});
        DbscanOutcome res = dbscan(ds, s, params);
        if (!res.clusters.empty()) current[s] = std::move(res.clusters);
    }
    if (trace) trace->levels.push_back(current);
    for (const auto& [s, clusters] : current)
        for (const auto& members : clusters) out.clusters.push_back({s, members});

    // STEP 2: grow (k+1)-dimensional candidates while anything survives.
    // Each candidate is checked with one run over the union of its best
    // subspace's cluster members; clusters in the candidate projection can
    // only live inside that union.
    while (!current.empty()) {
        std::vector<Subspace> sk;
        sk.reserve(current.size());
        for (const auto& [s, _] : current) sk.push_back(s);

        SubspaceClusterMap next;
        for (const Subspace& cand : generate_candidates(sk)) {
            const Subspace best = best_subspace(cand, current);
            const std::vector<int> pool = member_union(current.at(best));
            DbscanOutcome res = dbscan(ds, cand, params, pool);
            if (!res.clusters.empty()) next[cand] = std::move(res.clusters);
        }
        if (trace && !next.empty()) trace->levels.push_back(next);
        for (const auto& [s, clusters] : next)
            for (const auto& members : clusters) out.clusters.push_back({s, members});
        current = std::move(next);
    }

    out.noise = uncovered_ids(out.clusters, ds.n());
    out.clustering_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return out;
}

} // namespace subclust
