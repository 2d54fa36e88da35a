#include "subclust/fires.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace subclust {

namespace {

std::string double_to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

void FiresParams::validate() const {
    density.validate();
    if (k_neighbors < 1) throw std::invalid_argument("k_neighbors must be at least 1");
    if (mu < 1) throw std::invalid_argument("mu must be at least 1");
    if (min_clu < 1) throw std::invalid_argument("min_clu must be at least 1");
}

std::vector<BaseCluster> pre_cluster(const Dataset& ds, const DensityParams& density) {
    density.validate();
    std::vector<BaseCluster> bases;
    for (int dim = 0; dim < ds.d(); ++dim) {
        DbscanOutcome res = dbscan(ds, Subspace({dim}), density);
        for (auto& members : res.clusters) bases.push_back({dim, std::move(members)});
    }
    return drop_undersized_bases(std::move(bases));
}

std::vector<BaseCluster> drop_undersized_bases(std::vector<BaseCluster> bases) {
    if (bases.empty()) return bases;
    double total = 0.0;
    for (const auto& b : bases) total += static_cast<double>(b.members.size());
    const double threshold = 0.25 * (total / static_cast<double>(bases.size()));
    std::erase_if(bases, [&](const BaseCluster& b) {
        return static_cast<double>(b.members.size()) < threshold;
    });
    return bases;
}

int similarity(const BaseCluster& a, const BaseCluster& b) {
    int count = 0;
    auto ia = a.members.begin(), ib = b.members.begin();
    while (ia != a.members.end() && ib != b.members.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

std::vector<CandidateRegion> generate_approximations(const std::vector<BaseCluster>& bases,
                                                     const FiresParams& params,
                                                     MergeStats* stats) {
    params.validate();
    const int nb = static_cast<int>(bases.size());
    MergeStats local;

    // Pairwise shared-object counts, evaluated once per pair.
    std::vector<std::vector<int>> sim(nb, std::vector<int>(nb, 0));
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
            sim[i][j] = sim[j][i] = similarity(bases[i], bases[j]);
            ++local.similarity_evaluations;
        }

    // Most-similar lists hold at most k other bases, only ones that actually
    // share members; ties break toward the lower base index.
    std::vector<std::vector<int>> most_similar(nb);
    for (int i = 0; i < nb; ++i) {
        std::vector<int> order;
        for (int j = 0; j < nb; ++j)
            if (j != i && sim[i][j] > 0) order.push_back(j);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return sim[i][a] > sim[i][b]; });
        if (order.size() > static_cast<std::size_t>(params.k_neighbors))
            order.resize(static_cast<std::size_t>(params.k_neighbors));
        std::sort(order.begin(), order.end());
        most_similar[i] = std::move(order);
    }

    // A pair is a best-merge pair when the two lists, each taken together
    // with its own base, share at least min_clu entries.
    auto augmented = [&](int i) {
        std::vector<int> v = most_similar[i];
        v.insert(std::lower_bound(v.begin(), v.end(), i), i);
        return v;
    };
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pair_count(nb, 0);
    for (int i = 0; i < nb; ++i) {
        const std::vector<int> ai = augmented(i);
        for (int j = i + 1; j < nb; ++j) {
            const std::vector<int> aj = augmented(j);
            std::vector<int> common;
            std::set_intersection(ai.begin(), ai.end(), aj.begin(), aj.end(),
                                  std::back_inserter(common));
            if (common.size() >= static_cast<std::size_t>(params.min_clu)) {
                pairs.emplace_back(i, j);
                ++pair_count[i];
                ++pair_count[j];
            }
        }
    }

    std::vector<char> mergeable(nb, 0);
    for (int i = 0; i < nb; ++i) mergeable[i] = pair_count[i] >= params.mu;

    UnionFind uf(static_cast<std::size_t>(nb));
    for (auto [i, j] : pairs)
        if (mergeable[i] && mergeable[j]) uf.unite(i, j);

    std::map<int, std::vector<int>> groups; // root -> constituent bases
    for (int i = 0; i < nb; ++i)
        if (mergeable[i]) groups[uf.find(i)].push_back(i);

    // Emit everything keyed by the smallest constituent base index so the
    // candidate order is stable.
    std::map<int, CandidateRegion> ordered;
    for (auto& [root, group] : groups) {
        std::set<int> dims;
        std::vector<int> members;
        for (int i : group) {
            dims.insert(bases[i].dim);
            members.insert(members.end(), bases[i].members.begin(), bases[i].members.end());
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        ordered[group.front()] =
            CandidateRegion{Subspace(std::vector<int>(dims.begin(), dims.end())),
                            std::move(members)};
    }
    for (int i = 0; i < nb; ++i)
        if (!mergeable[i])
            ordered[i] = CandidateRegion{Subspace({bases[i].dim}), bases[i].members};

    std::vector<CandidateRegion> out;
    out.reserve(ordered.size());
    for (auto& [_, cand] : ordered) out.push_back(std::move(cand));
    if (stats) *stats = local;
    return out;
}

Clustering refine(const Dataset& ds, const std::vector<CandidateRegion>& candidates,
                  const DensityParams& density) {
    density.validate();
    Clustering out;
    out.algorithm = "FIRES";
    for (const auto& cand : candidates) {
        if (cand.members.size() < static_cast<std::size_t>(density.minpts)) continue;
        DensityParams scaled = density;
        scaled.eps = density.eps * std::sqrt(static_cast<double>(cand.subspace.size()));
        DbscanOutcome res = dbscan(ds, cand.subspace, scaled, cand.members);
        for (auto& members : res.clusters)
            out.clusters.push_back({cand.subspace, std::move(members)});
    }
    out.noise = uncovered_ids(out.clusters, ds.n());
    return out;
}

Clustering fires(const Dataset& ds, const FiresParams& params) {
    params.validate();
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<BaseCluster> bases = pre_cluster(ds, params.density);
    std::vector<CandidateRegion> candidates = generate_approximations(bases, params);
    Clustering out = refine(ds, candidates, params.density);

    out.params["eps"] = double_to_string(params.density.eps);
    out.params["minpts"] = std::to_string(params.density.minpts);
    out.params["k_neighbors"] = std::to_string(params.k_neighbors);
    out.params["mu"] = std::to_string(params.mu);
    out.params["min_clu"] = std::to_string(params.min_clu);
    out.clustering_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return out;
}

} // namespace subclust
