#include "latt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

#include "latt/dimension.hpp"
#include "latt/doubling.hpp"
#include "latt/error.hpp"
#include "latt/families.hpp"
#include "latt/galois.hpp"
#include "latt/gentle.hpp"
#include "latt/labelling.hpp"
#include "latt/rng.hpp"
#include "latt/shelling.hpp"
#include "latt/tafs.hpp"

namespace latt {

namespace {

using Instance = std::function<std::optional<std::string>(uint64_t seed, int index)>;

SuiteResult run_parallel(const std::string& name, const Instance& fn, int count,
                         uint64_t seed, int jobs) {
    SuiteResult r;
    r.suite = name;
    r.total = count;
    std::vector<std::optional<std::string>> slots(static_cast<size_t>(count));
    std::atomic<int> next{0};
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= count) break;
            try {
                slots[size_t(i)] = fn(Rng::stream(seed, uint64_t(i)).next(), i);
            } catch (const std::exception& e) {
                slots[size_t(i)] = std::string(e.what());
            }
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (int i = 0; i < count; ++i) {
        if (slots[size_t(i)])
            r.failures.push_back("instance " + std::to_string(i) + ": " + *slots[size_t(i)]);
        else
            ++r.passed;
    }
    return r;
}

long long count_maximal_chains_dp(const Lattice& L, long long clamp) {
    std::vector<long long> paths(static_cast<size_t>(L.n), 0);
    paths[0] = 1;
    for (int x = 0; x < L.n; ++x)
        for (int y : L.upper_covers[size_t(x)])
            paths[size_t(y)] = std::min(clamp, paths[size_t(y)] + paths[size_t(x)]);
    return paths[size_t(L.n - 1)];
}

// script drawing helpers with deterministic redraw streams

ScriptResult draw_script(uint64_t seed, int max_steps, ScriptMode mode,
                         const std::function<bool(const ScriptResult&)>& accept) {
    for (uint64_t attempt = 0;; ++attempt) {
        Rng rng = Rng::stream(seed, attempt);
        int steps = 1 + int(rng.below(uint64_t(max_steps)));
        auto script = random_script(steps, rng.next(), mode);
        auto result = run_script(script);
        if (accept(result)) return result;
    }
}

std::optional<std::string> labelling_instance(uint64_t seed, int) {
    auto res = draw_script(seed, 6, ScriptMode::normal,
                           [](const ScriptResult& r) { return r.lattice.n <= 30; });
    const Lattice& L = res.lattice;
    Rng rng(seed ^ 0x5bd1e995u);
    // random maximal chain, then a random subchain keeping the extrema
    std::vector<int> chain{0};
    while (chain.back() != L.n - 1) {
        const auto& ups = L.upper_covers[size_t(chain.back())];
        chain.push_back(ups[size_t(rng.below(ups.size()))]);
    }
    std::vector<int> sub{0};
    for (size_t i = 1; i + 1 < chain.size(); ++i)
        if (rng.below(2)) sub.push_back(chain[i]);
    if (L.n > 1) sub.push_back(L.n - 1);
    auto rep = verify_labelling_theorem(L, make_chain(L, sub));  // throws on violation
    (void)rep;
    return std::nullopt;
}

// interval-script sampler that abandons an attempt before any oversized
// doubling is materialized
DoublingScript draw_bounded_interval_script(uint64_t seed, int max_steps, int max_n,
                                            long long max_chains) {
    for (uint64_t attempt = 0;; ++attempt) {
        Rng rng = Rng::stream(seed, attempt);
        int steps = 1 + int(rng.below(uint64_t(max_steps)));
        DoublingScript script;
        Lattice L = build_lattice(1, {}, {""});
        bool ok = true;
        for (int s = 0; s < steps && ok; ++s) {
            int a = -1, b = -1;
            for (int tries = 0; tries < 64; ++tries) {
                a = int(rng.below(uint64_t(L.n)));
                b = int(rng.below(uint64_t(L.n)));
                if (!L.leq(a, b)) std::swap(a, b);
                if (L.leq(a, b)) break;
                a = b = -1;
            }
            if (a < 0) {
                ok = false;
                break;
            }
            Bits C = L.up[size_t(a)] & L.down[size_t(b)];
            if (L.n + C.count() > max_n) {
                ok = false;
                break;
            }
            L = double_lattice(L, C);
            ScriptStep step;
            step.is_interval_sugar = true;
            step.a = a;
            step.b = b;
            script.steps.push_back(step);
        }
        if (!ok) continue;
        if (count_maximal_chains_dp(L, max_chains + 1) > max_chains) continue;
        return script;
    }
}

std::optional<std::string> doubling_instance(uint64_t seed, int) {
    auto res = run_script(draw_bounded_interval_script(seed, 12, 220, 2000));
    const Lattice& L = res.lattice;
    auto verdict = certify(res.cert);
    bool first_principles = extremality(L).extremal;
    bool lm = left_modular(L).lm_chain.has_value();
    auto fa = facet_adjacency(L, 100000);
    bool no_two_sources = !disjoint_source_sets(fa.graph).found.has_value();
    if (verdict.extremal != first_principles)
        return "certificate extremality disagrees with first principles";
    if (verdict.left_modular != lm)
        return "certificate left-modularity disagrees with first principles";
    if (verdict.extremal != verdict.left_modular)
        return "extremal and left modular must agree on interval scripts";
    if (verdict.extremal != no_two_sources)
        return "extremality must match the absence of two disjoint source sets";
    return std::nullopt;
}

std::optional<std::string> galois_instance(uint64_t seed, int) {
    auto res = draw_script(seed, 9, ScriptMode::force_spine,
                           [](const ScriptResult& r) { return r.lattice.n <= 400; });
    const Lattice& L = res.lattice;
    auto sd = semidistributivity(L);
    if (!(sd.is_jsd && sd.is_msd)) return "interval doublings must give a SD lattice";
    if (!extremality(L).extremal) return "spine-hitting scripts must give extremal lattices";
    if (!roundtrip_check(L)) return "reconstruction is not isomorphic to the lattice";

    auto phi = length_spine(L).longest_chain;
    auto G = galois_graph(L, phi);
    if (count_independent_sets(G) != (unsigned long long)(L.n))
        return "independent set count differs from the element count";

    auto cn = chain_numbering(L, phi);
    for (size_t i = 0; i < cn.j.size(); ++i)
        if (sd.table.kappa[size_t(cn.j[i])] != cn.m[i])
            return "kappa(j_i) = m_i fails under the chain numbering";

    auto cjg = canonical_join_graph(L);
    auto comp = complement_of(G);
    for (int v = 0; v < comp.m; ++v)
        if (cjg.adj[size_t(v)] != comp.adj[size_t(v)])
            return "canonical join graph differs from the complement Galois graph";

    // chain invariance: a couple of other longest chains must reconstruct the
    // same lattice up to isomorphism
    Rng rng(seed ^ 0x2545f491u);
    auto ls = length_spine(L);
    for (int trial = 0; trial < 2; ++trial) {
        std::vector<int> chain{0};
        while (chain.back() != L.n - 1) {
            std::vector<int> nexts;
            for (int y : L.upper_covers[size_t(chain.back())])
                if (ls.height[size_t(y)] == ls.height[size_t(chain.back())] + 1 &&
                    ls.height[size_t(y)] + ls.depth[size_t(y)] == ls.length)
                    nexts.push_back(y);
            chain.push_back(nexts[size_t(rng.below(nexts.size()))]);
        }
        auto alt = galois_graph(L, make_chain(L, chain));
        if (!are_isomorphic(lattice_from_galois(alt).lattice, L))
            return "reconstruction depends on the chain choice";
    }
    return std::nullopt;
}

std::optional<std::string> dimension_instance(uint64_t seed, int) {
    auto res = draw_script(seed, 8, ScriptMode::force_spine, [](const ScriptResult& r) {
        if (r.lattice.n > 200) return false;
        return int(critical_pairs(r.lattice).pairs.size()) <= 20;
    });
    const Lattice& L = res.lattice;
    int via_oracle = dimension_oracle(L, 20);
    int via_galois = L.n > 1 ? dim_sd_extremal(L) : 1;
    if (via_oracle != via_galois)
        return "cover-set oracle and chromatic dimension disagree (" +
               std::to_string(via_oracle) + " vs " + std::to_string(via_galois) + ")";
    return std::nullopt;
}

Graph random_triangle_free(Rng& rng, int max_vertices, int max_edges) {
    int n = 4 + int(rng.below(uint64_t(max_vertices - 3)));
    Graph G(n);
    int attempts = max_edges * 4;
    int added = 0;
    while (attempts-- > 0 && added < max_edges) {
        int u = int(rng.below(uint64_t(n))), v = int(rng.below(uint64_t(n)));
        if (u == v || G.has_edge(u, v)) continue;
        if ((G.adj[size_t(u)] & G.adj[size_t(v)]).any()) continue;  // would close a triangle
        G.add_edge(u, v);
        ++added;
    }
    return G;
}

bool has_directed_3_walk(const DirectedGraph& D) {
    for (int a = 0; a < D.m; ++a)
        for (int b = D.out[size_t(a)].first(); b >= 0; b = D.out[size_t(a)].next(b))
            for (int c = D.out[size_t(b)].first(); c >= 0; c = D.out[size_t(b)].next(c))
                if (D.out[size_t(c)].any()) return true;
    return false;
}

std::optional<std::string> tafs_instance(uint64_t seed, int index) {
    if (index == 0) {
        counterexample_pipeline();  // throws PipelineAssertionFailed on any stage
        return std::nullopt;
    }
    Rng rng(seed);
    Graph G = random_triangle_free(rng, 9, 12);
    bool by_chi = admits_tafs(G, TafsMode::trianglefree_chi);
    bool by_sweep = admits_tafs(G, TafsMode::orientation_search);
    if (by_chi != by_sweep) return "triangle-free criterion disagrees with the sweep";

    // colorings and 3-walk-free orientations translate into one another
    auto col = chromatic_number(G);
    if (col.chi <= 3) {
        DirectedGraph D(G.m);
        for (auto [u, v] : G.edges()) {
            if (col.coloring[size_t(u)] < col.coloring[size_t(v)])
                D.add_edge(u, v);
            else
                D.add_edge(v, u);
        }
        if (has_directed_3_walk(D))
            return "coloring-induced orientation has a directed 3-walk";
        // longest-walk levels recover a proper coloring
        auto order = D.topological_order();
        std::vector<int> level(static_cast<size_t>(G.m), 0);
        for (int v : order)
            for (int w = D.out[size_t(v)].first(); w >= 0; w = D.out[size_t(v)].next(w))
                level[size_t(w)] = std::max(level[size_t(w)], level[size_t(v)] + 1);
        for (auto [u, v] : G.edges()) {
            if (level[size_t(u)] == level[size_t(v)])
                return "walk-length levels are not a proper coloring";
            if (level[size_t(u)] > 2 || level[size_t(v)] > 2)
                return "walk-length levels exceed three colors";
        }
    }

    // complements commute with induced subgraphs
    int keep_count = std::max(1, G.m - 1 - int(rng.below(3)));
    std::vector<int> keep;
    for (int v = 0; v < keep_count; ++v) keep.push_back(v);
    DirectedGraph D(G.m);
    for (auto [u, v] : G.edges()) {
        if (rng.below(2))
            D.add_edge(u, v);
        else
            D.add_edge(v, u);
    }
    Graph a = induced_subgraph(complement_of(D), keep);
    Graph b = complement_of(induced_subgraph(D, keep));
    for (int v = 0; v < a.m; ++v)
        if (a.adj[size_t(v)] != b.adj[size_t(v)])
            return "complement does not commute with induced subgraph";
    return std::nullopt;
}

std::optional<std::string> families_instance(uint64_t seed, int index) {
    (void)seed;
    switch (index % 5) {
        case 0: {
            int n = 1 + index % 5;
            auto f = hochschild(n);
            if (n > 1 && dim_sd_extremal(f.lattice) != n) return "hochschild dimension";
            if (count_independent_sets(f.galois) != (unsigned long long)(f.lattice.n))
                return "hochschild element count";
            break;
        }
        case 1: {
            int m = index % 3, n = 1 + index % 2;
            auto f = bubble(m, n);
            if (f.lattice.n > 1 && dim_sd_extremal(f.lattice) != m + n)
                return "bubble dimension";
            break;
        }
        case 2: {
            int m = 1 + index % 2, n = 1 + index % 3;
            auto W = word_lattice(m, n);
            if (W.n > 1 && dim_sd_extremal(W) != n) return "word lattice dimension";
            break;
        }
        case 3: {
            Composition alpha{{1 + index % 2, 1, 1 + (index / 2) % 2}};
            auto T = parabolic_tamari(alpha);
            if (dim_sd_extremal(T.lattice) != alpha.n() - alpha.max_part())
                return "parabolic Tamari dimension";
            auto comp = complement_of(T.galois);
            for (int v = 0; v < comp.m; ++v)
                if (comp.adj[size_t(v)] != T.compatibility.adj[size_t(v)])
                    return "arc compatibility differs from the complement Galois graph";
            break;
        }
        case 4: {
            int n = 2 + index % 4;
            auto T = path_quiver(n, unsigned(index) % (1u << (n - 1)));
            if (torsion_dim(T) != n) return "path quiver torsion dimension";
            break;
        }
    }
    return std::nullopt;
}

std::optional<std::string> dilworth_instance(uint64_t seed, int) {
    Rng rng(seed);
    // random poset on <= 8 points, then its lattice of order ideals
    int k = 2 + int(rng.below(7));
    std::vector<Bits> below(static_cast<size_t>(k), Bits(k));
    for (int i = 0; i < k; ++i) below[size_t(i)].set(i);
    for (int j = 1; j < k; ++j)
        for (int i = 0; i < j; ++i)
            if (rng.below(3) == 0) below[size_t(j)] |= below[size_t(i)];

    // enumerate ideals as bitmasks
    std::vector<uint32_t> ideals;
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool closed = true;
        for (int j = 0; j < k && closed; ++j)
            if ((mask >> j) & 1)
                for (int i = 0; i < k && closed; ++i)
                    if (below[size_t(j)].test(i) && !((mask >> i) & 1)) closed = false;
        if (closed) ideals.push_back(mask);
    }
    std::sort(ideals.begin(), ideals.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    int N = int(ideals.size());
    CoverList covers;
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            if ((ideals[size_t(x)] & ~ideals[size_t(y)]) == 0 &&
                __builtin_popcount(ideals[size_t(y)]) ==
                    __builtin_popcount(ideals[size_t(x)]) + 1)
                covers.emplace_back(x, y);
    Lattice L = build_lattice(N, covers);

    if (N <= 1) return std::nullopt;
    int dim = dim_sd_extremal(L);
    int width = width_of(subposet_jirr(L));
    if (dim != width)
        return "distributive dimension " + std::to_string(dim) + " differs from width " +
               std::to_string(width);
    return std::nullopt;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"labelling", "doubling", "galois", "dimension", "tafs", "families", "dilworth"};
}

SuiteResult run_suite(const std::string& name, int count, uint64_t seed, int jobs) {
    Instance fn;
    if (name == "labelling" || name == "labelling-theorem")
        fn = labelling_instance;
    else if (name == "doubling" || name == "doubling-equivalences")
        fn = doubling_instance;
    else if (name == "galois" || name == "galois-roundtrip")
        fn = galois_instance;
    else if (name == "dimension" || name == "dimension-cross-oracle")
        fn = dimension_instance;
    else if (name == "tafs")
        fn = tafs_instance;
    else if (name == "families")
        fn = families_instance;
    else if (name == "dilworth")
        fn = dilworth_instance;
    else
        fail(errc::suite_unknown, "no suite named " + name);
    return run_parallel(name, fn, count, seed, jobs);
}

}  // namespace latt
