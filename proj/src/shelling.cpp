#include "latt/shelling.hpp"

#include <algorithm>

#include "latt/error.hpp"
#include "latt/labelling.hpp"

namespace latt {

namespace {

void chains_dfs(const Lattice& L, int cur, Bits& acc, std::vector<Bits>& out,
                long long cap) {
    if (cur == L.n - 1) {
        require(static_cast<long long>(out.size()) < cap, errc::cap_exceeded,
                "too many maximal chains");
        out.push_back(acc);
        return;
    }
    for (int y : L.upper_covers[cur]) {
        acc.set(y);
        chains_dfs(L, y, acc, out, cap);
        acc.reset(y);
    }
}

}  // namespace

std::vector<Bits> maximal_chains(const Lattice& L, long long cap) {
    std::vector<Bits> out;
    Bits acc(L.n);
    acc.set(0);
    chains_dfs(L, 0, acc, out, cap);
    return out;
}

FAGraph facet_adjacency(const Lattice& L, long long cap) {
    FAGraph fa;
    fa.chains = maximal_chains(L, cap);
    int k = int(fa.chains.size());
    fa.graph = DirectedGraph(k);
    for (int f = 0; f < k; ++f)
        for (int g = 0; g < k; ++g) {
            if (f == g) continue;
            int common = (fa.chains[size_t(f)] & fa.chains[size_t(g)]).count();
            if (common == fa.chains[size_t(g)].count() - 1) fa.graph.add_edge(f, g);
        }
    return fa;
}

SourceSetReport disjoint_source_sets(const DirectedGraph& g, bool enumerate_all) {
    SourceSetReport rep;
    int k = g.m;

    // ancestor closure of v: everything with a directed path into v
    std::vector<Bits> anc(static_cast<size_t>(k), Bits(k));
    for (int v = 0; v < k; ++v) {
        Bits& a = anc[size_t(v)];
        a.set(v);
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = a.first(); x >= 0; x = a.next(x)) {
                Bits add = g.in[size_t(x)] - a;
                if (add.any()) {
                    a |= add;
                    grew = true;
                }
            }
        }
    }
    for (int u = 0; u < k && !rep.found; ++u)
        for (int v = u + 1; v < k; ++v)
            if (!anc[size_t(u)].intersects(anc[size_t(v)])) {
                rep.found = std::make_pair(anc[size_t(u)], anc[size_t(v)]);
                break;
            }

    if (enumerate_all) {
        require(k <= 24, errc::cap_exceeded, "source-set enumeration caps at 24 vertices");
        std::vector<Bits> all;
        for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << k); ++mask) {
            Bits X(k);
            for (int v = 0; v < k; ++v)
                if ((mask >> v) & 1) X.set(v);
            bool closed = true;
            for (int x = X.first(); x >= 0 && closed; x = X.next(x))
                if (!g.in[size_t(x)].subset_of(X)) closed = false;
            if (closed) all.push_back(X);
        }
        rep.all_source_sets = std::move(all);
    }
    return rep;
}

ShellVerdict shellable_verdict(const Lattice& L, const DoublingCertificate* cert,
                               long long chain_cap) {
    ShellVerdict v;
    if (cert && cert->congruence_uniform) {
        bool ext = certify(*cert).extremal;
        v.verdict = ext ? Shellability::Shellable : Shellability::NotShellable;
        v.reason = ext ? "congruence uniform and extremal"
                       : "congruence uniform but not extremal";
        return v;
    }
    try {
        auto fa = facet_adjacency(L, chain_cap);
        if (disjoint_source_sets(fa.graph).found) {
            v.verdict = Shellability::NotShellable;
            v.reason = "facet adjacency graph has two disjoint source sets";
            return v;
        }
    } catch (const error& e) {
        if (e.code != errc::cap_exceeded) throw;
        // fall through: chain count too large to decide via FA
    }
    if (left_modular(L).lm_chain) {
        v.verdict = Shellability::Shellable;
        v.reason = "maximal left modular chain exists";
        return v;
    }
    v.verdict = Shellability::Unknown;
    v.reason = "no certificate, no disjoint source sets, no left modular chain";
    return v;
}

namespace {

bool shelling_ok_prefix(const std::vector<Bits>& chains, const std::vector<int>& order,
                        int j) {
    // pairwise criterion against facet order[j]
    const Bits& Fj = chains[size_t(order[size_t(j)])];
    int fj = Fj.count();
    for (int i = 0; i < j; ++i) {
        Bits inter = chains[size_t(order[size_t(i)])] & Fj;
        bool ok = false;
        for (int l = 0; l < j && !ok; ++l) {
            Bits with_l = chains[size_t(order[size_t(l)])] & Fj;
            if (inter.subset_of(with_l) && with_l.count() == fj - 1) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

bool shelling_backtrack(const std::vector<Bits>& chains, std::vector<int>& order,
                        std::vector<char>& used, int depth) {
    int k = int(chains.size());
    if (depth == k) return true;
    for (int f = 0; f < k; ++f) {
        if (used[size_t(f)]) continue;
        order[size_t(depth)] = f;
        used[size_t(f)] = 1;
        if (depth == 0 || shelling_ok_prefix(chains, order, depth))
            if (shelling_backtrack(chains, order, used, depth + 1)) return true;
        used[size_t(f)] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> brute_force_shelling(const Lattice& L, int cap_facets) {
    auto chains = maximal_chains(L, cap_facets + 1);
    require(int(chains.size()) <= cap_facets, errc::cap_exceeded,
            "facet count above the brute-force cap");
    std::vector<int> order(chains.size(), -1);
    std::vector<char> used(chains.size(), 0);
    if (!shelling_backtrack(chains, order, used, 0)) return std::nullopt;
    return order;
}

}  // namespace latt
