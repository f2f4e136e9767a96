#include <doctest.h>

#include <algorithm>
#include <map>

#include "latt/doubling.hpp"
#include "latt/error.hpp"
#include "latt/shelling.hpp"
#include "test_helpers.hpp"

using namespace latt;
using namespace latt::test;

namespace {

// extremal congruence uniform lattice with nine maximal chains, whose facet
// adjacency graph has exactly two source sets
Lattice fig_extremal() {
    return build_lattice(
        14,
        {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 7}, {5, 9},
         {6, 8}, {6, 10}, {8, 9}, {8, 11}, {10, 11}, {9, 12}, {11, 12}, {7, 13}, {12, 13}},
        {"0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "1"});
}

Bits chain_of(const Lattice& L, const std::vector<int>& interior) {
    Bits b(L.n);
    b.set(0);
    b.set(L.n - 1);
    for (int x : interior) b.set(x);
    return b;
}

}  // namespace

TEST_CASE("maximal chains") {
    CHECK(maximal_chains(chain(4)).size() == 1);
    CHECK(maximal_chains(boolean2()).size() == 2);

    auto F = nonextremal_cu();
    auto chains = maximal_chains(F);
    REQUIRE(chains.size() == 6);
    // interiors: begi, bdi, bdh, adi, adh, acfh with a=1 b=2 c=3 d=4 e=5 f=6 g=7 h=8 i=9
    std::vector<Bits> expected{
        chain_of(F, {2, 5, 7, 9}), chain_of(F, {2, 4, 9}), chain_of(F, {2, 4, 8}),
        chain_of(F, {1, 4, 9}),    chain_of(F, {1, 4, 8}), chain_of(F, {1, 3, 6, 8})};
    for (const auto& e : expected)
        CHECK(std::count(chains.begin(), chains.end(), e) == 1);

    CHECK_THROWS_AS(maximal_chains(F, 3), error);
}

TEST_CASE("facet adjacency of the non-extremal sample") {
    auto F = nonextremal_cu();
    auto fa = facet_adjacency(F);
    auto id = [&](const Bits& c) {
        return int(std::find(fa.chains.begin(), fa.chains.end(), c) - fa.chains.begin());
    };
    int begi = id(chain_of(F, {2, 5, 7, 9})), bdi = id(chain_of(F, {2, 4, 9})),
        bdh = id(chain_of(F, {2, 4, 8})), adi = id(chain_of(F, {1, 4, 9})),
        adh = id(chain_of(F, {1, 4, 8})), acfh = id(chain_of(F, {1, 3, 6, 8}));

    CHECK(fa.graph.has_edge(begi, bdi));
    CHECK_FALSE(fa.graph.has_edge(bdi, begi));
    CHECK(fa.graph.has_edge(acfh, adh));
    CHECK_FALSE(fa.graph.has_edge(adh, acfh));
    for (auto [x, y] : {std::pair{bdi, bdh}, {adi, adh}, {bdi, adi}, {bdh, adh}}) {
        CHECK(fa.graph.has_edge(x, y));
        CHECK(fa.graph.has_edge(y, x));
    }
    CHECK(fa.graph.edge_count() == 10);

    auto rep = disjoint_source_sets(fa.graph);
    REQUIRE(rep.found.has_value());
    Bits s1 = rep.found->first, s2 = rep.found->second;
    Bits begi_only(fa.graph.m), acfh_only(fa.graph.m);
    begi_only.set(begi);
    acfh_only.set(acfh);
    CHECK(((s1 == begi_only && s2 == acfh_only) || (s1 == acfh_only && s2 == begi_only)));
}

TEST_CASE("facet adjacency of the extremal sample") {
    auto L = fig_extremal();
    auto fa = facet_adjacency(L);
    REQUIRE(fa.chains.size() == 9);
    auto id = [&](const std::vector<int>& interior) {
        Bits c = chain_of(L, interior);
        return int(std::find(fa.chains.begin(), fa.chains.end(), c) - fa.chains.begin());
    };
    // a=1 b=2 c=3 d=4 e=5 f=6 g=7 h=8 i=9 j=10 k=11 l=12
    int A = id({1, 3, 5, 9, 12}), B = id({1, 3, 5, 7}), C = id({2, 3, 5, 9, 12}),
        D = id({2, 3, 5, 7}), E = id({2, 4, 5, 9, 12}), F = id({2, 4, 5, 7}),
        G = id({2, 4, 6, 8, 9, 12}), H = id({2, 4, 6, 8, 11, 12}),
        I = id({2, 4, 6, 10, 11, 12});
    for (int v : {A, B, C, D, E, F, G, H, I}) REQUIRE(v < 9);

    // one-way edges G->E, E->F, C->D, A->B; the rest are the drawn two-cycles
    CHECK(fa.graph.has_edge(G, E));
    CHECK_FALSE(fa.graph.has_edge(E, G));
    CHECK(fa.graph.has_edge(E, F));
    CHECK_FALSE(fa.graph.has_edge(F, E));
    CHECK(fa.graph.has_edge(C, D));
    CHECK_FALSE(fa.graph.has_edge(D, C));
    CHECK(fa.graph.has_edge(A, B));
    CHECK_FALSE(fa.graph.has_edge(B, A));
    for (auto [x, y] : {std::pair{I, H}, {H, G}, {E, C}, {C, A}, {F, D}, {D, B}}) {
        CHECK(fa.graph.has_edge(x, y));
        CHECK(fa.graph.has_edge(y, x));
    }

    auto rep = disjoint_source_sets(fa.graph, true);
    CHECK_FALSE(rep.found.has_value());
    REQUIRE(rep.all_source_sets.has_value());
    REQUIRE(rep.all_source_sets->size() == 2);
    Bits small(9), big(9);
    for (int v : {I, H, G}) small.set(v);
    for (int v : {I, H, G, E, C, A}) big.set(v);
    CHECK(std::count(rep.all_source_sets->begin(), rep.all_source_sets->end(), small) == 1);
    CHECK(std::count(rep.all_source_sets->begin(), rep.all_source_sets->end(), big) == 1);
}

TEST_CASE("one-vertex graph has no source sets") {
    DirectedGraph g(1);
    auto rep = disjoint_source_sets(g, true);
    CHECK_FALSE(rep.found.has_value());
    CHECK(rep.all_source_sets->empty());
}

TEST_CASE("shellability verdicts") {
    // non-extremal congruence uniform: not shellable, with or without a script
    auto F = nonextremal_cu();
    CHECK(shellable_verdict(F).verdict == Shellability::NotShellable);

    DoublingScript s;
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {0, 0}, {0, 0}, {0, 2}, {0, 4}, {2, 2}, {7, 7}}) {
        ScriptStep st;
        st.is_interval_sugar = true;
        st.a = a;
        st.b = b;
        s.steps.push_back(st);
    }
    auto res = run_script(s);
    CHECK(shellable_verdict(res.lattice, &res.cert).verdict == Shellability::NotShellable);

    CHECK(shellable_verdict(fig_extremal()).verdict == Shellability::Shellable);
    CHECK(shellable_verdict(n5()).verdict == Shellability::Shellable);
    CHECK(shellable_verdict(m3()).verdict == Shellability::Shellable);
}

TEST_CASE("brute force shelling") {
    auto B = boolean2();
    auto order = brute_force_shelling(B);
    REQUIRE(order.has_value());
    CHECK(order->size() == 2);

    CHECK_FALSE(brute_force_shelling(nonextremal_cu()).has_value());

    auto P = n5();
    auto op = brute_force_shelling(P);
    REQUIRE(op.has_value());
    // the first facet of any shelling is a longest chain
    auto chains = maximal_chains(P);
    CHECK(chains[size_t(op->front())].count() == size_t(length_spine(P).length) + 1);

    CHECK_THROWS_AS(brute_force_shelling(fig_extremal(), 5), error);
}

namespace {

// facet adjacency of a doubling built from FA(L) by the transfer rules, as an
// independent oracle against the direct computation on L[C]
struct TransferFA {
    std::vector<Bits> chains;          // chains of L[C], in the doubled id space
    std::vector<std::vector<int>> adj;  // directed edges by chain index
};

TransferFA transfer_fa(const Lattice& L, const Bits& C) {
    // replicate the element enumeration of the doubling: (parent, eps) lex
    Bits I = ideal_of(L, C);
    std::vector<int> id0(static_cast<size_t>(L.n), -1), id1(static_cast<size_t>(L.n), -1);
    int next = 0;
    for (int x = 0; x < L.n; ++x) {
        if (I.test(x)) id0[size_t(x)] = next++;
        if (!I.test(x) || C.test(x)) id1[size_t(x)] = next++;
    }
    auto psi = [&](int a) { return I.test(a) ? id0[size_t(a)] : id1[size_t(a)]; };

    auto base = facet_adjacency(L);
    int nb = int(base.chains.size());
    std::vector<std::vector<int>> meet_c(static_cast<size_t>(nb));
    for (int f = 0; f < nb; ++f)
        meet_c[size_t(f)] = (base.chains[size_t(f)] & C).to_vector();

    TransferFA out;
    std::vector<std::pair<int, int>> verts;  // (base chain, i)
    for (int f = 0; f < nb; ++f) {
        int k = int(meet_c[size_t(f)].size());
        for (int i = k == 0 ? 0 : 1; i <= k; ++i) {
            Bits chain(next);
            for (int a = base.chains[size_t(f)].first(); a >= 0;
                 a = base.chains[size_t(f)].next(a)) {
                if (C.test(a)) continue;
                chain.set(psi(a));
            }
            for (int j = 1; j <= k; ++j) {
                int c = meet_c[size_t(f)][size_t(j - 1)];
                if (j <= i) chain.set(id0[size_t(c)]);
                if (j >= i) chain.set(id1[size_t(c)]);
            }
            verts.emplace_back(f, i);
            out.chains.push_back(chain);
        }
    }
    out.adj.assign(verts.size(), {});
    for (size_t s = 0; s < verts.size(); ++s)
        for (size_t t = 0; t < verts.size(); ++t) {
            if (s == t) continue;
            auto [f, i] = verts[s];
            auto [g, j] = verts[t];
            int kg = int(meet_c[size_t(g)].size());
            bool edge = false;
            if (f == g && kg >= 2 && std::abs(i - j) == 1) edge = true;  // ladder rungs
            if (f != g && base.graph.has_edge(f, g)) {
                if (kg == 0)
                    edge = true;
                else if (!meet_c[size_t(f)].empty() && i >= 1 && j >= 1)
                    edge = (out.chains[s] & out.chains[t]).count() ==
                           base.chains[size_t(g)].count();
            }
            if (edge) out.adj[s].push_back(int(t));
        }
    return out;
}

void check_transfer_matches_direct(const Lattice& L, const Bits& C) {
    auto direct = facet_adjacency(double_lattice(L, C));
    auto transferred = transfer_fa(L, C);
    REQUIRE(direct.chains.size() == transferred.chains.size());
    // map transferred chains onto direct indices
    std::vector<int> at(transferred.chains.size(), -1);
    for (size_t s = 0; s < transferred.chains.size(); ++s) {
        auto it = std::find(direct.chains.begin(), direct.chains.end(),
                            transferred.chains[s]);
        REQUIRE(it != direct.chains.end());
        at[s] = int(it - direct.chains.begin());
    }
    int direct_edges = direct.graph.edge_count();
    int transfer_edges = 0;
    for (size_t s = 0; s < transferred.adj.size(); ++s) {
        transfer_edges += int(transferred.adj[s].size());
        for (int t : transferred.adj[s])
            CHECK(direct.graph.has_edge(at[s], at[size_t(t)]));
    }
    CHECK(direct_edges == transfer_edges);
}

}  // namespace

TEST_CASE("facet adjacency of a doubling follows the transfer rules") {
    // fixed cases: interval and non-interval convex sets
    auto P = n5();
    check_transfer_matches_direct(P, P.up[1] & P.down[4]);
    Bits atoms(P.n);
    atoms.set(1);
    atoms.set(3);
    check_transfer_matches_direct(P, atoms);

    for (uint64_t seed : {3u, 8u, 15u, 27u}) {
        auto L = run_script(random_script(4, seed, ScriptMode::normal)).lattice;
        if (L.n > 40) continue;
        Rng rng(seed * 31);
        // convex hull of two random elements
        Bits S(L.n);
        S.set(int(rng.below(uint64_t(L.n))));
        S.set(int(rng.below(uint64_t(L.n))));
        Bits C(L.n);
        for (int x = S.first(); x >= 0; x = S.next(x))
            for (int y = S.first(); y >= 0; y = S.next(y))
                if (L.leq(x, y)) C |= L.up[size_t(x)] & L.down[size_t(y)];
        if (C.none()) continue;
        check_transfer_matches_direct(L, C);
    }
}

TEST_CASE("brute force agrees with the verdict on small lattices") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto res = run_script(random_script(4, seed, ScriptMode::uniform_interval));
        const auto& L = res.lattice;
        auto chains = maximal_chains(L, 2000);
        if (chains.size() > 8) continue;
        auto verdict = shellable_verdict(L, &res.cert).verdict;
        bool found = brute_force_shelling(L).has_value();
        if (verdict == Shellability::Shellable) CHECK(found);
        if (verdict == Shellability::NotShellable) CHECK_FALSE(found);
    }
}
