#include "latt/tafs.hpp"

#include <algorithm>

#include <json.hpp>

#include "latt/coloring.hpp"
#include "latt/error.hpp"

namespace latt {

const char* arrow_kind_name(ArrowKind k) {
    switch (k) {
        case ArrowKind::plain: return "plain";
        case ArrowKind::mono: return "mono";
        case ArrowKind::epi: return "epi";
        case ArrowKind::both: return "both";
    }
    return "?";
}

bool DecoratedMultigraph::has_arrow(int u, int v) const {
    for (const auto& a : arrows)
        if (a.src == u && a.dst == v) return true;
    return false;
}

DirectedGraph DecoratedMultigraph::simple() const {
    DirectedGraph G(m);
    for (const auto& a : arrows)
        if (a.src != a.dst) G.add_edge(a.src, a.dst);
    return G;
}

DecoratedMultigraph classify_arrows(const DecoratedMultigraph& G) {
    DirectedGraph S = G.simple();
    DecoratedMultigraph R;
    R.m = G.m;
    for (const auto& a : G.arrows) {
        // mono: every z with z -> src also points at dst; the implicit loops
        // contribute z = src (satisfied by this arrow) and z = dst (needs a
        // 2-cycle to matter, covered by the dst test below)
        bool mono = true;
        for (int z = S.in[size_t(a.src)].first(); z >= 0; z = S.in[size_t(a.src)].next(z))
            if (z != a.dst && !S.has_edge(z, a.dst)) { mono = false; break; }
        bool epi = true;
        for (int z = S.out[size_t(a.dst)].first(); z >= 0; z = S.out[size_t(a.dst)].next(z))
            if (z != a.src && !S.has_edge(a.src, z)) { epi = false; break; }
        ArrowKind k = mono && epi ? ArrowKind::both
                      : mono      ? ArrowKind::mono
                      : epi       ? ArrowKind::epi
                                  : ArrowKind::plain;
        R.arrows.push_back({a.src, a.dst, k});
    }
    return R;
}

TafsCheck is_tafs(const DecoratedMultigraph& G) {
    TafsCheck r;
    std::vector<Bits> epi_out(static_cast<size_t>(G.m), Bits(G.m)), mono_in(static_cast<size_t>(G.m), Bits(G.m));
    std::vector<Bits> mono_out(static_cast<size_t>(G.m), Bits(G.m));
    for (const auto& a : G.arrows) {
        bool is_mono = a.kind == ArrowKind::mono || a.kind == ArrowKind::both;
        bool is_epi = a.kind == ArrowKind::epi || a.kind == ArrowKind::both;
        if (is_epi) epi_out[size_t(a.src)].set(a.dst);
        if (is_mono) {
            mono_in[size_t(a.dst)].set(a.src);
            mono_out[size_t(a.src)].set(a.dst);
        }
    }
    for (int x = 0; x < G.m; ++x) {
        for (int y = epi_out[size_t(x)].first(); y >= 0; y = epi_out[size_t(x)].next(y)) {
            if (y == x) continue;
            if (epi_out[size_t(y)].test(x)) {
                r.violation = "order condition: " + std::to_string(x) + " <->> " +
                              std::to_string(y);
                return r;
            }
            if (mono_in[size_t(x)].test(y)) {
                r.violation = "brick condition: " + std::to_string(x) + " ->> " +
                              std::to_string(y) + " and back mono";
                return r;
            }
        }
        for (int y = mono_out[size_t(x)].first(); y >= 0; y = mono_out[size_t(x)].next(y))
            if (y != x && mono_out[size_t(y)].test(x)) {
                r.violation = "order condition: " + std::to_string(x) + " <-> " +
                              std::to_string(y) + " (mono)";
                return r;
            }
    }
    for (const auto& a : G.arrows) {
        if (a.src == a.dst) continue;
        Bits from = epi_out[size_t(a.src)];
        from.set(a.src);  // loop is epi
        Bits into = mono_in[size_t(a.dst)];
        into.set(a.dst);  // loop is mono
        if (!from.intersects(into)) {
            r.violation = "multiplication fails on " + std::to_string(a.src) + " -> " +
                          std::to_string(a.dst);
            return r;
        }
    }
    r.ok = true;
    return r;
}

namespace {

// fast sweep specialization: vertices as uint32 masks
bool orientation_sweep(const std::vector<std::pair<int, int>>& edges, int m) {
    int k = int(edges.size());
    std::vector<uint32_t> out(static_cast<size_t>(m)), in(static_cast<size_t>(m));
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        std::fill(out.begin(), out.end(), 0u);
        std::fill(in.begin(), in.end(), 0u);
        for (int e = 0; e < k; ++e) {
            auto [u, v] = edges[size_t(e)];
            if ((mask >> e) & 1) std::swap(u, v);
            out[size_t(u)] |= 1u << v;
            in[size_t(v)] |= 1u << u;
        }
        bool ok = true;
        std::vector<uint32_t> epi_out(static_cast<size_t>(m)), mono_in(static_cast<size_t>(m));
        for (int e = 0; e < k && ok; ++e) {
            auto [u, v] = edges[size_t(e)];
            if ((mask >> e) & 1) std::swap(u, v);
            bool mono = (in[size_t(u)] & ~in[size_t(v)] & ~(1u << v)) == 0;
            bool epi = (out[size_t(v)] & ~out[size_t(u)] & ~(1u << u)) == 0;
            if (mono) mono_in[size_t(v)] |= 1u << u;
            if (epi) epi_out[size_t(u)] |= 1u << v;
        }
        // orientations of a simple graph have no 2-cycles, so only the
        // multiplication condition can fail
        for (int e = 0; e < k && ok; ++e) {
            auto [u, v] = edges[size_t(e)];
            if ((mask >> e) & 1) std::swap(u, v);
            uint32_t from = epi_out[size_t(u)] | (1u << u);
            uint32_t into = mono_in[size_t(v)] | (1u << v);
            if (!(from & into)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

bool admits_tafs(const Graph& G, TafsMode mode, int edge_cap) {
    if (mode == TafsMode::trianglefree_chi) {
        require(G.triangle_free(), errc::not_triangle_free,
                "the chi criterion needs a triangle-free graph");
        return chromatic_number(G).chi <= 3;
    }
    auto edges = G.edges();
    require(int(edges.size()) <= edge_cap, errc::cap_exceeded,
            "orientation sweep caps at " + std::to_string(edge_cap) + " edges");
    // compact away isolated vertices to fit the 32-bit fast path
    std::vector<int> remap(static_cast<size_t>(G.m), -1);
    int mm = 0;
    for (auto& [u, v] : edges) {
        if (remap[size_t(u)] < 0) remap[size_t(u)] = mm++;
        if (remap[size_t(v)] < 0) remap[size_t(v)] = mm++;
        u = remap[size_t(u)];
        v = remap[size_t(v)];
    }
    require(mm <= 32, errc::cap_exceeded, "orientation sweep caps at 32 vertices");
    if (edges.empty()) return true;
    return orientation_sweep(edges, mm);
}

DecoratedMultigraph counterexample_graph() {
    // vertex ids: v0..v4 = 0..4, u0..u4 = 5..9, w = 10, t = 11
    using K = ArrowKind;
    DecoratedMultigraph G;
    G.m = 12;
    const int v0 = 0, v1 = 1, v2 = 2, v3 = 3, v4 = 4;
    const int u0 = 5, u1 = 6, u2 = 7, u3 = 8, u4 = 9, w = 10, t = 11;
    G.arrows = {
        {v2, t, K::epi},    {t, v1, K::mono},   {v4, v0, K::epi},
        {u0, v4, K::mono},  {u4, v0, K::both},
        {u1, v0, K::mono},  {u2, v1, K::mono},  {u3, v2, K::mono}, {u4, v3, K::mono},
        {u0, v1, K::mono},  {u1, v2, K::mono},  {u2, v3, K::mono}, {u3, v4, K::mono},
        {u1, v0, K::both},  {u2, v3, K::both},  {u4, v0, K::both}, {u4, v3, K::both},
        {v2, v3, K::epi},   {v4, v3, K::epi},
        {v2, v1, K::plain},
        {v1, v0, K::epi},
        {u0, w, K::both},   {u1, w, K::both},   {u2, w, K::both},  {u3, w, K::both},
        {u4, w, K::both},
    };
    return G;
}

Graph grotzsch_graph() {
    // cycle 0..4, mirrors 5..9, hub 10
    Graph G(11);
    for (int i = 0; i < 5; ++i) G.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) {
        G.add_edge(5 + i, (i + 1) % 5);
        G.add_edge(5 + i, (i + 4) % 5);
        G.add_edge(5 + i, 10);
    }
    return G;
}

CounterexampleReport counterexample_pipeline() {
    CounterexampleReport rep;
    auto drawn = counterexample_graph();
    auto computed = classify_arrows(drawn);

    // the recomputed decoration must cover the drawn one (parallel copies of
    // an arrow share one computed decoration), and plain arrows must coincide
    rep.decorations_match = true;
    for (size_t i = 0; i < drawn.arrows.size(); ++i) {
        ArrowKind d = drawn.arrows[i].kind, c = computed.arrows[i].kind;
        bool covers = d == c || (c == ArrowKind::both && d != ArrowKind::plain);
        if (!covers) rep.decorations_match = false;
    }
    for (const auto& a : computed.arrows)
        if (a.kind == ArrowKind::plain) ++rep.plain_arrows;
    require(rep.decorations_match, errc::pipeline_assertion,
            "drawn decorations disagree with classification");
    require(rep.plain_arrows == 1, errc::pipeline_assertion,
            "exactly one regular arrow should remain");

    rep.tafs_ok = is_tafs(computed).ok;
    require(rep.tafs_ok, errc::pipeline_assertion, "counterexample graph must form a TAFS");

    auto S = drawn.simple();
    auto L = lattice_from_galois(S).lattice;
    rep.elements = L.n;
    auto sd = semidistributivity(L);
    rep.sd = sd.is_jsd && sd.is_msd;
    require(rep.sd, errc::pipeline_assertion, "L(G) must be semidistributive");

    // remove t; complement commutes with taking the induced subgraph
    std::vector<int> X;
    for (int v = 0; v < 11; ++v) X.push_back(v);
    Graph comp_then_induce = induced_subgraph(complement_of(S), X);
    Graph induce_then_comp = complement_of(induced_subgraph(S, X));
    rep.induced_commutes = true;
    for (int a = 0; a < 11; ++a)
        if (comp_then_induce.adj[size_t(a)] != induce_then_comp.adj[size_t(a)])
            rep.induced_commutes = false;
    require(rep.induced_commutes, errc::pipeline_assertion,
            "complement must commute with induced subgraphs");

    Graph GX = underlying_undirected(induced_subgraph(S, X));
    rep.triangle_free = GX.triangle_free();
    require(rep.triangle_free, errc::pipeline_assertion, "induced graph must be triangle-free");
    rep.chi = chromatic_number(GX).chi;
    require(rep.chi == 4, errc::pipeline_assertion, "induced graph must have chi = 4");
    auto Gz = grotzsch_graph();
    rep.grotzsch_isomorphic = graphs_isomorphic(GX.m, GX.edges(), Gz.m, Gz.edges());
    require(rep.grotzsch_isomorphic, errc::pipeline_assertion,
            "induced graph must be the Grotzsch graph");

    rep.admits = admits_tafs(GX, TafsMode::trianglefree_chi);
    require(!rep.admits, errc::pipeline_assertion,
            "the induced graph must not admit a TAFS");
    return rep;
}

std::string multigraph_to_json(const DecoratedMultigraph& G) {
    nlohmann::ordered_json j;
    j["m"] = G.m;
    auto& arr = j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& a : G.arrows) arr.push_back({a.src, a.dst, arrow_kind_name(a.kind)});
    return j.dump();
}

DecoratedMultigraph multigraph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    DecoratedMultigraph G;
    G.m = j.at("m").get<int>();
    for (const auto& a : j.at("arrows")) {
        std::string k = a.size() > 2 ? a.at(2).get<std::string>() : "plain";
        ArrowKind kind = k == "mono"  ? ArrowKind::mono
                         : k == "epi" ? ArrowKind::epi
                         : k == "both" ? ArrowKind::both
                                       : ArrowKind::plain;
        int s = a.at(0).get<int>(), t = a.at(1).get<int>();
        require(0 <= s && s < G.m && 0 <= t && t < G.m, errc::parse_error,
                "arrow endpoint out of range");
        G.arrows.push_back({s, t, kind});
    }
    return G;
}

}  // namespace latt
