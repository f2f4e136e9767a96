#include "latt/galois.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "latt/error.hpp"

namespace latt {

std::vector<std::pair<int, int>> DirectedGraph::arcs() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = out[size_t(u)].first(); v >= 0; v = out[size_t(u)].next(v))
            e.emplace_back(u, v);
    return e;
}

bool DirectedGraph::acyclic() const {
    std::vector<int> indeg(static_cast<size_t>(m), 0);
    for (int v = 0; v < m; ++v) indeg[size_t(v)] = in[size_t(v)].count();
    std::vector<int> queue;
    for (int v = 0; v < m; ++v)
        if (!indeg[size_t(v)]) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (int w = out[size_t(v)].first(); w >= 0; w = out[size_t(v)].next(w))
            if (--indeg[size_t(w)] == 0) queue.push_back(w);
    }
    return seen == m;
}

std::vector<int> DirectedGraph::topological_order() const {
    require(acyclic(), errc::graph_not_orderable, "input graph has a directed cycle");
    std::vector<int> indeg(static_cast<size_t>(m), 0), order;
    for (int v = 0; v < m; ++v) indeg[size_t(v)] = in[size_t(v)].count();
    std::vector<int> queue;
    for (int v = m - 1; v >= 0; --v)
        if (!indeg[size_t(v)]) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for (int w = out[size_t(v)].first(); w >= 0; w = out[size_t(v)].next(w))
            if (--indeg[size_t(w)] == 0) queue.push_back(w);
    }
    return order;
}

std::string DirectedGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph g {\n";
    for (int v = 0; v < m; ++v) {
        os << "  v" << v;
        if (!vertex_labels.empty()) os << " [label=\"" << vertex_labels[size_t(v)] << "\"]";
        os << ";\n";
    }
    for (int v = 0; v < m; ++v)
        for (int w = out[size_t(v)].first(); w >= 0; w = out[size_t(v)].next(w))
            os << "  v" << v << " -> v" << w << ";\n";
    os << "}\n";
    return os.str();
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = adj[size_t(u)].next(u); v >= 0; v = adj[size_t(u)].next(v))
            e.emplace_back(u, v);
    return e;
}

bool Graph::triangle_free() const {
    for (int u = 0; u < m; ++u)
        for (int v = adj[size_t(u)].next(u); v >= 0; v = adj[size_t(u)].next(v))
            if ((adj[size_t(u)] & adj[size_t(v)]).any()) return false;
    return true;
}

std::string Graph::to_dot(const std::vector<std::string>& labels) const {
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 0; v < m; ++v) {
        os << "  v" << v;
        if (!labels.empty()) os << " [label=\"" << labels[size_t(v)] << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

Graph complement_of(const DirectedGraph& G) {
    Graph H(G.m);
    for (int u = 0; u < G.m; ++u)
        for (int v = u + 1; v < G.m; ++v)
            if (!G.has_edge(u, v) && !G.has_edge(v, u)) H.add_edge(u, v);
    return H;
}

Graph complement_of(const Graph& G) {
    Graph H(G.m);
    for (int u = 0; u < G.m; ++u)
        for (int v = u + 1; v < G.m; ++v)
            if (!G.has_edge(u, v)) H.add_edge(u, v);
    return H;
}

Graph underlying_undirected(const DirectedGraph& G) {
    Graph H(G.m);
    for (int u = 0; u < G.m; ++u)
        for (int v = G.out[size_t(u)].first(); v >= 0; v = G.out[size_t(u)].next(v))
            if (u != v) H.add_edge(u, v);
    return H;
}

DirectedGraph induced_subgraph(const DirectedGraph& G, const std::vector<int>& keep) {
    DirectedGraph H(int(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b)
            if (a != b && G.has_edge(keep[a], keep[b])) H.add_edge(int(a), int(b));
    if (!G.vertex_labels.empty())
        for (int v : keep) H.vertex_labels.push_back(G.vertex_labels[size_t(v)]);
    return H;
}

Graph induced_subgraph(const Graph& G, const std::vector<int>& keep) {
    Graph H(int(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = a + 1; b < keep.size(); ++b)
            if (G.has_edge(keep[a], keep[b])) H.add_edge(int(a), int(b));
    return H;
}

ChainNumbering chain_numbering(const Lattice& L, const ChainPhi& phi) {
    auto ext = extremality(L);
    require(ext.extremal, errc::not_extremal, "chain numbering needs an extremal lattice");
    require(phi.is_longest && phi.is_maximal, errc::invalid_parameter,
            "chain numbering needs a longest chain");
    int n = ext.length;
    auto irr = irreducibles(L);
    const auto& x = phi.elements;

    ChainNumbering cn;
    Bits seen_j(L.n);
    for (int i = 1; i <= n; ++i) {
        int found = -1, count = 0;
        for (int j : irr.jirr)
            if (L.leq(j, x[size_t(i)]) && !seen_j.test(j) ) {
                if (!L.leq(j, x[size_t(i - 1)])) { found = j; ++count; }
            }
        require(count == 1, errc::numbering_failure,
                "join-irreducible numbering not unique at step " + std::to_string(i));
        cn.j.push_back(found);
        seen_j.set(found);
    }
    Bits seen_m(L.n);
    for (int i = 1; i <= n; ++i) {
        int found = -1, count = 0;
        for (int m : irr.mirr)
            if (L.leq(x[size_t(i - 1)], m) && !L.leq(x[size_t(i)], m) && !seen_m.test(m)) {
                found = m;
                ++count;
            }
        require(count == 1, errc::numbering_failure,
                "meet-irreducible numbering not unique at step " + std::to_string(i));
        cn.m.push_back(found);
        seen_m.set(found);
    }
    // the displayed identities x_i = j_1 v ... v j_i = m_{i+1} ^ ... ^ m_n
    for (int i = 0; i <= n; ++i) {
        int jn = 0, mt = L.n - 1;
        for (int t = 0; t < i; ++t) jn = L.join(jn, cn.j[size_t(t)]);
        for (int t = i; t < n; ++t) mt = L.meet(mt, cn.m[size_t(t)]);
        require(jn == x[size_t(i)] && mt == x[size_t(i)], errc::numbering_failure,
                "chain identities failed at index " + std::to_string(i));
    }
    return cn;
}

DirectedGraph galois_graph(const Lattice& L) {
    return galois_graph(L, length_spine(L).longest_chain);
}

DirectedGraph galois_graph(const Lattice& L, const ChainPhi& phi) {
    auto cn = chain_numbering(L, phi);
    int n = int(cn.j.size());
    DirectedGraph G(n);
    for (int i = 0; i < n; ++i) {
        G.vertex_labels.push_back(L.label_of(cn.j[size_t(i)]).empty()
                                      ? "j" + std::to_string(i + 1)
                                      : L.label_of(cn.j[size_t(i)]));
        for (int k = 0; k < n; ++k)
            if (i != k && !L.leq(cn.j[size_t(i)], cn.m[size_t(k)])) G.add_edge(i, k);
    }
    require(G.acyclic(), errc::theorem_violation,
            "Galois graph of an extremal lattice must be acyclic");
    return G;
}

namespace {

// closure X -> maximal partner Y(X) -> maximal partner X(Y)
Bits ortho_partner(const DirectedGraph& G, const Bits& X) {
    Bits Y = Bits::full(G.m);
    Y -= X;
    for (int x = X.first(); x >= 0; x = X.next(x)) Y -= G.out[size_t(x)];
    return Y;
}

Bits ortho_close(const DirectedGraph& G, Bits X) {
    while (true) {
        Bits Y = ortho_partner(G, X);
        Bits X2 = Bits::full(G.m);
        X2 -= Y;
        for (int y = Y.first(); y >= 0; y = Y.next(y)) X2 -= G.in[size_t(y)];
        if (X2 == X) return X;
        X = X2;
    }
}

}  // namespace

OrthoPairLattice lattice_from_galois(const DirectedGraph& G) {
    auto order = G.topological_order();  // throws on cycles
    (void)order;

    // saturate under "add generator, re-close", starting from the closure of {}
    std::vector<Bits> closed;
    std::unordered_map<Bits, int, BitsHash> index;
    Bits bot = ortho_close(G, Bits(G.m));
    closed.push_back(bot);
    index[bot] = 0;
    for (size_t head = 0; head < closed.size(); ++head) {
        Bits X = closed[head];
        for (int g = 0; g < G.m; ++g) {
            if (X.test(g)) continue;
            Bits Xg = X;
            Xg.set(g);
            Bits C = ortho_close(G, Xg);
            if (!index.count(C)) {
                index.emplace(C, int(closed.size()));
                closed.push_back(C);
            }
        }
    }

    // linear extension: sort by cardinality then words
    std::sort(closed.begin(), closed.end(), [](const Bits& a, const Bits& b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });

    int n = int(closed.size());
    std::vector<Bits> ups(static_cast<size_t>(n), Bits(n)), downs(static_cast<size_t>(n), Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (closed[size_t(i)].subset_of(closed[size_t(j)])) {
                ups[size_t(i)].set(j);
                downs[size_t(j)].set(i);
            }
    CoverList covers;
    for (int i = 0; i < n; ++i)
        for (int j = ups[size_t(i)].next(i); j >= 0; j = ups[size_t(i)].next(j))
            if ((ups[size_t(i)] & downs[size_t(j)]).count() == 2) covers.emplace_back(i, j);

    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string s = "{";
        for (int v = closed[size_t(i)].first(); v >= 0; v = closed[size_t(i)].next(v)) {
            if (s.size() > 1) s += ",";
            s += G.vertex_labels.empty() ? std::to_string(v) : G.vertex_labels[size_t(v)];
        }
        labels[size_t(i)] = s + "}";
    }

    OrthoPairLattice result;
    result.lattice = build_lattice(n, covers, labels);
    for (int i = 0; i < n; ++i)
        result.pairs.push_back({closed[size_t(i)], ortho_partner(G, closed[size_t(i)])});
    return result;
}

bool roundtrip_check(const Lattice& L) {
    auto ext = extremality(L);
    require(ext.extremal, errc::not_extremal, "roundtrip needs an extremal lattice");
    auto phi = length_spine(L).longest_chain;
    auto cn = chain_numbering(L, phi);
    auto G = galois_graph(L, phi);
    auto re = lattice_from_galois(G);
    if (re.lattice.n != L.n) return false;

    // x -> {i : j_i <= x} must be an order isomorphism onto the X-components
    std::map<Bits, int> x_index;
    for (int t = 0; t < re.lattice.n; ++t) x_index[re.pairs[size_t(t)].X] = t;
    std::vector<int> image(static_cast<size_t>(L.n), -1);
    for (int x = 0; x < L.n; ++x) {
        Bits X(G.m);
        for (int i = 0; i < G.m; ++i)
            if (L.leq(cn.j[size_t(i)], x)) X.set(i);
        auto it = x_index.find(X);
        if (it == x_index.end()) return false;
        image[size_t(x)] = it->second;
    }
    std::vector<char> hit(static_cast<size_t>(re.lattice.n), 0);
    for (int x = 0; x < L.n; ++x) {
        if (hit[size_t(image[size_t(x)])]) return false;
        hit[size_t(image[size_t(x)])] = 1;
    }
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            if (L.leq(x, y) != re.lattice.leq(image[size_t(x)], image[size_t(y)]))
                return false;
    return true;
}

std::vector<Bits> downward_label_sets(const Lattice& L) {
    auto sd = semidistributivity(L);
    require(sd.is_jsd, errc::not_semidistributive,
            "downward label sets need join-semidistributivity");
    std::vector<Bits> D(static_cast<size_t>(L.n), Bits(L.n));
    for (size_t e = 0; e < L.covers.size(); ++e)
        D[size_t(L.covers[e].second)].set(sd.table.gammaJ[e]);
    return D;
}

Graph canonical_join_graph(const Lattice& L) {
    auto sd = semidistributivity(L);
    require(sd.is_jsd && sd.is_msd, errc::not_semidistributive,
            "canonical join graph needs a semidistributive lattice");
    auto D = downward_label_sets(L);

    // vertex order: chain numbering when extremal, ascending ids otherwise
    std::vector<int> verts;
    if (extremality(L).extremal)
        verts = chain_numbering(L, length_spine(L).longest_chain).j;
    else
        verts = sd.table.jirr;
    std::vector<int> pos(static_cast<size_t>(L.n), -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[size_t(verts[i])] = int(i);

    Graph G(int(verts.size()));
    for (int x = 0; x < L.n; ++x)
        for (int u = D[size_t(x)].first(); u >= 0; u = D[size_t(x)].next(u))
            for (int v = D[size_t(x)].next(u); v >= 0; v = D[size_t(x)].next(v))
                G.add_edge(pos[size_t(u)], pos[size_t(v)]);
    return G;
}

namespace {

unsigned long long count_is(const std::vector<Bits>& nbr, Bits alive,
                            std::unordered_map<Bits, unsigned long long, BitsHash>& memo) {
    int v = alive.first();
    if (v < 0) return 1;
    auto it = memo.find(alive);
    if (it != memo.end()) return it->second;

    // component split
    Bits comp(alive.n);
    comp.set(v);
    Bits frontier = comp;
    while (frontier.any()) {
        Bits next(alive.n);
        for (int u = frontier.first(); u >= 0; u = frontier.next(u))
            next |= nbr[size_t(u)] & alive;
        next -= comp;
        comp |= next;
        frontier = next;
    }
    unsigned long long total;
    if (comp == alive) {
        Bits without = alive;
        without.reset(v);
        Bits closed = without;
        closed -= nbr[size_t(v)];
        total = count_is(nbr, without, memo) + count_is(nbr, closed, memo);
    } else {
        total = count_is(nbr, comp, memo) * count_is(nbr, alive - comp, memo);
    }
    memo.emplace(alive, total);
    return total;
}

}  // namespace

unsigned long long count_independent_sets(const Graph& G) {
    require(G.m < 64, errc::cap_exceeded, "independent-set counter caps at 63 vertices");
    std::unordered_map<Bits, unsigned long long, BitsHash> memo;
    return count_is(G.adj, Bits::full(G.m), memo);
}

unsigned long long count_independent_sets(const DirectedGraph& G) {
    return count_independent_sets(underlying_undirected(G));
}

}  // namespace latt
