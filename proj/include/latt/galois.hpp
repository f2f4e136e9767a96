#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latt/lattice.hpp"

namespace latt {

// Directed graph with out-adjacency bitsets; vertices 0..m-1, no loops.
struct DirectedGraph {
    int m = 0;
    std::vector<Bits> out;
    std::vector<Bits> in;
    std::vector<std::string> vertex_labels;

    DirectedGraph() = default;
    explicit DirectedGraph(int vertices)
        : m(vertices), out(size_t(vertices), Bits(vertices)),
          in(size_t(vertices), Bits(vertices)) {}

    void add_edge(int u, int v) {
        out[size_t(u)].set(v);
        in[size_t(v)].set(u);
    }
    bool has_edge(int u, int v) const { return out[size_t(u)].test(v); }
    int edge_count() const {
        int c = 0;
        for (const auto& b : out) c += b.count();
        return c;
    }
    std::vector<std::pair<int, int>> arcs() const;
    bool acyclic() const;
    std::vector<int> topological_order() const;  // GraphNotOrderable when cyclic

    std::string to_dot() const;
};

// Undirected simple graph, used for complements, canonical join graphs and
// coloring inputs.
struct Graph {
    int m = 0;
    std::vector<Bits> adj;

    Graph() = default;
    explicit Graph(int vertices) : m(vertices), adj(size_t(vertices), Bits(vertices)) {}

    void add_edge(int u, int v) {
        adj[size_t(u)].set(v);
        adj[size_t(v)].set(u);
    }
    bool has_edge(int u, int v) const { return adj[size_t(u)].test(v); }
    int edge_count() const {
        int c = 0;
        for (const auto& b : adj) c += b.count();
        return c / 2;
    }
    std::vector<std::pair<int, int>> edges() const;
    bool triangle_free() const;
    std::string to_dot(const std::vector<std::string>& labels = {}) const;
};

// Edge {u,v} iff no directed edge between u and v in either direction.
Graph complement_of(const DirectedGraph& G);
Graph complement_of(const Graph& G);
Graph underlying_undirected(const DirectedGraph& G);
DirectedGraph induced_subgraph(const DirectedGraph& G, const std::vector<int>& keep);
Graph induced_subgraph(const Graph& G, const std::vector<int>& keep);

// Chain numbering of an extremal lattice: x_i = j_1 v ... v j_i
// = m_{i+1} ^ ... ^ m_n along the given longest chain.
struct ChainNumbering {
    std::vector<int> j;  // j[i] = i-th join-irreducible (1-based stored at i-1)
    std::vector<int> m;  // m[i] = i-th meet-irreducible
};

ChainNumbering chain_numbering(const Lattice& L, const ChainPhi& phi);

// Galois graph over the canonical (lexicographically smallest) longest chain.
DirectedGraph galois_graph(const Lattice& L);
DirectedGraph galois_graph(const Lattice& L, const ChainPhi& phi);

struct OrthoPair {
    Bits X, Y;
};

struct OrthoPairLattice {
    std::vector<OrthoPair> pairs;  // indexed like the lattice elements
    Lattice lattice;
};

// Markowsky reconstruction: lattice of maximal orthogonal pairs. Input may be
// any loop-free acyclic directed graph; relabelling is internal.
OrthoPairLattice lattice_from_galois(const DirectedGraph& G);

bool roundtrip_check(const Lattice& L);

// Downward label sets D(x) = { gammaJ(y <. x) }, one per element.
std::vector<Bits> downward_label_sets(const Lattice& L);

// Union of pairwise edges of the D(x); vertices are join-irreducibles in the
// chain numbering when L is extremal, else in ascending element order.
Graph canonical_join_graph(const Lattice& L);

// Exact count via elimination recursion with memoization; counts sets with
// no arc in either direction between members.
unsigned long long count_independent_sets(const DirectedGraph& G);
unsigned long long count_independent_sets(const Graph& G);

}  // namespace latt
