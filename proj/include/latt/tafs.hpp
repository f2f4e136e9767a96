#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latt/galois.hpp"

namespace latt {

enum class ArrowKind { plain, mono, epi, both };

const char* arrow_kind_name(ArrowKind k);

// Directed multigraph with decorated arrows. A loop at every vertex is
// implicit: quantifiers honour it, storage never holds it.
struct DecoratedMultigraph {
    int m = 0;
    struct Arrow {
        int src, dst;
        ArrowKind kind;
    };
    std::vector<Arrow> arrows;

    bool has_arrow(int u, int v) const;
    DirectedGraph simple() const;  // underlying simple directed graph
};

// Recomputes decorations from the mono/epi rules, loops included in the
// quantifiers. Arrows satisfying both rules become "both".
DecoratedMultigraph classify_arrows(const DecoratedMultigraph& G);

struct TafsCheck {
    bool ok = false;
    std::string violation;  // first violated condition when not ok
};

TafsCheck is_tafs(const DecoratedMultigraph& G);

enum class TafsMode { trianglefree_chi, orientation_search };

// Does an undirected multigraph admit some orientation forming a two-acyclic
// factorization system? trianglefree_chi uses the chi(G) <= 3 criterion,
// orientation_search enumerates every orientation of the underlying simple
// graph; the modes agree on triangle-free input.
bool admits_tafs(const Graph& G, TafsMode mode, int edge_cap = 22);

struct CounterexampleReport {
    int elements = 0;          // |L(G)|
    bool sd = false;
    bool tafs_ok = false;      // the embedded graph forms a TAFS
    bool decorations_match = false;
    int plain_arrows = 0;      // arrows left undecorated by classification
    bool triangle_free = false;
    int chi = 0;
    bool grotzsch_isomorphic = false;
    bool induced_commutes = false;  // complement of induced = induced of complement
    bool admits = true;             // the induced graph admits a TAFS (expected false)
};

// The 12-vertex decorated multigraph behind the induced-subgraph counterexample.
DecoratedMultigraph counterexample_graph();

// The 11-vertex triangle-free graph of chromatic number 4.
Graph grotzsch_graph();

CounterexampleReport counterexample_pipeline();

std::string multigraph_to_json(const DecoratedMultigraph& G);
DecoratedMultigraph multigraph_from_json(const std::string& text);

}  // namespace latt
