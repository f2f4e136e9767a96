#pragma once

#include <optional>
#include <vector>

#include "latt/coloring.hpp"
#include "latt/galois.hpp"
#include "latt/lattice.hpp"

namespace latt {

struct CriticalPairData {
    std::vector<std::pair<int, int>> pairs;  // (a,b) critical pairs of P
    DirectedGraph dgraph;                    // D(P): (a,b)->(c,d) iff b >= c
    std::optional<Graph> klgraph;            // K(L), built for SD-extremal lattices
};

// Critical pairs of an arbitrary finite poset.
CriticalPairData critical_pairs(const Poset& P);

// The lattice version additionally verifies the (j, kappa(j)) description on
// semidistributive input and builds K(L) for SD-extremal input, checking that
// the complement of the Galois graph is K(L) plus isolated vertices.
CriticalPairData critical_pairs(const Lattice& L);

// dim(L) = chi(complement of the Galois graph); SD extremal only, |L| > 1.
int dim_sd_extremal(const Lattice& L, long long budget_ms = 60000);

// Reading's cover-set oracle: minimum number of acyclic-in-D(P) subsets
// covering all critical pairs, floored at 1 for nonempty posets.
int dimension_oracle(const Poset& P, int cap = 24);
int dimension_oracle(const Lattice& L, int cap = 24);

struct DimBounds {
    int lower = 0;       // width(Dis(P))
    int upper = 0;       // width(JIrr(L))
    int cover_lb = 0;    // max cover in-degree; a lower bound for SD lattices only
    bool cover_lb_valid = false;
};

DimBounds dim_bounds(const Lattice& L);

}  // namespace latt
