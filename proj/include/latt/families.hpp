#pragma once

#include <string>
#include <vector>

#include "latt/galois.hpp"
#include "latt/lattice.hpp"

namespace latt {

struct FamilyLattice {
    DirectedGraph galois;
    Lattice lattice;
};

// Hochschild lattice via its Galois graph on {(i,j) : i in {1,2}, i <= j <= n}.
FamilyLattice hochschild(int n);

// Bubble lattice via its Galois graph on X u Y u (X x Y).
FamilyLattice bubble(int m, int n);

// (m,n)-word lattice by direct enumeration under the product order.
Lattice word_lattice(int m, int n);
std::vector<std::string> mn_words(int m, int n);

struct Composition {
    std::vector<int> parts;

    int n() const;
    int max_part() const;
    // region index (0-based) of node a in 1..n
    int region_of(int a) const;
};

struct AlphaArc {
    int a = 0, b = 0;  // 1 <= a < b <= n, different regions
};

struct ParabolicTamari {
    Composition alpha;
    std::vector<AlphaArc> arcs;
    DirectedGraph galois;
    Graph compatibility;  // arc-compatibility graph, built independently
    Lattice lattice;
};

ParabolicTamari parabolic_tamari(const Composition& alpha);

bool arcs_compatible(const Composition& alpha, const AlphaArc& x, const AlphaArc& y);

}  // namespace latt
