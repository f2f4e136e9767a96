#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latt/bits.hpp"

namespace latt {

using CoverList = std::vector<std::pair<int, int>>;

// Finite lattice on elements 0..n-1 indexed in a linear extension.
// The order relation is stored twice, as per-element up-sets (ancestors,
// reflexive) and down-sets, because join/meet and almost every analysis
// downstream reduce to word-parallel intersections of these.
//
// Immutable after construction; concurrent reads are safe.
struct Lattice {
    int n = 0;
    std::vector<Bits> up;     // up[x] = { y : x <= y }
    std::vector<Bits> down;   // down[x] = { y : y <= x }
    CoverList covers;         // transitive reduction, (lower, upper)
    std::vector<std::vector<int>> upper_covers;
    std::vector<std::vector<int>> lower_covers;
    std::vector<std::string> labels;  // optional, empty when unused
    // join/meet tables, filled during construction above 64 elements where
    // the bitset scan starts to dominate downstream loops
    std::vector<int> join_table, meet_table;

    bool leq(int x, int y) const { return up[x].test(y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    bool incomparable(int x, int y) const { return !leq(x, y) && !leq(y, x); }
    int bottom() const { return 0; }
    int top() const { return n - 1; }

    int join(int x, int y) const;
    int meet(int x, int y) const;

    // join/meet of a set; empty set gives bottom/top
    int join_all(const Bits& s) const;
    int meet_all(const Bits& s) const;

    const std::string& label_of(int x) const;

    int cover_index(int lower, int upper) const;  // -1 when not a cover
};

// Builds the lattice from covers given in a linear extension (lower < upper
// as indices). Redundant (transitive) input edges are dropped; the stored
// cover list is always the transitive reduction. Throws NotLinearExtension,
// NoExtremum, NotALattice.
Lattice build_lattice(int n, const CoverList& covers,
                      const std::vector<std::string>& labels = {});

// Order data without the lattice checks, for subposet analyses.
struct Poset {
    int n = 0;
    std::vector<Bits> up, down;

    bool leq(int x, int y) const { return up[x].test(y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
};

Poset poset_of(const Lattice& L);
Poset induced_subposet(const Poset& P, const std::vector<int>& elements);

struct IrreducibleTable {
    std::vector<int> jirr;       // join-irreducible element ids, ascending
    std::vector<int> jstar;      // jstar[t] = unique lower cover of jirr[t]
    std::vector<int> mirr;       // meet-irreducible ids, ascending
    std::vector<int> mstar;      // mstar[t] = unique upper cover of mirr[t]
    // per-cover-edge labels, -1 when the min/max does not exist;
    // indices follow Lattice::covers
    std::vector<int> gammaJ;
    std::vector<int> gammaM;
    bool has_gammaJ = false;  // every edge labelled
    bool has_gammaM = false;
    // kappa[x] for x in jirr, -1 elsewhere; defined only when both labels exist
    std::vector<int> kappa;
    bool has_kappa = false;

    bool is_jirr(int x) const;
    bool is_mirr(int x) const;
    int jstar_of(int j) const;  // by element id
    int mstar_of(int m) const;
};

IrreducibleTable irreducibles(const Lattice& L);

struct SemidistributivityReport {
    bool is_jsd = false;
    bool is_msd = false;
    IrreducibleTable table;  // gammaJ/gammaM/kappa filled as far as they exist
};

SemidistributivityReport semidistributivity(const Lattice& L);

struct ChainPhi {
    std::vector<int> elements;  // strictly increasing, first = 0hat, last = 1hat
    bool is_maximal = false;
    bool is_longest = false;
};

struct LengthSpine {
    int length = 0;          // l(L)
    Bits spine;              // elements on some longest chain
    ChainPhi longest_chain;  // lexicographically smallest longest chain
    std::vector<int> height;   // longest path from bottom
    std::vector<int> depth;    // longest path to top
};

LengthSpine length_spine(const Lattice& L);

ChainPhi make_chain(const Lattice& L, std::vector<int> elements);

struct ExtremalityReport {
    int length = 0;
    int n_jirr = 0;
    int n_mirr = 0;
    bool join_extremal = false;
    bool meet_extremal = false;
    bool extremal = false;
};

ExtremalityReport extremality(const Lattice& L);

// Width of a poset by minimum chain cover (Dilworth via bipartite matching).
int width_of(const Poset& P);

// Elements x such that L minus the filter of x has a maximum.
std::vector<int> dissectors(const Lattice& L);

// Induced subposets on irreducibles / dissectors.
Poset subposet_jirr(const Lattice& L);
Poset subposet_dissectors(const Lattice& L);

Lattice direct_product(const Lattice& P, const Lattice& Q);

bool are_isomorphic(const Lattice& L1, const Lattice& L2);

// Plain undirected graph isomorphism (degree refinement + backtracking);
// used for cross-pipeline graph comparisons on small vertex counts.
bool graphs_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1,
                       int n2, const std::vector<std::pair<int, int>>& e2);

// Directed variant over (src, dst) arc lists.
bool digraphs_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1,
                         int n2, const std::vector<std::pair<int, int>>& e2);

}  // namespace latt
