#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latt/doubling.hpp"
#include "latt/galois.hpp"
#include "latt/lattice.hpp"

namespace latt {

// Maximal chains as element sets including bottom and top, lexicographic order.
std::vector<Bits> maximal_chains(const Lattice& L, long long cap = 100000);

// Facet adjacency graph: vertices are maximal chains, edge F->G iff
// |F n G| = |G| - 1.
struct FAGraph {
    std::vector<Bits> chains;
    DirectedGraph graph;
};

FAGraph facet_adjacency(const Lattice& L, long long cap = 100000);

struct SourceSetReport {
    std::optional<std::pair<Bits, Bits>> found;   // two disjoint source sets
    std::optional<std::vector<Bits>> all_source_sets;  // small graphs only
};

SourceSetReport disjoint_source_sets(const DirectedGraph& g,
                                     bool enumerate_all = false);

enum class Shellability { Shellable, NotShellable, Unknown };

struct ShellVerdict {
    Shellability verdict = Shellability::Unknown;
    std::string reason;
};

ShellVerdict shellable_verdict(const Lattice& L,
                               const DoublingCertificate* cert = nullptr,
                               long long chain_cap = 100000);

// Backtracking over facet orders with the pairwise shelling criterion.
std::optional<std::vector<int>> brute_force_shelling(const Lattice& L,
                                                     int cap_facets = 9);

}  // namespace latt
