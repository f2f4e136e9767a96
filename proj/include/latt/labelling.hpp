#pragma once

#include <optional>
#include <vector>

#include "latt/lattice.hpp"

namespace latt {

// The four chain-induced edge labellings. Indices follow Lattice::covers;
// labels live in 1..k where k is the chain length.
struct EdgeLabelling {
    std::vector<int> gamma1, gamma1p, gamma2, gamma2p;
    std::vector<int> delta;  // delta[j] for join-irreducible j, -1 elsewhere
    std::vector<int> beta;   // beta[m] for meet-irreducible m, -1 elsewhere
    ChainPhi chain;
};

EdgeLabelling gamma_labellings(const Lattice& L, const ChainPhi& phi);

struct LabellingTheoremReport {
    bool gamma2_eq = false;   // gamma2 == gamma2' and gamma1 == gamma1'
    bool chain_order = false; // gamma2' <= gamma1' edgewise
    bool equality = false;    // gamma1' == gamma2' on every edge
    bool all_phi_lm = false;  // every chain element left modular
};

// Throws TheoremViolation when the always-true parts fail; that signals an
// implementation bug, never expected input.
LabellingTheoremReport verify_labelling_theorem(const Lattice& L, const ChainPhi& phi);

struct LMReport {
    Bits lm_elements;
    // for each non-left-modular element, one witnessing cover edge index
    std::vector<std::pair<int, int>> counterexamples;  // (element, cover index)
    std::optional<std::vector<int>> lm_chain;          // maximal chain inside lm_elements
};

bool is_left_modular_element(const Lattice& L, int a);
LMReport left_modular(const Lattice& L);

// Exhaustive EL-labelling check: in every interval, a unique strictly
// increasing maximal chain that lexicographically precedes all others.
// Throws CapExceeded when an interval has more than cap maximal chains.
bool is_el_labelling(const Lattice& L, const std::vector<int>& edge_labels,
                     long long cap = 10000);

}  // namespace latt
