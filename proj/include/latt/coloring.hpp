#pragma once

#include <vector>

#include "latt/galois.hpp"

namespace latt {

struct ColoringResult {
    int chi = 0;
    std::vector<int> coloring;  // vertex -> color in 0..chi-1
    std::vector<int> clique;    // maximum clique witness, chi >= |clique|
};

// Exact chromatic number: maximum-clique lower bound plus saturation-ordered
// branch and bound. Deterministic; ties break by highest saturation, then
// highest degree, then lowest index. Throws Timeout past budget_ms.
ColoringResult chromatic_number(const Graph& G, long long budget_ms = 60000);

// Exact maximum clique (branch and bound on candidate sets).
std::vector<int> max_clique(const Graph& G);

}  // namespace latt
