#pragma once

#include <string>

#include "latt/lattice.hpp"

namespace latt {

// JSON lattice format: {"n": int, "covers": [[lo,hi],...], "labels": [str]?}
// with indices forming a linear extension.
std::string lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const std::string& text);

// Hasse diagram in DOT, edges bottom-to-top. Deterministic output.
std::string lattice_to_dot(const Lattice& L);

}  // namespace latt
