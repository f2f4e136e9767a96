#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latt/lattice.hpp"
#include "latt/rng.hpp"

namespace latt {

bool is_convex(const Lattice& L, const Bits& C);

// Order ideal generated by C.
Bits ideal_of(const Lattice& L, const Bits& C);

// Elements of C below all maximal and above all minimal elements of C.
Bits heart(const Lattice& L, const Bits& C);

// Day doubling L[C]. New element labels are the parent label with a 0/1
// appended. Verifies the irreducible-count and length bookkeeping of the
// construction on every call.
Lattice double_lattice(const Lattice& L, const Bits& C);

struct ScriptStep {
    bool is_interval_sugar = false;
    int a = -1, b = -1;         // when interval sugar
    std::vector<int> convex;    // explicit ids otherwise
};

struct DoublingScript {
    std::vector<ScriptStep> steps;
};

struct StepCertificate {
    bool is_interval = false;
    bool is_lower_pseudo = false;
    bool is_upper_pseudo = false;
    bool hits_spine = false;            // against the pre-doubling spine
    std::vector<int> heart;             // in pre-doubling ids
    bool heart_hits_lm_chain = false;   // some heart element on a maximal LM chain
};

struct DoublingCertificate {
    std::vector<StepCertificate> steps;
    bool congruence_uniform = false;
    bool join_cu = false;
    bool meet_cu = false;
    bool congruence_normal = true;
};

struct ScriptResult {
    Lattice lattice;
    DoublingCertificate cert;
};

ScriptResult run_script(const DoublingScript& script);

struct CertificateVerdict {
    bool extremal = false;
    bool join_extremal = false;
    bool meet_extremal = false;
    bool left_modular = false;
};

// Verdicts from the certificate alone, no lattice recomputation.
CertificateVerdict certify(const DoublingCertificate& cert);

enum class ScriptMode { uniform_interval, force_spine, normal };

DoublingScript random_script(int steps, uint64_t seed, ScriptMode mode);

std::string script_to_json(const DoublingScript& s);
DoublingScript script_from_json(const std::string& text);

}  // namespace latt
