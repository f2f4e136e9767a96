#pragma once

#include <optional>
#include <string>

#include "latt/dimension.hpp"
#include "latt/doubling.hpp"
#include "latt/shelling.hpp"

namespace latt {

struct AnalysisReport {
    int n = 0;
    int length = 0;
    int n_jirr = 0;
    int n_mirr = 0;
    bool join_extremal = false, meet_extremal = false, extremal = false;
    bool jsd = false, msd = false, sd = false;
    bool lm_chain_found = false;
    int lm_elements = 0;
    std::string shellable;
    std::string shellable_reason;
    std::string dim_method;        // "galois", "oracle" or "bounds"
    std::optional<int> dim;
    DimBounds bounds;

    std::string to_json() const;
};

struct AnalyzeOptions {
    int oracle_cap = 24;
    long long budget_ms = 60000;
    long long chain_cap = 100000;
};

AnalysisReport analyze(const Lattice& L, const DoublingCertificate* cert = nullptr,
                       const AnalyzeOptions& opt = {});

}  // namespace latt
