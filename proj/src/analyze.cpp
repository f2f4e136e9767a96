#include "latt/analyze.hpp"

#include <json.hpp>

#include "latt/error.hpp"
#include "latt/labelling.hpp"

namespace latt {

AnalysisReport analyze(const Lattice& L, const DoublingCertificate* cert,
                       const AnalyzeOptions& opt) {
    AnalysisReport r;
    r.n = L.n;
    auto ext = extremality(L);
    r.length = ext.length;
    r.n_jirr = ext.n_jirr;
    r.n_mirr = ext.n_mirr;
    r.join_extremal = ext.join_extremal;
    r.meet_extremal = ext.meet_extremal;
    r.extremal = ext.extremal;
    auto sd = semidistributivity(L);
    r.jsd = sd.is_jsd;
    r.msd = sd.is_msd;
    r.sd = sd.is_jsd && sd.is_msd;
    auto lm = left_modular(L);
    r.lm_chain_found = lm.lm_chain.has_value();
    r.lm_elements = lm.lm_elements.count();
    auto shell = shellable_verdict(L, cert, opt.chain_cap);
    r.shellable = shell.verdict == Shellability::Shellable      ? "Shellable"
                  : shell.verdict == Shellability::NotShellable ? "NotShellable"
                                                                : "Unknown";
    r.shellable_reason = shell.reason;
    r.bounds = dim_bounds(L);
    try {
        if (r.sd && r.extremal && L.n > 1) {
            r.dim_method = "galois";
            r.dim = dim_sd_extremal(L, opt.budget_ms);
        } else {
            r.dim = dimension_oracle(L, opt.oracle_cap);
            r.dim_method = "oracle";
        }
    } catch (const error& e) {
        // oversized or over-budget inputs fall back to the bounds, reported
        if (e.code != errc::cap_exceeded && e.code != errc::timeout) throw;
        r.dim.reset();
        r.dim_method = "bounds";
    }
    return r;
}

std::string AnalysisReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["length"] = length;
    j["jirr"] = n_jirr;
    j["mirr"] = n_mirr;
    j["join_extremal"] = join_extremal;
    j["meet_extremal"] = meet_extremal;
    j["extremal"] = extremal;
    j["jsd"] = jsd;
    j["msd"] = msd;
    j["sd"] = sd;
    j["lm_chain_found"] = lm_chain_found;
    j["lm_elements"] = lm_elements;
    j["shellable"] = shellable;
    j["shellable_reason"] = shellable_reason;
    j["dim_method"] = dim_method;
    if (dim)
        j["dim"] = *dim;
    else
        j["dim"] = nullptr;
    j["bounds"] = {{"lower", bounds.lower},
                   {"upper", bounds.upper},
                   {"cover_lb", bounds.cover_lb},
                   {"cover_lb_valid", bounds.cover_lb_valid}};
    return j.dump(2);
}

}  // namespace latt
