#pragma once

#include <stdexcept>
#include <string>

namespace latt {

enum class errc {
    not_a_lattice,
    not_linear_extension,
    no_extremum,
    not_convex,
    empty_convex_set,
    not_extremal,
    not_semidistributive,
    trivial_lattice,
    numbering_failure,
    graph_not_orderable,
    cap_exceeded,
    timeout,
    not_gentle,
    not_triangle_free,
    invalid_parameter,
    theorem_violation,
    pipeline_assertion,
    suite_unknown,
    unsupported_format,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_a_lattice: return "NotALattice";
        case errc::not_linear_extension: return "NotLinearExtension";
        case errc::no_extremum: return "NoExtremum";
        case errc::not_convex: return "NotConvex";
        case errc::empty_convex_set: return "EmptyConvexSet";
        case errc::not_extremal: return "NotExtremal";
        case errc::not_semidistributive: return "NotSemidistributive";
        case errc::trivial_lattice: return "TrivialLattice";
        case errc::numbering_failure: return "NumberingFailure";
        case errc::graph_not_orderable: return "GraphNotOrderable";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::timeout: return "Timeout";
        case errc::not_gentle: return "NotGentle";
        case errc::not_triangle_free: return "NotTriangleFree";
        case errc::invalid_parameter: return "InvalidParameter";
        case errc::theorem_violation: return "TheoremViolation";
        case errc::pipeline_assertion: return "PipelineAssertionFailed";
        case errc::suite_unknown: return "SuiteUnknown";
        case errc::unsupported_format: return "UnsupportedFormat";
        case errc::parse_error: return "ParseError";
    }
    return "Error";
}

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool ok, errc c, const std::string& what) {
    if (!ok) fail(c, what);
}

}  // namespace latt
