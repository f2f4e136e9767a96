#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latt/analyze.hpp"
#include "latt/coloring.hpp"
#include "latt/dimension.hpp"
#include "latt/doubling.hpp"
#include "latt/error.hpp"
#include "latt/families.hpp"
#include "latt/galois.hpp"
#include "latt/gentle.hpp"
#include "latt/io.hpp"
#include "latt/labelling.hpp"
#include "latt/shelling.hpp"
#include "latt/tafs.hpp"
#include "latt/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_assertion = 2;

int exit_code_for(const latt::error& e) {
    switch (e.code) {
        case latt::errc::theorem_violation:
        case latt::errc::pipeline_assertion:
            return exit_assertion;
        default:
            return exit_input;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) latt::fail(latt::errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) latt::fail(latt::errc::parse_error, "cannot write " + out_path);
        out << text;
    }
}

struct InputSpec {
    std::string file;
    std::vector<std::string> gen;
    std::string script_file;
};

void add_input_flags(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("file", in.file, "lattice JSON file");
    cmd->add_option("--gen", in.gen, "generator spec: hoch n | bubble m n | words m n | ptam a1,a2,...")
        ->expected(-1);
    cmd->add_option("--script", in.script_file, "doubling script JSON");
}

latt::Composition parse_composition(const std::string& text) {
    latt::Composition alpha;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');)
        alpha.parts.push_back(std::stoi(part));
    return alpha;
}

latt::Lattice generated_lattice(const std::vector<std::string>& gen) {
    latt::require(!gen.empty(), latt::errc::invalid_parameter, "empty generator spec");
    const std::string& family = gen[0];
    if (family == "hoch") {
        latt::require(gen.size() == 2, latt::errc::invalid_parameter, "gen hoch n");
        return latt::hochschild(std::stoi(gen[1])).lattice;
    }
    if (family == "bubble") {
        latt::require(gen.size() == 3, latt::errc::invalid_parameter, "gen bubble m n");
        return latt::bubble(std::stoi(gen[1]), std::stoi(gen[2])).lattice;
    }
    if (family == "words") {
        latt::require(gen.size() == 3, latt::errc::invalid_parameter, "gen words m n");
        return latt::word_lattice(std::stoi(gen[1]), std::stoi(gen[2]));
    }
    if (family == "ptam") {
        latt::require(gen.size() == 2, latt::errc::invalid_parameter, "gen ptam a1,a2,...");
        return latt::parabolic_tamari(parse_composition(gen[1])).lattice;
    }
    latt::fail(latt::errc::invalid_parameter, "unknown generator " + family);
}

struct ResolvedInput {
    latt::Lattice lattice;
    std::optional<latt::DoublingCertificate> cert;
};

ResolvedInput resolve_input(const InputSpec& in) {
    ResolvedInput r;
    if (!in.script_file.empty()) {
        auto res = latt::run_script(latt::script_from_json(slurp(in.script_file)));
        r.lattice = std::move(res.lattice);
        r.cert = std::move(res.cert);
    } else if (!in.gen.empty()) {
        r.lattice = generated_lattice(in.gen);
    } else if (!in.file.empty()) {
        r.lattice = latt::lattice_from_json(slurp(in.file));
    } else {
        latt::fail(latt::errc::invalid_parameter,
                   "provide a lattice file, --gen, or --script");
    }
    return r;
}

std::vector<int> parse_ids(const std::string& text) {
    std::vector<int> ids;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) ids.push_back(std::stoi(part));
    return ids;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite lattice toolkit: doubling, labellings, Galois graphs, "
                 "shellability, order dimension"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family lattice as JSON");
    std::vector<std::string> gen_args;
    std::string gen_out;
    gen->add_option("spec", gen_args, "hoch n | bubble m n | words m n | ptam a1,... | gentle quiver.json")
        ->required()
        ->expected(-1);
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // analyze
    auto* an = app.add_subcommand("analyze", "full per-lattice report");
    InputSpec an_in;
    add_input_flags(an, an_in);
    long long an_budget = 60000;
    int an_cap = 24;
    an->add_option("--budget-ms", an_budget, "coloring budget");
    an->add_option("--cap", an_cap, "critical-pair cap for the oracle");

    // labelling
    auto* lab = app.add_subcommand("labelling", "chain-induced edge labellings");
    InputSpec lab_in;
    add_input_flags(lab, lab_in);
    std::string lab_chain;
    bool lab_dot = false;
    lab->add_option("--chain", lab_chain, "comma-separated chain ids (default: longest)");
    lab->add_flag("--dot", lab_dot, "Hasse diagram with edge labels");

    // double
    auto* dbl = app.add_subcommand("double", "run a doubling script");
    std::string dbl_script;
    bool dbl_certify = false;
    std::string dbl_out;
    dbl->add_option("--script", dbl_script, "script JSON")->required();
    dbl->add_flag("--certify", dbl_certify, "print certificate verdicts");
    dbl->add_option("-o,--output", dbl_out, "output file (default stdout)");

    // galois
    auto* gal = app.add_subcommand("galois", "Galois graph and reconstruction");
    InputSpec gal_in;
    add_input_flags(gal, gal_in);
    bool gal_dot = false, gal_cjg = false;
    std::string gal_reconstruct;
    gal->add_flag("--dot", gal_dot, "DOT output");
    gal->add_flag("--cjg", gal_cjg, "canonical join graph instead");
    gal->add_option("--reconstruct", gal_reconstruct,
                    "digraph JSON to rebuild a lattice from");

    // dim
    auto* dim = app.add_subcommand("dim", "order dimension");
    InputSpec dim_in;
    add_input_flags(dim, dim_in);
    std::string dim_method = "galois";
    long long dim_budget = 60000;
    int dim_cap = 24;
    dim->add_option("--method", dim_method, "galois | oracle | bounds");
    dim->add_option("--budget-ms", dim_budget, "coloring budget");
    dim->add_option("--cap", dim_cap, "critical-pair cap");

    // shell
    auto* sh = app.add_subcommand("shell", "shellability analyses");
    InputSpec sh_in;
    add_input_flags(sh, sh_in);
    bool sh_verdict = false, sh_fa = false, sh_dot = false, sh_brute = false;
    long long sh_cap = 100000;
    sh->add_flag("--verdict", sh_verdict, "shellability verdict");
    sh->add_flag("--fa", sh_fa, "facet adjacency graph");
    sh->add_flag("--dot", sh_dot, "DOT output for --fa");
    sh->add_flag("--brute", sh_brute, "brute-force shelling order");
    sh->add_option("--cap", sh_cap, "maximal chain cap");

    // tafs
    auto* tf = app.add_subcommand("tafs", "two-acyclic factorization systems");
    std::string tf_action, tf_file;
    tf->add_option("action", tf_action, "classify | check | counterexample")->required();
    tf->add_option("file", tf_file, "decorated multigraph JSON");

    // verify
    auto* ver = app.add_subcommand("verify", "run a property suite");
    std::string ver_suite;
    int ver_count = 0, ver_jobs = 1;
    uint64_t ver_seed = 1;
    ver->add_option("suite", ver_suite, "labelling | doubling | galois | dimension | tafs | families | dilworth")
        ->required();
    ver->add_option("--count", ver_count, "instances (0 = suite default)");
    ver->add_option("--seed", ver_seed, "random seed");
    ver->add_option("--jobs", ver_jobs, "worker threads");

    // export
    auto* ex = app.add_subcommand("export", "file exports");
    InputSpec ex_in;
    add_input_flags(ex, ex_in);
    std::string ex_format = "json", ex_out;
    ex->add_option("--format", ex_format, "dot_hasse | dot_galois | dot_cjg | json");
    ex->add_option("-o,--output", ex_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            if (!gen_args.empty() && gen_args[0] == "gentle") {
                latt::require(gen_args.size() == 2, latt::errc::invalid_parameter,
                              "gen gentle quiver.json");
                auto T = latt::gentle_from_json(slurp(gen_args[1]));
                auto ta = latt::torsion_analysis(T);
                nlohmann::ordered_json j;
                j["bricks"] = ta.bricks.size();
                j["elements"] = ta.n_elements;
                j["dim"] = ta.dim;
                emit(j.dump(2), gen_out);
            } else {
                emit(latt::lattice_to_json(generated_lattice(gen_args)), gen_out);
            }
            return exit_ok;
        }
        if (*an) {
            auto in = resolve_input(an_in);
            latt::AnalyzeOptions opt;
            opt.budget_ms = an_budget;
            opt.oracle_cap = an_cap;
            auto rep = latt::analyze(in.lattice, in.cert ? &*in.cert : nullptr, opt);
            emit(rep.to_json(), "");
            return exit_ok;
        }
        if (*lab) {
            auto in = resolve_input(lab_in);
            const auto& L = in.lattice;
            latt::ChainPhi phi = lab_chain.empty()
                                     ? latt::length_spine(L).longest_chain
                                     : latt::make_chain(L, parse_ids(lab_chain));
            auto el = latt::gamma_labellings(L, phi);
            std::ostringstream os;
            if (lab_dot) {
                os << "digraph hasse {\n  rankdir=BT;\n";
                for (size_t e = 0; e < L.covers.size(); ++e)
                    os << "  v" << L.covers[e].first << " -> v" << L.covers[e].second
                       << " [label=\"" << el.gamma1p[e] << "," << el.gamma2p[e]
                       << "\"];\n";
                os << "}\n";
            } else {
                os << "edge\tgamma1\tgamma1'\tgamma2\tgamma2'\n";
                for (size_t e = 0; e < L.covers.size(); ++e)
                    os << L.covers[e].first << "<" << L.covers[e].second << "\t"
                       << el.gamma1[e] << "\t" << el.gamma1p[e] << "\t" << el.gamma2[e]
                       << "\t" << el.gamma2p[e] << "\n";
            }
            emit(os.str(), "");
            return exit_ok;
        }
        if (*dbl) {
            auto res = latt::run_script(latt::script_from_json(slurp(dbl_script)));
            if (dbl_certify) {
                auto v = latt::certify(res.cert);
                nlohmann::ordered_json j;
                j["n"] = res.lattice.n;
                j["congruence_uniform"] = res.cert.congruence_uniform;
                j["join_cu"] = res.cert.join_cu;
                j["meet_cu"] = res.cert.meet_cu;
                j["congruence_normal"] = res.cert.congruence_normal;
                j["extremal"] = v.extremal;
                j["join_extremal"] = v.join_extremal;
                j["meet_extremal"] = v.meet_extremal;
                j["left_modular"] = v.left_modular;
                emit(j.dump(2), dbl_out);
            } else {
                emit(latt::lattice_to_json(res.lattice), dbl_out);
            }
            return exit_ok;
        }
        if (*gal) {
            if (!gal_reconstruct.empty()) {
                auto G = latt::multigraph_from_json(slurp(gal_reconstruct)).simple();
                emit(latt::lattice_to_json(latt::lattice_from_galois(G).lattice), "");
                return exit_ok;
            }
            auto in = resolve_input(gal_in);
            if (gal_cjg) {
                auto cjg = latt::canonical_join_graph(in.lattice);
                emit(cjg.to_dot(), "");
            } else {
                auto G = latt::galois_graph(in.lattice);
                emit(gal_dot ? G.to_dot() : latt::multigraph_to_json([&] {
                    latt::DecoratedMultigraph M;
                    M.m = G.m;
                    for (int u = 0; u < G.m; ++u)
                        for (int v = G.out[size_t(u)].first(); v >= 0;
                             v = G.out[size_t(u)].next(v))
                            M.arrows.push_back({u, v, latt::ArrowKind::plain});
                    return M;
                }()),
                     "");
            }
            return exit_ok;
        }
        if (*dim) {
            auto in = resolve_input(dim_in);
            const auto& L = in.lattice;
            nlohmann::ordered_json j;
            j["method"] = dim_method;
            if (dim_method == "galois") {
                latt::require(L.n > 1, latt::errc::trivial_lattice, "one-element lattice");
                auto sd = latt::semidistributivity(L);
                latt::require(sd.is_jsd && sd.is_msd, latt::errc::not_semidistributive,
                              "galois method needs semidistributivity");
                auto cg = latt::complement_of(latt::galois_graph(L));
                try {
                    auto col = latt::chromatic_number(cg, dim_budget);
                    j["dim"] = col.chi;
                    j["chi"] = col.chi;
                    j["clique"] = col.clique;
                    j["coloring"] = col.coloring;
                } catch (const latt::error& e) {
                    if (e.code != latt::errc::timeout) throw;
                    j["timeout"] = true;  // over budget: report the bounds instead
                }
            } else if (dim_method == "oracle") {
                j["dim"] = latt::dimension_oracle(L, dim_cap);
            } else if (dim_method == "bounds") {
                // bounds only
            } else {
                latt::fail(latt::errc::unsupported_format, "unknown method " + dim_method);
            }
            auto b = latt::dim_bounds(L);
            j["bounds"] = {{"lower", b.lower},
                           {"upper", b.upper},
                           {"cover_lb", b.cover_lb},
                           {"cover_lb_valid", b.cover_lb_valid}};
            emit(j.dump(2), "");
            return exit_ok;
        }
        if (*sh) {
            auto in = resolve_input(sh_in);
            if (sh_brute) {
                auto order = latt::brute_force_shelling(in.lattice);
                nlohmann::ordered_json j;
                j["shelling_found"] = order.has_value();
                if (order) j["order"] = *order;
                emit(j.dump(2), "");
            } else if (sh_fa) {
                auto fa = latt::facet_adjacency(in.lattice, sh_cap);
                if (sh_dot) {
                    emit(fa.graph.to_dot(), "");
                } else {
                    auto rep = latt::disjoint_source_sets(fa.graph);
                    nlohmann::ordered_json j;
                    j["chains"] = fa.chains.size();
                    j["edges"] = fa.graph.edge_count();
                    j["two_disjoint_source_sets"] = rep.found.has_value();
                    emit(j.dump(2), "");
                }
            } else {
                auto v = latt::shellable_verdict(in.lattice,
                                                 in.cert ? &*in.cert : nullptr, sh_cap);
                nlohmann::ordered_json j;
                j["verdict"] = v.verdict == latt::Shellability::Shellable ? "Shellable"
                               : v.verdict == latt::Shellability::NotShellable
                                   ? "NotShellable"
                                   : "Unknown";
                j["reason"] = v.reason;
                emit(j.dump(2), "");
            }
            return exit_ok;
        }
        if (*tf) {
            if (tf_action == "counterexample") {
                auto rep = latt::counterexample_pipeline();
                nlohmann::ordered_json j;
                j["elements"] = rep.elements;
                j["sd"] = rep.sd;
                j["triangle_free"] = rep.triangle_free;
                j["chi"] = rep.chi;
                j["grotzsch_isomorphic"] = rep.grotzsch_isomorphic;
                j["admits_tafs"] = rep.admits;
                emit(j.dump(2), "");
                return exit_ok;
            }
            latt::require(!tf_file.empty(), latt::errc::invalid_parameter,
                          "tafs " + tf_action + " needs a graph file");
            auto G = latt::multigraph_from_json(slurp(tf_file));
            if (tf_action == "classify") {
                emit(latt::multigraph_to_json(latt::classify_arrows(G)), "");
            } else if (tf_action == "check") {
                auto chk = latt::is_tafs(latt::classify_arrows(G));
                nlohmann::ordered_json j;
                j["ok"] = chk.ok;
                if (!chk.ok) j["violation"] = chk.violation;
                emit(j.dump(2), "");
            } else {
                latt::fail(latt::errc::invalid_parameter, "unknown tafs action " + tf_action);
            }
            return exit_ok;
        }
        if (*ver) {
            if (ver_count == 0) {
                if (ver_suite == "labelling") ver_count = 500;
                else if (ver_suite == "doubling") ver_count = 300;
                else if (ver_suite == "dilworth") ver_count = 100;
                else if (ver_suite == "tafs") ver_count = 40;
                else if (ver_suite == "families") ver_count = 25;
                else ver_count = 100;
            }
            auto res = latt::run_suite(ver_suite, ver_count, ver_seed, ver_jobs);
            std::cout << res.suite << ": " << res.passed << "/" << res.total << " pass\n";
            for (const auto& f : res.failures) std::cout << "  FAIL " << f << "\n";
            return res.ok() ? exit_ok : exit_assertion;
        }
        if (*ex) {
            auto in = resolve_input(ex_in);
            if (ex_format == "json")
                emit(latt::lattice_to_json(in.lattice), ex_out);
            else if (ex_format == "dot_hasse")
                emit(latt::lattice_to_dot(in.lattice), ex_out);
            else if (ex_format == "dot_galois")
                emit(latt::galois_graph(in.lattice).to_dot(), ex_out);
            else if (ex_format == "dot_cjg")
                emit(latt::canonical_join_graph(in.lattice).to_dot(), ex_out);
            else
                latt::fail(latt::errc::unsupported_format, "unknown format " + ex_format);
            return exit_ok;
        }
    } catch (const latt::error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_ok;
}
