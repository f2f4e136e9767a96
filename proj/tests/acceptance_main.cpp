// Acceptance suite: one criterion per line, exact checks only.
#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "latt/dimension.hpp"
#include "latt/doubling.hpp"
#include "latt/families.hpp"
#include "latt/galois.hpp"
#include "latt/gentle.hpp"
#include "latt/shelling.hpp"
#include "latt/tafs.hpp"
#include "latt/verify.hpp"

using namespace latt;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, const std::string& msg, std::string& detail) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

int tam_dimension(const Lattice& L) {
    if (L.n == 1) return 0;  // empty complement graph: zero colors
    return dim_sd_extremal(L);
}

std::vector<std::vector<int>> compositions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

bool suite_green(const std::string& name, int count, std::string& detail) {
    auto res = run_suite(name, count, 20260808, 2);
    if (!res.ok()) {
        detail = res.suite + " " + std::to_string(res.passed) + "/" +
                 std::to_string(res.total);
        if (!res.failures.empty()) detail += " first: " + res.failures.front();
        return false;
    }
    return true;
}

Lattice not_sd_sample() {
    return build_lattice(9, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 5}, {2, 7},
                             {3, 6}, {4, 6}, {4, 7}, {5, 8}, {6, 8}, {7, 8}});
}

Lattice nonextremal_cu() {
    return build_lattice(11,
                         {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6},
                          {5, 7}, {4, 8}, {4, 9}, {6, 8}, {7, 9}, {8, 10}, {9, 10}},
                         {"0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "1"});
}

Lattice fig_extremal() {
    return build_lattice(
        14,
        {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 7}, {5, 9},
         {6, 8}, {6, 10}, {8, 9}, {8, 11}, {10, 11}, {9, 12}, {11, 12}, {7, 13}, {12, 13}});
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1. dim(Hoch(n)) = n for n = 1..8", [](std::string& d) {
        for (int n = 1; n <= 8; ++n)
            if (!expect(dim_sd_extremal(hochschild(n).lattice) == n,
                        "n = " + std::to_string(n), d))
                return false;
        return true;
    }});

    criteria.push_back({"2. dim(Bub(m,n)) = m+n for 1 <= m+n <= 6", [](std::string& d) {
        for (int m = 0; m <= 6; ++m)
            for (int n = 0; m + n <= 6; ++n) {
                if (m + n < 1) continue;
                if (!expect(dim_sd_extremal(bubble(m, n).lattice) == m + n,
                            "(m,n) = (" + std::to_string(m) + "," + std::to_string(n) + ")",
                            d))
                    return false;
            }
        return true;
    }});

    // the width claim holds exactly when min(m,n) = 2: the general value is
    // min(m,n) + n - 1, and for m = 1 the lattice is a Hochschild lattice
    // with width n; the strict gap width > dim survives for all m,n >= 2
    criteria.push_back({"3. dim(W(m,n)) = n for m <= 3, n <= 5; width(JIrr) = n+1 when"
                        " min(m,n) = 2, and width > dim for m,n >= 2",
                        [](std::string& d) {
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 5; ++n) {
                auto W = word_lattice(m, n);
                if (!expect(dim_sd_extremal(W) == n,
                            "dim W(" + std::to_string(m) + "," + std::to_string(n) + ")",
                            d))
                    return false;
                int width = width_of(subposet_jirr(W));
                if (std::min(m, n) == 2 &&
                    !expect(width == n + 1,
                            "width W(" + std::to_string(m) + "," + std::to_string(n) + ")",
                            d))
                    return false;
                if (m >= 2 && n >= 2 &&
                    !expect(width > n,
                            "width gap W(" + std::to_string(m) + "," + std::to_string(n) +
                                ")",
                            d))
                    return false;
            }
        return true;
    }});

    criteria.push_back({"4. dim(Tam(alpha)) = n - max(alpha) for all compositions, n <= 7",
                        [](std::string& d) {
        for (int n = 1; n <= 7; ++n)
            for (const auto& parts : compositions_of(n)) {
                Composition alpha{parts};
                auto T = parabolic_tamari(alpha);
                if (!expect(tam_dimension(T.lattice) == n - alpha.max_part(),
                            "alpha of n = " + std::to_string(n), d))
                    return false;
            }
        return true;
    }});

    criteria.push_back({"5. gentle paths: dim(Tors) = n for all orientations of A_n, n <= 6;"
                        " |Tors(1->2<-3)| = 14",
                        [](std::string& d) {
        for (int n = 1; n <= 6; ++n)
            for (unsigned orient = 0; orient < (1u << (n - 1)); ++orient)
                if (!expect(torsion_dim(path_quiver(n, orient)) == n,
                            "A_" + std::to_string(n) + " orientation " +
                                std::to_string(orient),
                            d))
                    return false;
        auto ta = torsion_analysis(make_gentle(3, {{0, 1}, {2, 1}}, {}));
        return expect(ta.n_elements == 14, "element count of Tors(1->2<-3)", d);
    }});

    criteria.push_back({"6. counterexample: |L(G)| = 167, SD, Grotzsch induced, chi = 4,"
                        " no TAFS in the 2^20 sweep",
                        [](std::string& d) {
        auto rep = counterexample_pipeline();
        bool ok = true;
        // every sub-check runs; the count is asserted as stated even though
        // the embedded counterexample graph is firmly one element larger
        ok &= expect(rep.elements == 167,
                     "element count: the counterexample graph has " +
                         std::to_string(rep.elements) + " elements",
                     d);
        ok &= expect(rep.sd, "semidistributivity", d);
        ok &= expect(rep.triangle_free, "triangle-free", d);
        ok &= expect(rep.chi == 4, "chi", d);
        ok &= expect(rep.grotzsch_isomorphic, "Grotzsch isomorphism", d);
        auto S = counterexample_graph().simple();
        std::vector<int> X;
        for (int v = 0; v < 11; ++v) X.push_back(v);
        auto GX = underlying_undirected(induced_subgraph(S, X));
        bool sweep = admits_tafs(GX, TafsMode::orientation_search, 22);
        ok &= expect(!sweep, "orientation sweep found a TAFS", d);
        return ok;
    }});

    criteria.push_back({"7. non-SD sample: oracle dim = 3, chi(complement Galois) = 2",
                        [](std::string& d) {
        auto L = not_sd_sample();
        if (!expect(dimension_oracle(L) == 3, "oracle", d)) return false;
        int chi = chromatic_number(complement_of(galois_graph(L))).chi;
        return expect(chi == 2, "chi", d);
    }});

    criteria.push_back({"8. labelling theorem on 500 random congruence-normal lattices",
                        [](std::string& d) { return suite_green("labelling", 500, d); }});

    criteria.push_back({"9. doubling equivalences on 300 congruence-uniform scripts",
                        [](std::string& d) { return suite_green("doubling", 300, d); }});

    criteria.push_back({"10. galois consistency battery",
                        [](std::string& d) { return suite_green("galois", 100, d); }});

    criteria.push_back({"11. dimension cross-oracle on small critical-pair sets",
                        [](std::string& d) { return suite_green("dimension", 100, d); }});

    criteria.push_back({"12. Dilworth: dim = width(JIrr) on 100 distributive lattices",
                        [](std::string& d) { return suite_green("dilworth", 100, d); }});

    criteria.push_back({"13. facet adjacency samples: exact source sets", [](std::string& d) {
        auto F = nonextremal_cu();
        auto fa = facet_adjacency(F);
        auto rep = disjoint_source_sets(fa.graph);
        if (!expect(rep.found.has_value(), "disjoint source sets expected", d)) return false;
        auto singleton_interior = [&](const Bits& set, std::vector<int> interior) {
            if (set.count() != 1) return false;
            Bits want(F.n);
            want.set(0);
            want.set(F.n - 1);
            for (int x : interior) want.set(x);
            return fa.chains[size_t(set.first())] == want;
        };
        bool pair_ok =
            (singleton_interior(rep.found->first, {2, 5, 7, 9}) &&
             singleton_interior(rep.found->second, {1, 3, 6, 8})) ||
            (singleton_interior(rep.found->first, {1, 3, 6, 8}) &&
             singleton_interior(rep.found->second, {2, 5, 7, 9}));
        if (!expect(pair_ok, "the sets are {begi} and {acfh}", d)) return false;

        auto E = fig_extremal();
        auto fe = facet_adjacency(E);
        auto re = disjoint_source_sets(fe.graph, true);
        if (!expect(!re.found.has_value(), "extremal sample has no disjoint pair", d))
            return false;
        if (!expect(re.all_source_sets->size() == 2, "exactly two source sets", d))
            return false;
        int small = std::min((*re.all_source_sets)[0].count(),
                             (*re.all_source_sets)[1].count());
        int big = std::max((*re.all_source_sets)[0].count(),
                           (*re.all_source_sets)[1].count());
        return expect(small == 3 && big == 6, "source set sizes 3 and 6", d);
    }});

    criteria.push_back({"14. dim(Hoch(2) x Hoch(3)) = 5", [](std::string& d) {
        auto prod = direct_product(hochschild(2).lattice, hochschild(3).lattice);
        return expect(dim_sd_extremal(prod) == 5, "product dimension", d);
    }});

    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "PASS" : "FAIL") << "  " << c.name << "  [" << ms << " ms]";
        if (!ok) {
            std::cout << "  (" << detail << ")";
            ++failures;
        }
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "all criteria pass"
                                : std::to_string(failures) + " criteria failing")
              << "\n";
    return failures == 0 ? 0 : 1;
}
