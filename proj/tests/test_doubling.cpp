#include <doctest.h>

#include "latt/doubling.hpp"
#include "latt/error.hpp"
#include "latt/labelling.hpp"
#include "test_helpers.hpp"

using namespace latt;
using namespace latt::test;

namespace {

DoublingScript convex_step(DoublingScript s, std::vector<int> ids) {
    ScriptStep st;
    st.convex = std::move(ids);
    s.steps.push_back(std::move(st));
    return s;
}

DoublingScript interval_step(DoublingScript s, int a, int b) {
    ScriptStep st;
    st.is_interval_sugar = true;
    st.a = a;
    st.b = b;
    s.steps.push_back(std::move(st));
    return s;
}

// three successive doublings on top of the two
// steps that build the square; the final lattice has 12 elements and exactly
// four left modular elements forming no maximal chain
DoublingScript three_doublings_script() {
    DoublingScript s;
    s = convex_step(std::move(s), {0});
    s = interval_step(std::move(s), 0, 1);
    s = convex_step(std::move(s), {0, 1, 2});
    s = interval_step(std::move(s), 4, 5);
    s = convex_step(std::move(s), {4, 5, 6});
    return s;
}

// interval script reaching the non-extremal congruence uniform sample
// lattice; the step doubling [2,2] misses the spine
DoublingScript nonextremal_cu_script() {
    DoublingScript s;
    s = interval_step(std::move(s), 0, 0);
    s = interval_step(std::move(s), 0, 0);
    s = interval_step(std::move(s), 0, 2);
    s = interval_step(std::move(s), 0, 4);
    s = interval_step(std::move(s), 2, 2);
    s = interval_step(std::move(s), 7, 7);
    return s;
}

}  // namespace

TEST_CASE("heart") {
    auto L = n5();
    Bits interval = L.up[1] & L.down[4];  // [a, 1]
    CHECK(heart(L, interval) == interval);

    Bits ac(L.n);
    ac.set(1);
    ac.set(3);
    CHECK(heart(L, ac).none());  // would need to sit above a v c and below a ^ c

    Bits off(L.n);
    off.set(0);
    off.set(2);  // {0, b} skips a: not convex
    CHECK_THROWS_AS(heart(L, off), error);

    // heart equals the closure formula of the heart lemma, on every convex
    // subset of the pentagon and the diamond, and on interval hulls of the
    // bigger sample (intervals and genuinely non-interval convex sets alike)
    auto closure_formula = [](const Lattice& M, const Bits& C) {
        Bits alt(M.n);
        for (int a = C.first(); a >= 0; a = C.next(a)) {
            bool keep = true;
            for (int b = C.first(); b >= 0 && keep; b = C.next(b))
                if (!C.test(M.join(a, b)) || !C.test(M.meet(a, b))) keep = false;
            if (keep) alt.set(a);
        }
        return alt;
    };
    for (const Lattice& M : {n5(), m3()})
        for (unsigned mask = 1; mask < (1u << M.n); ++mask) {
            Bits C(M.n);
            for (int v = 0; v < M.n; ++v)
                if ((mask >> v) & 1) C.set(v);
            if (!is_convex(M, C)) continue;
            CHECK(heart(M, C) == closure_formula(M, C));
        }
    auto M = nonextremal_cu();
    for (int x = 0; x < M.n; ++x)
        for (int y = 0; y < M.n; ++y) {
            Bits S(M.n);
            S.set(x);
            S.set(y);
            Bits C(M.n);
            for (int u = S.first(); u >= 0; u = S.next(u))
                for (int v = S.first(); v >= 0; v = S.next(v))
                    if (M.leq(u, v)) C |= M.up[size_t(u)] & M.down[size_t(v)];
            if (C.none()) continue;
            CHECK(heart(M, C) == closure_formula(M, C));
        }
}

TEST_CASE("double") {
    auto one = build_lattice(1, {}, {""});
    Bits whole(1);
    whole.set(0);
    auto two = double_lattice(one, whole);
    CHECK(two.n == 2);
    CHECK(two.labels == std::vector<std::string>{"0", "1"});

    Bits top(2);
    top.set(1);
    auto three = double_lattice(two, top);
    CHECK(three.n == 3);
    CHECK(three.covers == CoverList{{0, 1}, {1, 2}});

    Bits both = Bits::full(2);
    auto square = double_lattice(two, both);
    CHECK(are_isomorphic(square, boolean2()));

    Bits empty(2);
    CHECK_THROWS_AS(double_lattice(two, empty), error);
}

TEST_CASE("run_script three chain") {
    DoublingScript s;
    s = convex_step(std::move(s), {0});
    s = convex_step(std::move(s), {1});
    auto res = run_script(s);
    CHECK(res.lattice.n == 3);
    for (const auto& step : res.cert.steps) {
        CHECK(step.is_interval);
        CHECK(step.hits_spine);
    }
    CHECK(res.cert.congruence_uniform);
    auto v = certify(res.cert);
    CHECK(v.extremal);
    CHECK(v.left_modular);
}

TEST_CASE("run_script square") {
    DoublingScript s;
    s = convex_step(DoublingScript{}, {0});
    s = interval_step(std::move(s), 0, 1);
    auto res = run_script(s);
    CHECK(are_isomorphic(res.lattice, boolean2()));
    auto v = certify(res.cert);
    CHECK(v.extremal);
    CHECK(v.left_modular);
}

TEST_CASE("run_script three doublings") {
    auto res = run_script(three_doublings_script());
    CHECK(res.lattice.n == 12);
    auto lm = left_modular(res.lattice);
    CHECK(lm.lm_elements.count() == 4);
    CHECK_FALSE(lm.lm_chain.has_value());

    const auto& last = res.cert.steps.back();
    CHECK(last.heart == std::vector<int>{4});
    CHECK_FALSE(last.heart_hits_lm_chain);
    CHECK(last.hits_spine);

    CHECK(res.cert.congruence_normal);
    CHECK(res.cert.join_cu);
    CHECK_FALSE(res.cert.congruence_uniform);
    CHECK_FALSE(res.cert.meet_cu);

    auto v = certify(res.cert);
    CHECK_FALSE(v.left_modular);
    CHECK(v.join_extremal);
    CHECK_FALSE(v.extremal);
    // certificate verdicts match first principles
    CHECK(extremality(res.lattice).join_extremal == v.join_extremal);
    CHECK(extremality(res.lattice).extremal == v.extremal);
    CHECK(lm.lm_chain.has_value() == v.left_modular);
}

TEST_CASE("run_script non-extremal sample") {
    auto res = run_script(nonextremal_cu_script());
    CHECK(are_isomorphic(res.lattice, nonextremal_cu()));
    CHECK(res.cert.congruence_uniform);
    CHECK_FALSE(res.cert.steps[5].hits_spine);
    auto v = certify(res.cert);
    CHECK_FALSE(v.extremal);
    CHECK_FALSE(v.left_modular);
    CHECK_FALSE(extremality(res.lattice).extremal);
    CHECK_FALSE(left_modular(res.lattice).lm_chain.has_value());
}

TEST_CASE("step errors carry the step index") {
    DoublingScript s;
    s = convex_step(std::move(s), {0});
    s = convex_step(std::move(s), {1});
    s = convex_step(std::move(s), {0, 2});  // skips the middle: not convex
    try {
        run_script(s);
        FAIL("non-convex step accepted");
    } catch (const error& e) {
        CHECK(e.code == errc::not_convex);
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}

TEST_CASE("random scripts") {
    auto s1 = random_script(1, 42, ScriptMode::uniform_interval);
    REQUIRE(s1.steps.size() == 1);
    auto first = run_script(s1);
    CHECK(first.lattice.n == 2);

    // determinism: byte-identical on rerun
    auto a = script_to_json(random_script(6, 99, ScriptMode::normal));
    auto b = script_to_json(random_script(6, 99, ScriptMode::normal));
    CHECK(a == b);

    // force_spine gives extremal congruence uniform lattices
    for (uint64_t seed : {5u, 21u, 91u}) {
        auto res = run_script(random_script(8, seed, ScriptMode::force_spine));
        CHECK(res.cert.congruence_uniform);
        auto v = certify(res.cert);
        CHECK(v.extremal);
        CHECK(extremality(res.lattice).extremal);
    }

    // normal mode scripts stay congruence normal and certify against first
    // principles
    for (uint64_t seed : {7u, 13u, 44u}) {
        auto res = run_script(random_script(5, seed, ScriptMode::normal));
        auto v = certify(res.cert);
        CHECK(v.left_modular == left_modular(res.lattice).lm_chain.has_value());
        CHECK(v.extremal == extremality(res.lattice).extremal);
        CHECK(v.join_extremal == extremality(res.lattice).join_extremal);
        CHECK(v.meet_extremal == extremality(res.lattice).meet_extremal);
    }
}

TEST_CASE("script json round trip") {
    auto s = three_doublings_script();
    auto back = script_from_json(script_to_json(s));
    REQUIRE(back.steps.size() == s.steps.size());
    auto r1 = run_script(s), r2 = run_script(back);
    CHECK(r1.lattice.covers == r2.lattice.covers);
    CHECK_THROWS_AS(script_from_json("{\"steps\": [{}]}"), error);
}
