#include "latt/doubling.hpp"

#include <algorithm>

#include <json.hpp>

#include "latt/error.hpp"
#include "latt/labelling.hpp"

namespace latt {

bool is_convex(const Lattice& L, const Bits& C) {
    for (int x = C.first(); x >= 0; x = C.next(x))
        for (int y = C.next(x); y >= 0; y = C.next(y)) {
            if (!L.leq(x, y)) continue;
            Bits seg = L.up[x] & L.down[y];
            if (!seg.subset_of(C)) return false;
        }
    return true;
}

Bits ideal_of(const Lattice& L, const Bits& C) {
    Bits I(L.n);
    for (int x = C.first(); x >= 0; x = C.next(x)) I |= L.down[x];
    return I;
}

namespace {

Bits minimal_of(const Lattice& L, const Bits& C) {
    Bits mins(L.n);
    for (int x = C.first(); x >= 0; x = C.next(x)) {
        Bits below = L.down[x] & C;
        if (below.count() == 1) mins.set(x);
    }
    return mins;
}

Bits maximal_of(const Lattice& L, const Bits& C) {
    Bits maxs(L.n);
    for (int x = C.first(); x >= 0; x = C.next(x)) {
        Bits above = L.up[x] & C;
        if (above.count() == 1) maxs.set(x);
    }
    return maxs;
}

}  // namespace

Bits heart(const Lattice& L, const Bits& C) {
    require(C.any(), errc::empty_convex_set, "heart of an empty set");
    require(is_convex(L, C), errc::not_convex, "heart needs a convex set");
    Bits mins = minimal_of(L, C), maxs = maximal_of(L, C);
    Bits H(L.n);
    for (int a = C.first(); a >= 0; a = C.next(a)) {
        bool ok = maxs.subset_of(L.up[a]) && mins.subset_of(L.down[a]);
        if (ok) H.set(a);
    }
    return H;
}

Lattice double_lattice(const Lattice& L, const Bits& C) {
    require(C.any(), errc::empty_convex_set, "cannot double an empty set");
    require(is_convex(L, C), errc::not_convex, "doubling needs a convex set");

    Bits I = ideal_of(L, C);
    // element set: I(C) x {0}  union  ((L \ I(C)) u C) x {1}
    std::vector<std::pair<int, int>> elems;  // (parent, eps), lex order = linear extension
    for (int x = 0; x < L.n; ++x) {
        if (I.test(x)) elems.emplace_back(x, 0);
        if (!I.test(x) || C.test(x)) elems.emplace_back(x, 1);
    }
    int n = int(elems.size());

    // subposet order of L x {0<1}; covers by transitive reduction
    std::vector<Bits> ups(static_cast<size_t>(n), Bits(n)), downs(static_cast<size_t>(n), Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (L.leq(elems[size_t(i)].first, elems[size_t(j)].first) &&
                elems[size_t(i)].second <= elems[size_t(j)].second) {
                ups[size_t(i)].set(j);
                downs[size_t(j)].set(i);
            }
    CoverList covers;
    for (int i = 0; i < n; ++i)
        for (int j = ups[size_t(i)].next(i); j >= 0; j = ups[size_t(i)].next(j)) {
            Bits seg = ups[size_t(i)] & downs[size_t(j)];
            if (seg.count() == 2) covers.emplace_back(i, j);
        }

    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[size_t(i)] =
            L.label_of(elems[size_t(i)].first) + char('0' + elems[size_t(i)].second);

    Lattice D = build_lattice(n, covers, labels);

    // bookkeeping of the construction, cheap and always on
    auto tl = irreducibles(L), td = irreducibles(D);
    int minc = minimal_of(L, C).count(), maxc = maximal_of(L, C).count();
    require(int(td.jirr.size()) == int(tl.jirr.size()) + minc, errc::theorem_violation,
            "join-irreducible count after doubling");
    require(int(td.mirr.size()) == int(tl.mirr.size()) + maxc, errc::theorem_violation,
            "meet-irreducible count after doubling");
    bool spine_hit = C.intersects(length_spine(L).spine);
    require(length_spine(D).length == length_spine(L).length + (spine_hit ? 1 : 0),
            errc::theorem_violation, "length after doubling");
    return D;
}

namespace {

// does some element of S lie on a maximal left modular chain?
bool meets_lm_chain(const Lattice& L, const Bits& S, const LMReport& lm) {
    if (!lm.lm_elements.test(0) || !lm.lm_elements.test(L.n - 1)) return false;
    // forward/backward reachability inside the LM-restricted cover digraph
    Bits from_bot(L.n), to_top(L.n);
    if (lm.lm_elements.test(0)) from_bot.set(0);
    for (int x = 0; x < L.n; ++x)
        if (from_bot.test(x))
            for (int y : L.upper_covers[x])
                if (lm.lm_elements.test(y)) from_bot.set(y);
    if (lm.lm_elements.test(L.n - 1)) to_top.set(L.n - 1);
    for (int x = L.n - 1; x >= 0; --x)
        if (to_top.test(x))
            for (int y : L.lower_covers[x])
                if (lm.lm_elements.test(y)) to_top.set(y);
    Bits on_chain = from_bot & to_top;
    return S.intersects(on_chain);
}

Bits resolve_step(const Lattice& L, const ScriptStep& step, int step_index) {
    Bits C(L.n);
    if (step.is_interval_sugar) {
        require(0 <= step.a && step.a < L.n && 0 <= step.b && step.b < L.n,
                errc::invalid_parameter,
                "step " + std::to_string(step_index) + ": interval endpoint out of range");
        require(L.leq(step.a, step.b), errc::invalid_parameter,
                "step " + std::to_string(step_index) + ": interval endpoints incomparable");
        C = L.up[step.a] & L.down[step.b];
    } else {
        for (int x : step.convex) {
            require(0 <= x && x < L.n, errc::invalid_parameter,
                    "step " + std::to_string(step_index) + ": element out of range");
            C.set(x);
        }
    }
    require(C.any(), errc::empty_convex_set,
            "step " + std::to_string(step_index) + ": empty convex set");
    require(is_convex(L, C), errc::not_convex,
            "step " + std::to_string(step_index) + ": set is not convex");
    return C;
}

}  // namespace

ScriptResult run_script(const DoublingScript& script) {
    ScriptResult r;
    r.lattice = build_lattice(1, {}, {""});
    r.cert.congruence_uniform = true;
    r.cert.join_cu = true;
    r.cert.meet_cu = true;
    for (size_t s = 0; s < script.steps.size(); ++s) {
        const Lattice& L = r.lattice;
        Bits C = resolve_step(L, script.steps[s], int(s));

        StepCertificate sc;
        sc.is_lower_pseudo = minimal_of(L, C).count() == 1;
        sc.is_upper_pseudo = maximal_of(L, C).count() == 1;
        sc.is_interval = sc.is_lower_pseudo && sc.is_upper_pseudo;
        sc.hits_spine = C.intersects(length_spine(L).spine);
        Bits H = heart(L, C);
        sc.heart = H.to_vector();
        sc.heart_hits_lm_chain = meets_lm_chain(L, H, left_modular(L));
        r.cert.steps.push_back(sc);
        r.cert.congruence_uniform &= sc.is_interval;
        r.cert.join_cu &= sc.is_lower_pseudo;
        r.cert.meet_cu &= sc.is_upper_pseudo;

        r.lattice = double_lattice(L, C);
    }
    return r;
}

CertificateVerdict certify(const DoublingCertificate& cert) {
    CertificateVerdict v;
    bool all_spine = true, all_heart = true;
    for (const auto& s : cert.steps) {
        all_spine &= s.hits_spine;
        all_heart &= s.heart_hits_lm_chain;
    }
    v.join_extremal = cert.join_cu && all_spine;
    v.meet_extremal = cert.meet_cu && all_spine;
    v.extremal = cert.congruence_uniform && all_spine;
    v.left_modular = all_heart;
    return v;
}

DoublingScript random_script(int steps, uint64_t seed, ScriptMode mode) {
    require(steps >= 1, errc::invalid_parameter, "need at least one step");
    Rng rng(seed);
    DoublingScript script;
    Lattice L = build_lattice(1, {}, {""});
    for (int s = 0; s < steps; ++s) {
        ScriptStep step;
        if (mode == ScriptMode::normal) {
            // convex hull of a few random elements
            int k = rng.range(1, std::min(3, L.n));
            Bits S(L.n);
            for (int t = 0; t < k; ++t) S.set(int(rng.below(uint64_t(L.n))));
            Bits C(L.n);
            for (int x = S.first(); x >= 0; x = S.next(x))
                for (int y = S.first(); y >= 0; y = S.next(y))
                    if (L.leq(x, y)) C |= L.up[x] & L.down[y];
            step.convex = C.to_vector();
        } else {
            Bits spine = length_spine(L).spine;
            while (true) {
                int a = int(rng.below(uint64_t(L.n)));
                int b = int(rng.below(uint64_t(L.n)));
                if (!L.leq(a, b)) std::swap(a, b);
                if (!L.leq(a, b)) continue;
                if (mode == ScriptMode::force_spine &&
                    !(L.up[a] & L.down[b]).intersects(spine))
                    continue;
                step.is_interval_sugar = true;
                step.a = a;
                step.b = b;
                break;
            }
        }
        Bits C = resolve_step(L, step, s);
        L = double_lattice(L, C);
        script.steps.push_back(std::move(step));
    }
    return script;
}

std::string script_to_json(const DoublingScript& s) {
    nlohmann::ordered_json j;
    auto& steps = j["steps"] = nlohmann::ordered_json::array();
    for (const auto& st : s.steps) {
        if (st.is_interval_sugar)
            steps.push_back({{"interval", {st.a, st.b}}});
        else
            steps.push_back({{"convex", st.convex}});
    }
    return j.dump();
}

DoublingScript script_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    require(j.contains("steps"), errc::parse_error, "script JSON needs a steps array");
    DoublingScript s;
    for (const auto& e : j.at("steps")) {
        ScriptStep st;
        if (e.contains("interval")) {
            st.is_interval_sugar = true;
            st.a = e.at("interval").at(0).get<int>();
            st.b = e.at("interval").at(1).get<int>();
        } else if (e.contains("convex")) {
            st.convex = e.at("convex").get<std::vector<int>>();
        } else {
            fail(errc::parse_error, "script step needs convex or interval");
        }
        s.steps.push_back(std::move(st));
    }
    return s;
}

}  // namespace latt
