#include "latt/labelling.hpp"

#include <algorithm>

#include "latt/error.hpp"

namespace latt {

EdgeLabelling gamma_labellings(const Lattice& L, const ChainPhi& phi) {
    require(!phi.elements.empty() && phi.elements.front() == 0 &&
                phi.elements.back() == L.n - 1,
            errc::invalid_parameter, "chain must contain bottom and top");
    const auto& x = phi.elements;
    int k = int(x.size()) - 1;

    EdgeLabelling lab;
    lab.chain = phi;
    lab.delta.assign(L.n, -1);
    lab.beta.assign(L.n, -1);
    auto irr = irreducibles(L);
    for (int j : irr.jirr)
        for (int i = 0; i <= k; ++i)
            if (L.leq(j, x[size_t(i)])) { lab.delta[size_t(j)] = i; break; }
    for (int m : irr.mirr)
        for (int i = k; i >= 1; --i)
            if (L.leq(x[size_t(i - 1)], m)) { lab.beta[size_t(m)] = i; break; }

    size_t ne = L.covers.size();
    lab.gamma1.assign(ne, 0);
    lab.gamma1p.assign(ne, 0);
    lab.gamma2.assign(ne, 0);
    lab.gamma2p.assign(ne, 0);
    for (size_t e = 0; e < ne; ++e) {
        auto [b, c] = L.covers[e];
        int g1 = k + 1;
        for (int j : irr.jirr)
            if (L.leq(j, c) && !L.leq(j, b)) g1 = std::min(g1, lab.delta[size_t(j)]);
        lab.gamma1[e] = g1;
        int g2 = 0;
        for (int m : irr.mirr)
            if (L.leq(b, m) && !L.leq(c, m)) g2 = std::max(g2, lab.beta[size_t(m)]);
        lab.gamma2[e] = g2;
        for (int i = k; i >= 1; --i)
            if (L.leq(L.meet(c, x[size_t(i - 1)]), b)) { lab.gamma1p[e] = i; break; }
        for (int i = 0; i <= k; ++i)
            if (L.leq(c, L.join(b, x[size_t(i)]))) { lab.gamma2p[e] = i; break; }
    }
    return lab;
}

bool is_left_modular_element(const Lattice& L, int a) {
    for (auto [b, c] : L.covers)
        if (L.join(a, b) == L.join(a, c) && L.meet(a, b) == L.meet(a, c)) return false;
    return true;
}

LMReport left_modular(const Lattice& L) {
    LMReport r;
    r.lm_elements = Bits(L.n);
    for (int a = 0; a < L.n; ++a) {
        bool lm = true;
        for (size_t e = 0; e < L.covers.size() && lm; ++e) {
            auto [b, c] = L.covers[e];
            if (L.join(a, b) == L.join(a, c) && L.meet(a, b) == L.meet(a, c)) {
                lm = false;
                r.counterexamples.emplace_back(a, int(e));
            }
        }
        if (lm) r.lm_elements.set(a);
    }
    // smallest maximal chain of L through left modular elements, if any
    if (r.lm_elements.test(0) && r.lm_elements.test(L.n - 1)) {
        std::vector<int> stack{0};
        std::vector<size_t> next_child{0};
        while (!stack.empty()) {
            int cur = stack.back();
            if (cur == L.n - 1) {
                r.lm_chain = stack;
                break;
            }
            bool advanced = false;
            const auto& ups = L.upper_covers[cur];
            for (size_t& i = next_child.back(); i < ups.size(); ++i) {
                int y = ups[i];
                if (r.lm_elements.test(y)) {
                    ++i;
                    stack.push_back(y);
                    next_child.push_back(0);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                stack.pop_back();
                next_child.pop_back();
            }
        }
    }
    return r;
}

LabellingTheoremReport verify_labelling_theorem(const Lattice& L, const ChainPhi& phi) {
    auto lab = gamma_labellings(L, phi);
    LabellingTheoremReport rep;
    rep.gamma2_eq = lab.gamma2 == lab.gamma2p && lab.gamma1 == lab.gamma1p;
    rep.chain_order = true;
    for (size_t e = 0; e < lab.gamma1p.size(); ++e)
        if (lab.gamma2p[e] > lab.gamma1p[e]) rep.chain_order = false;
    rep.equality = lab.gamma1p == lab.gamma2p;
    rep.all_phi_lm = true;
    for (int xi : phi.elements)
        if (!is_left_modular_element(L, xi)) rep.all_phi_lm = false;
    require(rep.gamma2_eq, errc::theorem_violation, "gamma = gamma' failed");
    require(rep.chain_order, errc::theorem_violation, "gamma2' <= gamma1' failed");
    require(rep.equality == rep.all_phi_lm, errc::theorem_violation,
            "equality iff left-modular chain failed");
    return rep;
}

namespace {

// maximal chains of interval [x,y] as label words, lex-sorted traversal
void interval_chains(const Lattice& L, int x, int y, std::vector<int>& word,
                     std::vector<std::vector<int>>& out,
                     const std::vector<int>& edge_labels, long long cap) {
    if (x == y) {
        require(int(out.size()) < cap, errc::cap_exceeded, "too many interval chains");
        out.push_back(word);
        return;
    }
    for (int z : L.upper_covers[x])
        if (L.leq(z, y)) {
            word.push_back(edge_labels[size_t(L.cover_index(x, z))]);
            interval_chains(L, z, y, word, out, edge_labels, cap);
            word.pop_back();
        }
}

bool strictly_increasing(const std::vector<int>& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] >= w[i + 1]) return false;
    return true;
}

}  // namespace

bool is_el_labelling(const Lattice& L, const std::vector<int>& edge_labels,
                     long long cap) {
    require(edge_labels.size() == L.covers.size(), errc::invalid_parameter,
            "one label per cover edge expected");
    for (int x = 0; x < L.n; ++x)
        for (int y = L.up[x].next(x); y >= 0; y = L.up[x].next(y)) {
            std::vector<std::vector<int>> words;
            std::vector<int> word;
            interval_chains(L, x, y, word, words, edge_labels, cap);
            int rising = 0;
            size_t rising_at = 0;
            for (size_t i = 0; i < words.size(); ++i)
                if (strictly_increasing(words[i])) {
                    ++rising;
                    rising_at = i;
                }
            if (rising != 1) return false;
            for (size_t i = 0; i < words.size(); ++i)
                if (i != rising_at && words[i] <= words[rising_at]) return false;
        }
    return true;
}

}  // namespace latt
