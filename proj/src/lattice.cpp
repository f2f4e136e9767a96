#include "latt/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "latt/error.hpp"

namespace latt {

int Lattice::join(int x, int y) const {
    if (!join_table.empty()) return join_table[size_t(x) * size_t(n) + size_t(y)];
    Bits ub = up[x] & up[y];
    return ub.first();  // unique minimum sits at the lowest index, verified at build
}

int Lattice::meet(int x, int y) const {
    if (!meet_table.empty()) return meet_table[size_t(x) * size_t(n) + size_t(y)];
    Bits lb = down[x] & down[y];
    return lb.last();
}

int Lattice::join_all(const Bits& s) const {
    int r = 0;
    for (int x = s.first(); x >= 0; x = s.next(x)) r = join(r, x);
    return r;
}

int Lattice::meet_all(const Bits& s) const {
    int r = n - 1;
    for (int x = s.first(); x >= 0; x = s.next(x)) r = meet(r, x);
    return r;
}

const std::string& Lattice::label_of(int x) const {
    static const std::string empty;
    return labels.empty() ? empty : labels[x];
}

int Lattice::cover_index(int lower, int upper) const {
    for (size_t e = 0; e < covers.size(); ++e)
        if (covers[e].first == lower && covers[e].second == upper) return int(e);
    return -1;
}

Lattice build_lattice(int n, const CoverList& covers_in,
                      const std::vector<std::string>& labels) {
    require(n >= 1, errc::invalid_parameter, "element count must be positive");
    for (auto [lo, hi] : covers_in) {
        require(0 <= lo && lo < n && 0 <= hi && hi < n, errc::invalid_parameter,
                "cover index out of range");
        require(lo < hi, errc::not_linear_extension,
                "cover (" + std::to_string(lo) + "," + std::to_string(hi) +
                    ") does not increase");
    }

    Lattice L;
    L.n = n;
    L.up.assign(n, Bits(n));
    L.down.assign(n, Bits(n));
    if (!labels.empty()) {
        require(int(labels.size()) == n, errc::invalid_parameter, "label count mismatch");
        L.labels = labels;
    }

    std::vector<std::vector<int>> raw_up(n), raw_down(n);
    for (auto [lo, hi] : covers_in) {
        raw_up[lo].push_back(hi);
        raw_down[hi].push_back(lo);
    }

    for (int x = n - 1; x >= 0; --x) {
        L.up[x].set(x);
        for (int y : raw_up[x]) L.up[x] |= L.up[y];
    }
    for (int x = 0; x < n; ++x) {
        L.down[x].set(x);
        for (int y : raw_down[x]) L.down[x] |= L.down[y];
    }

    // lattice property: every pair needs a unique least upper and greatest
    // lower bound; in a linear extension the candidates sit at the extreme
    // indices of the bound sets. The verification scan already computes every
    // join and meet, so above 64 elements the tables are kept.
    bool keep_tables = n > 64;
    if (keep_tables) {
        L.join_table.assign(size_t(n) * size_t(n), 0);
        L.meet_table.assign(size_t(n) * size_t(n), 0);
        for (int x = 0; x < n; ++x) {
            L.join_table[size_t(x) * size_t(n) + size_t(x)] = x;
            L.meet_table[size_t(x) * size_t(n) + size_t(x)] = x;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Bits ub = L.up[x] & L.up[y];
            int j = ub.any() ? ub.first() : -1;
            require(j >= 0 && ub.subset_of(L.up[size_t(j)]), errc::not_a_lattice,
                    "elements " + std::to_string(x) + " and " + std::to_string(y) +
                        " have no unique join");
            Bits lb = L.down[x] & L.down[y];
            int m = lb.any() ? lb.last() : -1;
            require(m >= 0 && lb.subset_of(L.down[size_t(m)]), errc::not_a_lattice,
                    "elements " + std::to_string(x) + " and " + std::to_string(y) +
                        " have no unique meet");
            if (keep_tables) {
                L.join_table[size_t(x) * size_t(n) + size_t(y)] = j;
                L.join_table[size_t(y) * size_t(n) + size_t(x)] = j;
                L.meet_table[size_t(x) * size_t(n) + size_t(y)] = m;
                L.meet_table[size_t(y) * size_t(n) + size_t(x)] = m;
            }
        }

    // with all joins and meets present the extrema exist; the linear
    // extension pins them to the first and last index
    for (int x = 0; x < n; ++x) {
        require(L.down[x].test(0), errc::no_extremum, "no unique minimum");
        require(L.up[x].test(n - 1), errc::no_extremum, "no unique maximum");
    }

    // store the transitive reduction: y covers x iff [x,y] = {x,y}
    L.upper_covers.assign(n, {});
    L.lower_covers.assign(n, {});
    for (int x = 0; x < n; ++x)
        for (int y = L.up[x].next(x); y >= 0; y = L.up[x].next(y)) {
            Bits seg = L.up[x] & L.down[y];
            if (seg.count() == 2) {
                L.covers.emplace_back(x, y);
                L.upper_covers[x].push_back(y);
                L.lower_covers[y].push_back(x);
            }
        }
    std::sort(L.covers.begin(), L.covers.end());
    return L;
}

Poset poset_of(const Lattice& L) { return Poset{L.n, L.up, L.down}; }

Poset induced_subposet(const Poset& P, const std::vector<int>& elements) {
    int m = int(elements.size());
    Poset S;
    S.n = m;
    S.up.assign(m, Bits(m));
    S.down.assign(m, Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (P.leq(elements[i], elements[j])) {
                S.up[i].set(j);
                S.down[j].set(i);
            }
    return S;
}

bool IrreducibleTable::is_jirr(int x) const {
    return std::binary_search(jirr.begin(), jirr.end(), x);
}
bool IrreducibleTable::is_mirr(int x) const {
    return std::binary_search(mirr.begin(), mirr.end(), x);
}
int IrreducibleTable::jstar_of(int j) const {
    auto it = std::lower_bound(jirr.begin(), jirr.end(), j);
    return jstar[it - jirr.begin()];
}
int IrreducibleTable::mstar_of(int m) const {
    auto it = std::lower_bound(mirr.begin(), mirr.end(), m);
    return mstar[it - mirr.begin()];
}

IrreducibleTable irreducibles(const Lattice& L) {
    IrreducibleTable t;
    for (int x = 0; x < L.n; ++x) {
        if (L.lower_covers[x].size() == 1) {
            t.jirr.push_back(x);
            t.jstar.push_back(L.lower_covers[x][0]);
        }
        if (L.upper_covers[x].size() == 1) {
            t.mirr.push_back(x);
            t.mstar.push_back(L.upper_covers[x][0]);
        }
    }
    t.kappa.assign(L.n, -1);
    return t;
}

namespace {

// unique minimum of a nonempty subset, or -1; linear extension puts it first
int subset_minimum(const Lattice& L, const Bits& s) {
    int z = s.first();
    return s.subset_of(L.up[z]) ? z : -1;
}
int subset_maximum(const Lattice& L, const Bits& s) {
    int z = s.last();
    return s.subset_of(L.down[z]) ? z : -1;
}

}  // namespace

SemidistributivityReport semidistributivity(const Lattice& L) {
    SemidistributivityReport r;
    r.table = irreducibles(L);
    auto& t = r.table;
    size_t ne = L.covers.size();
    t.gammaJ.assign(ne, -1);
    t.gammaM.assign(ne, -1);
    r.is_jsd = r.is_msd = true;
    for (size_t e = 0; e < ne; ++e) {
        auto [b, c] = L.covers[e];
        Bits dj = L.down[c] - L.down[b];  // I(c) \ I(b)
        int j = subset_minimum(L, dj);
        if (j < 0) {
            r.is_jsd = false;
        } else {
            require(t.is_jirr(j), errc::theorem_violation,
                    "minimum label of a cover edge must be join-irreducible");
            t.gammaJ[e] = j;
        }
        Bits fm = L.up[b] - L.up[c];  // F(b) \ F(c)
        int m = subset_maximum(L, fm);
        if (m < 0) {
            r.is_msd = false;
        } else {
            require(t.is_mirr(m), errc::theorem_violation,
                    "maximum label of a cover edge must be meet-irreducible");
            t.gammaM[e] = m;
        }
    }
    t.has_gammaJ = r.is_jsd;
    t.has_gammaM = r.is_msd;
    if (r.is_jsd && r.is_msd) {
        t.has_kappa = true;
        for (size_t i = 0; i < t.jirr.size(); ++i) {
            int j = t.jirr[i];
            int e = L.cover_index(t.jstar[i], j);
            t.kappa[j] = t.gammaM[size_t(e)];
        }
    }
    return r;
}

LengthSpine length_spine(const Lattice& L) {
    LengthSpine r;
    r.height.assign(L.n, 0);
    r.depth.assign(L.n, 0);
    for (int x = 0; x < L.n; ++x)
        for (int y : L.lower_covers[x]) r.height[x] = std::max(r.height[x], r.height[y] + 1);
    for (int x = L.n - 1; x >= 0; --x)
        for (int y : L.upper_covers[x]) r.depth[x] = std::max(r.depth[x], r.depth[y] + 1);
    r.length = r.height[L.n - 1];
    r.spine = Bits(L.n);
    for (int x = 0; x < L.n; ++x)
        if (r.height[x] + r.depth[x] == r.length) r.spine.set(x);

    // lexicographically smallest longest chain: greedy over spine covers
    std::vector<int> chain{0};
    int cur = 0;
    while (cur != L.n - 1) {
        int pick = -1;
        for (int y : L.upper_covers[cur])
            if (r.height[y] == r.height[cur] + 1 && r.height[y] + r.depth[y] == r.length)
                if (pick < 0 || y < pick) pick = y;
        chain.push_back(pick);
        cur = pick;
    }
    r.longest_chain.elements = std::move(chain);
    r.longest_chain.is_maximal = true;
    r.longest_chain.is_longest = true;
    return r;
}

ChainPhi make_chain(const Lattice& L, std::vector<int> elements) {
    require(!elements.empty() && elements.front() == 0 && elements.back() == L.n - 1,
            errc::invalid_parameter, "chain must run from bottom to top");
    ChainPhi phi;
    for (size_t i = 0; i + 1 < elements.size(); ++i)
        require(L.lt(elements[i], elements[i + 1]), errc::invalid_parameter,
                "chain entries must strictly increase in the order");
    phi.elements = std::move(elements);
    phi.is_maximal = true;
    for (size_t i = 0; i + 1 < phi.elements.size(); ++i)
        if (L.cover_index(phi.elements[i], phi.elements[i + 1]) < 0) phi.is_maximal = false;
    phi.is_longest = int(phi.elements.size()) == length_spine(L).length + 1;
    return phi;
}

ExtremalityReport extremality(const Lattice& L) {
    ExtremalityReport r;
    auto ls = length_spine(L);
    auto t = irreducibles(L);
    r.length = ls.length;
    r.n_jirr = int(t.jirr.size());
    r.n_mirr = int(t.mirr.size());
    require(r.length <= std::min(r.n_jirr, r.n_mirr) || L.n == 1, errc::theorem_violation,
            "length exceeds irreducible count");
    r.join_extremal = r.length == r.n_jirr;
    r.meet_extremal = r.length == r.n_mirr;
    r.extremal = r.join_extremal && r.meet_extremal;
    return r;
}

int width_of(const Poset& P) {
    // minimum chain cover via Kuhn matching on strict comparabilities
    int n = P.n;
    std::vector<std::vector<int>> adj(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && P.leq(x, y)) adj[x].push_back(y);
    std::vector<int> match_right(n, -1), match_left(n, -1);
    std::vector<char> seen(n);
    std::function<bool(int)> try_kuhn = [&](int x) {
        for (int y : adj[x]) {
            if (seen[y]) continue;
            seen[y] = 1;
            if (match_right[y] < 0 || try_kuhn(match_right[y])) {
                match_right[y] = x;
                match_left[x] = y;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (int x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        if (try_kuhn(x)) ++matching;
    }
    return n - matching;
}

std::vector<int> dissectors(const Lattice& L) {
    std::vector<int> out;
    for (int x = 0; x < L.n; ++x) {
        Bits rest = Bits::full(L.n) - L.up[x];
        if (rest.none()) continue;
        if (subset_maximum(L, rest) >= 0) out.push_back(x);
    }
    return out;
}

Poset subposet_jirr(const Lattice& L) {
    return induced_subposet(poset_of(L), irreducibles(L).jirr);
}

Poset subposet_dissectors(const Lattice& L) {
    return induced_subposet(poset_of(L), dissectors(L));
}

Lattice direct_product(const Lattice& P, const Lattice& Q) {
    int n = P.n * Q.n;
    auto id = [&](int p, int q) { return p * Q.n + q; };
    CoverList covers;
    for (int p = 0; p < P.n; ++p)
        for (auto [lo, hi] : Q.covers) covers.emplace_back(id(p, lo), id(p, hi));
    for (auto [lo, hi] : P.covers)
        for (int q = 0; q < Q.n; ++q) covers.emplace_back(id(lo, q), id(hi, q));
    std::vector<std::string> labels;
    if (!P.labels.empty() || !Q.labels.empty()) {
        labels.resize(static_cast<size_t>(n));
        for (int p = 0; p < P.n; ++p)
            for (int q = 0; q < Q.n; ++q)
                labels[size_t(id(p, q))] = "(" + P.label_of(p) + "," + Q.label_of(q) + ")";
    }
    return build_lattice(n, covers, labels);
}

namespace {

// canonical invariant vector used to pre-partition elements before backtracking
std::vector<uint64_t> iso_colors(const Lattice& L) {
    auto ls = length_spine(L);
    std::vector<uint64_t> color(static_cast<size_t>(L.n));
    for (int x = 0; x < L.n; ++x) {
        uint64_t h = 0;
        h = h * 1315423911u + uint64_t(L.lower_covers[x].size());
        h = h * 1315423911u + uint64_t(L.upper_covers[x].size());
        h = h * 1315423911u + uint64_t(ls.height[x]);
        h = h * 1315423911u + uint64_t(ls.depth[x]);
        h = h * 1315423911u + uint64_t(L.down[x].count());
        h = h * 1315423911u + uint64_t(L.up[x].count());
        color[size_t(x)] = h;
    }
    // neighbourhood refinement until stable
    for (int round = 0; round < L.n; ++round) {
        std::vector<uint64_t> next(static_cast<size_t>(L.n));
        for (int x = 0; x < L.n; ++x) {
            uint64_t h = color[size_t(x)];
            std::vector<uint64_t> nb;
            for (int y : L.lower_covers[x]) nb.push_back(color[size_t(y)] * 3);
            for (int y : L.upper_covers[x]) nb.push_back(color[size_t(y)] * 7 + 1);
            std::sort(nb.begin(), nb.end());
            for (uint64_t v : nb) h = h * 0x100000001b3ull + v;
            next[size_t(x)] = h;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool iso_backtrack(const Lattice& A, const Lattice& B,
                   const std::vector<uint64_t>& ca, const std::vector<uint64_t>& cb,
                   std::vector<int>& map_ab, std::vector<int>& map_ba, int x) {
    if (x == A.n) return true;
    for (int y = 0; y < B.n; ++y) {
        if (map_ba[size_t(y)] >= 0 || ca[size_t(x)] != cb[size_t(y)]) continue;
        bool ok = true;
        // covers to already-mapped elements must match both ways
        for (int z : A.lower_covers[x])
            if (z < x && B.cover_index(map_ab[size_t(z)], y) < 0) { ok = false; break; }
        if (ok)
            for (int z = 0; z < x && ok; ++z) {
                bool rel_a = A.leq(z, x), rel_b = B.leq(map_ab[size_t(z)], y);
                if (rel_a != rel_b || A.leq(x, z) != B.leq(y, map_ab[size_t(z)])) ok = false;
            }
        if (!ok) continue;
        map_ab[size_t(x)] = y;
        map_ba[size_t(y)] = x;
        if (iso_backtrack(A, B, ca, cb, map_ab, map_ba, x + 1)) return true;
        map_ab[size_t(x)] = -1;
        map_ba[size_t(y)] = -1;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Lattice& L1, const Lattice& L2) {
    if (L1.n != L2.n || L1.covers.size() != L2.covers.size()) return false;
    auto c1 = iso_colors(L1), c2 = iso_colors(L2);
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
    std::vector<int> map_ab(static_cast<size_t>(L1.n), -1), map_ba(static_cast<size_t>(L2.n), -1);
    return iso_backtrack(L1, L2, c1, c2, map_ab, map_ba, 0);
}

namespace {

std::vector<uint64_t> graph_colors(int n, const std::vector<Bits>& adj) {
    std::vector<uint64_t> color(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) color[size_t(x)] = uint64_t(adj[size_t(x)].count());
    for (int round = 0; round < n; ++round) {
        std::vector<uint64_t> next(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) {
            std::vector<uint64_t> nb;
            for (int y = adj[size_t(x)].first(); y >= 0; y = adj[size_t(x)].next(y))
                nb.push_back(color[size_t(y)]);
            std::sort(nb.begin(), nb.end());
            uint64_t h = color[size_t(x)];
            for (uint64_t v : nb) h = h * 0x100000001b3ull + v;
            next[size_t(x)] = h;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool graph_backtrack(int n, const std::vector<Bits>& a, const std::vector<Bits>& b,
                     const std::vector<uint64_t>& ca, const std::vector<uint64_t>& cb,
                     std::vector<int>& mp, std::vector<int>& used, int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
        if (used[size_t(y)] || ca[size_t(x)] != cb[size_t(y)]) continue;
        bool ok = true;
        for (int z = 0; z < x && ok; ++z)
            if (a[size_t(x)].test(z) != b[size_t(y)].test(mp[size_t(z)])) ok = false;
        if (!ok) continue;
        mp[size_t(x)] = y;
        used[size_t(y)] = 1;
        if (graph_backtrack(n, a, b, ca, cb, mp, used, x + 1)) return true;
        used[size_t(y)] = 0;
    }
    return false;
}

}  // namespace

bool graphs_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1,
                       int n2, const std::vector<std::pair<int, int>>& e2) {
    if (n1 != n2 || e1.size() != e2.size()) return false;
    std::vector<Bits> a(static_cast<size_t>(n1), Bits(n1)), b(static_cast<size_t>(n2), Bits(n2));
    for (auto [u, v] : e1) { a[size_t(u)].set(v); a[size_t(v)].set(u); }
    for (auto [u, v] : e2) { b[size_t(u)].set(v); b[size_t(v)].set(u); }
    auto ca = graph_colors(n1, a), cb = graph_colors(n2, b);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> mp(static_cast<size_t>(n1), -1), used(static_cast<size_t>(n1), 0);
    return graph_backtrack(n1, a, b, ca, cb, mp, used, 0);
}

namespace {

std::vector<uint64_t> digraph_colors(int n, const std::vector<Bits>& out,
                                     const std::vector<Bits>& in) {
    std::vector<uint64_t> color(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
        color[size_t(x)] =
            uint64_t(out[size_t(x)].count()) * 131 + uint64_t(in[size_t(x)].count());
    for (int round = 0; round < n; ++round) {
        std::vector<uint64_t> next(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) {
            std::vector<uint64_t> fw, bw;
            for (int y = out[size_t(x)].first(); y >= 0; y = out[size_t(x)].next(y))
                fw.push_back(color[size_t(y)]);
            for (int y = in[size_t(x)].first(); y >= 0; y = in[size_t(x)].next(y))
                bw.push_back(color[size_t(y)]);
            std::sort(fw.begin(), fw.end());
            std::sort(bw.begin(), bw.end());
            uint64_t h = color[size_t(x)];
            for (uint64_t v : fw) h = h * 0x100000001b3ull + v;
            h = h * 0x100000001b3ull + 0x9e3779b9u;
            for (uint64_t v : bw) h = h * 0x100000001b3ull + v;
            next[size_t(x)] = h;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool digraph_backtrack(int n, const std::vector<Bits>& ao, const std::vector<Bits>& bo,
                       const std::vector<Bits>& ai, const std::vector<Bits>& bi,
                       const std::vector<uint64_t>& ca, const std::vector<uint64_t>& cb,
                       std::vector<int>& mp, std::vector<int>& used, int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
        if (used[size_t(y)] || ca[size_t(x)] != cb[size_t(y)]) continue;
        bool ok = true;
        for (int z = 0; z < x && ok; ++z) {
            if (ao[size_t(x)].test(z) != bo[size_t(y)].test(mp[size_t(z)])) ok = false;
            if (ai[size_t(x)].test(z) != bi[size_t(y)].test(mp[size_t(z)])) ok = false;
        }
        if (!ok) continue;
        mp[size_t(x)] = y;
        used[size_t(y)] = 1;
        if (digraph_backtrack(n, ao, bo, ai, bi, ca, cb, mp, used, x + 1)) return true;
        used[size_t(y)] = 0;
    }
    return false;
}

}  // namespace

bool digraphs_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1,
                         int n2, const std::vector<std::pair<int, int>>& e2) {
    if (n1 != n2 || e1.size() != e2.size()) return false;
    std::vector<Bits> ao(static_cast<size_t>(n1), Bits(n1)), ai = ao;
    std::vector<Bits> bo(static_cast<size_t>(n2), Bits(n2)), bi = bo;
    for (auto [u, v] : e1) { ao[size_t(u)].set(v); ai[size_t(v)].set(u); }
    for (auto [u, v] : e2) { bo[size_t(u)].set(v); bi[size_t(v)].set(u); }
    auto ca = digraph_colors(n1, ao, ai), cb = digraph_colors(n2, bo, bi);
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> mp(static_cast<size_t>(n1), -1), used(static_cast<size_t>(n1), 0);
    return digraph_backtrack(n1, ao, bo, ai, bi, ca, cb, mp, used, 0);
}

}  // namespace latt
