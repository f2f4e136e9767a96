#include "latt/families.hpp"

#include <algorithm>
#include <numeric>

#include "latt/error.hpp"

namespace latt {

FamilyLattice hochschild(int n) {
    require(n >= 1, errc::invalid_parameter, "hochschild needs n >= 1");
    // vertices (i,j) with i in {1,2}, i <= j <= n
    std::vector<std::pair<int, int>> verts;
    for (int j = 1; j <= n; ++j) verts.emplace_back(1, j);
    for (int j = 2; j <= n; ++j) verts.emplace_back(2, j);
    int m = int(verts.size());
    DirectedGraph G(m);
    for (int s = 0; s < m; ++s) {
        auto [i, j] = verts[size_t(s)];
        G.vertex_labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        for (int t = 0; t < m; ++t) {
            if (s == t) continue;
            auto [ip, jp] = verts[size_t(t)];
            bool edge = (i == 2 && ip == 1 && j == jp) || (i == 1 && ip == 1 && j > jp);
            if (edge) G.add_edge(s, t);
        }
    }
    FamilyLattice f;
    f.lattice = lattice_from_galois(G).lattice;
    f.galois = std::move(G);
    return f;
}

FamilyLattice bubble(int m, int n) {
    require(m >= 0 && n >= 0 && m + n >= 1, errc::invalid_parameter,
            "bubble needs m + n >= 1");
    // vertices: x_1..x_m, y_1..y_n, then pairs (x_s, y_t)
    struct V {
        int kind;  // 0 = x, 1 = y, 2 = pair
        int s, t;
    };
    std::vector<V> verts;
    for (int s = 1; s <= m; ++s) verts.push_back({0, s, 0});
    for (int t = 1; t <= n; ++t) verts.push_back({1, 0, t});
    for (int s = 1; s <= m; ++s)
        for (int t = 1; t <= n; ++t) verts.push_back({2, s, t});
    int k = int(verts.size());
    DirectedGraph G(k);
    for (int a = 0; a < k; ++a) {
        const V& u = verts[size_t(a)];
        if (u.kind == 0)
            G.vertex_labels.push_back("x" + std::to_string(u.s));
        else if (u.kind == 1)
            G.vertex_labels.push_back("y" + std::to_string(u.t));
        else
            G.vertex_labels.push_back("(x" + std::to_string(u.s) + ",y" +
                                      std::to_string(u.t) + ")");
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            const V& v = verts[size_t(b)];
            // arrows run towards the letters and pairs they refine; this is
            // the transpose of one common convention and matches the
            // Hochschild graphs: Bub(n-1,1) and Hoch(n) come out isomorphic
            bool edge = (u.kind == 0 && v.kind == 2 && u.s == v.s) ||
                        (u.kind == 2 && v.kind == 1 && u.t == v.t) ||
                        (u.kind == 2 && v.kind == 2 && u.s <= v.s && u.t >= v.t);
            if (edge) G.add_edge(a, b);
        }
    }
    FamilyLattice f;
    f.lattice = lattice_from_galois(G).lattice;
    f.galois = std::move(G);
    return f;
}

std::vector<std::string> mn_words(int m, int n) {
    require(m >= 0 && n >= 1, errc::invalid_parameter, "words need m >= 0, n >= 1");
    std::vector<std::string> words;
    std::string w(static_cast<size_t>(n), '0');
    // letters 0..m+1; w1 != m+1; a letter s in [m] forces all earlier letters >= s
    auto letter = [](int v) { return char('0' + v); };
    std::vector<int> cur(static_cast<size_t>(n), 0);
    while (true) {
        bool ok = cur[0] != m + 1;
        for (int i = 1; i < n && ok; ++i) {
            int s = cur[size_t(i)];
            if (s >= 1 && s <= m)
                for (int j = 0; j < i && ok; ++j)
                    if (cur[size_t(j)] < s) ok = false;
        }
        if (ok) {
            for (int i = 0; i < n; ++i) w[size_t(i)] = letter(cur[size_t(i)]);
            words.push_back(w);
        }
        int pos = n - 1;
        while (pos >= 0 && cur[size_t(pos)] == m + 1) cur[size_t(pos--)] = 0;
        if (pos < 0) break;
        ++cur[size_t(pos)];
    }
    return words;
}

Lattice word_lattice(int m, int n) {
    auto words = mn_words(m, n);
    // linear extension: letter sum, then lexicographic
    std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
        int sa = std::accumulate(a.begin(), a.end(), 0);
        int sb = std::accumulate(b.begin(), b.end(), 0);
        return sa != sb ? sa < sb : a < b;
    });
    int N = int(words.size());
    auto leq = [&](int x, int y) {
        for (size_t i = 0; i < words[size_t(x)].size(); ++i)
            if (words[size_t(x)][i] > words[size_t(y)][i]) return false;
        return true;
    };
    std::vector<Bits> ups(static_cast<size_t>(N), Bits(N)), downs(static_cast<size_t>(N), Bits(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            if (leq(x, y)) {
                ups[size_t(x)].set(y);
                downs[size_t(y)].set(x);
            }
    CoverList covers;
    for (int x = 0; x < N; ++x)
        for (int y = ups[size_t(x)].next(x); y >= 0; y = ups[size_t(x)].next(y))
            if ((ups[size_t(x)] & downs[size_t(y)]).count() == 2) covers.emplace_back(x, y);
    return build_lattice(N, covers, words);
}

int Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
int Composition::max_part() const { return *std::max_element(parts.begin(), parts.end()); }
int Composition::region_of(int a) const {
    int acc = 0;
    for (size_t r = 0; r < parts.size(); ++r) {
        acc += parts[r];
        if (a <= acc) return int(r);
    }
    return int(parts.size());
}

bool arcs_compatible(const Composition& alpha, const AlphaArc& x, const AlphaArc& y) {
    if (x.a == y.a || x.b == y.b) return false;
    const AlphaArc& p = x.a < y.a ? x : y;
    const AlphaArc& q = x.a < y.a ? y : x;
    // crossing p.a < q.a < p.b < q.b: escape hatches via shared regions
    if (q.a < p.b && p.b < q.b)
        return alpha.region_of(p.a) == alpha.region_of(q.a) ||
               alpha.region_of(q.a) == alpha.region_of(p.b);
    // nesting p.a < q.a < q.b < p.b: the inner arc must start in a later region
    if (q.a < p.b && q.b < p.b) return alpha.region_of(p.a) != alpha.region_of(q.a);
    return true;
}

ParabolicTamari parabolic_tamari(const Composition& alpha) {
    require(!alpha.parts.empty(), errc::invalid_parameter, "empty composition");
    for (int p : alpha.parts)
        require(p >= 1, errc::invalid_parameter, "composition parts must be positive");
    ParabolicTamari T;
    T.alpha = alpha;
    int n = alpha.n();
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (alpha.region_of(a) != alpha.region_of(b)) T.arcs.push_back({a, b});
    int k = int(T.arcs.size());

    T.galois = DirectedGraph(k);
    for (int s = 0; s < k; ++s) {
        T.galois.vertex_labels.push_back("(" + std::to_string(T.arcs[size_t(s)].a) + "," +
                                         std::to_string(T.arcs[size_t(s)].b) + ")");
        for (int t = 0; t < k; ++t) {
            if (s == t) continue;
            auto [a1, b1] = T.arcs[size_t(s)];
            auto [a2, b2] = T.arcs[size_t(t)];
            bool same_region = alpha.region_of(a1) == alpha.region_of(a2);
            bool edge =
                (same_region && a1 <= a2 && a2 < b2 && b2 <= b1) ||
                (!same_region && a2 < a1 && a1 < b2 && b2 <= b1 &&
                 alpha.region_of(a1) != alpha.region_of(b2));
            if (edge) T.galois.add_edge(s, t);
        }
    }

    T.compatibility = Graph(k);
    for (int s = 0; s < k; ++s)
        for (int t = s + 1; t < k; ++t)
            if (arcs_compatible(alpha, T.arcs[size_t(s)], T.arcs[size_t(t)]))
                T.compatibility.add_edge(s, t);

    T.lattice = lattice_from_galois(T.galois).lattice;
    return T;
}

}  // namespace latt
