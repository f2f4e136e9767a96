#include "latt/coloring.hpp"

#include <algorithm>
#include <chrono>

#include "latt/error.hpp"

namespace latt {

namespace {

using Clock = std::chrono::steady_clock;

struct CliqueSearch {
    const Graph& G;
    std::vector<int> best, cur;

    void expand(Bits cand) {
        if (cand.none()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (cur.size() + size_t(cand.count()) <= best.size()) return;
        while (cand.any()) {
            if (cur.size() + size_t(cand.count()) <= best.size()) return;
            int v = cand.first();
            cand.reset(v);
            cur.push_back(v);
            expand(cand & G.adj[size_t(v)]);
            cur.pop_back();
        }
    }
};

struct ColorSearch {
    const Graph& G;
    Clock::time_point deadline;
    int best_k;                     // best complete coloring found so far
    std::vector<int> best_coloring;
    std::vector<int> color;
    std::vector<Bits> color_used_by_nbr;  // per vertex, colors seen among neighbours
    int lower;

    bool timed_out() const { return Clock::now() > deadline; }

    int pick_vertex() const {
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < G.m; ++v) {
            if (color[size_t(v)] >= 0) continue;
            int s = color_used_by_nbr[size_t(v)].count();
            int d = G.adj[size_t(v)].count();
            if (s > sat || (s == sat && (d > deg || (d == deg && (pick < 0 || v < pick))))) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        return pick;
    }

    void assign(int v, int c, int delta) {
        color[size_t(v)] = delta > 0 ? c : -1;
        for (int u = G.adj[size_t(v)].first(); u >= 0; u = G.adj[size_t(v)].next(u)) {
            if (delta > 0)
                color_used_by_nbr[size_t(u)].set(c);
            else {
                // recompute: another neighbour may still use c
                bool still = false;
                for (int w = G.adj[size_t(u)].first(); w >= 0; w = G.adj[size_t(u)].next(w))
                    if (color[size_t(w)] == c) { still = true; break; }
                if (!still) color_used_by_nbr[size_t(u)].reset(c);
            }
        }
    }

    void solve(int colored, int used) {
        if (used >= best_k) return;
        if (timed_out()) fail(errc::timeout, "coloring budget exhausted");
        if (colored == G.m) {
            best_k = used;
            best_coloring = color;
            return;
        }
        int v = pick_vertex();
        int cap = std::min(used + 1, best_k - 1);  // allow one fresh color
        for (int c = 0; c < cap; ++c) {
            if (color_used_by_nbr[size_t(v)].test(c)) continue;
            assign(v, c, +1);
            solve(colored + 1, std::max(used, c + 1));
            assign(v, c, -1);
            if (best_k == lower) return;
        }
    }
};

}  // namespace

std::vector<int> max_clique(const Graph& G) {
    if (G.m == 0) return {};
    CliqueSearch cs{G, {}, {}};
    cs.expand(Bits::full(G.m));
    return cs.best;
}

ColoringResult chromatic_number(const Graph& G, long long budget_ms) {
    ColoringResult r;
    if (G.m == 0) {
        r.chi = 0;
        return r;
    }
    r.clique = max_clique(G);

    ColorSearch s{G,
                  Clock::now() + std::chrono::milliseconds(budget_ms),
                  G.m + 1,
                  {},
                  std::vector<int>(static_cast<size_t>(G.m), -1),
                  std::vector<Bits>(static_cast<size_t>(G.m), Bits(G.m)),
                  int(r.clique.size())};

    // seed the search with the clique, fixing its colors kills symmetry
    int c = 0;
    for (int v : r.clique) s.assign(v, c++, +1);
    s.solve(int(r.clique.size()), int(r.clique.size()));

    r.chi = s.best_k;
    r.coloring = s.best_coloring;
    return r;
}

}  // namespace latt
