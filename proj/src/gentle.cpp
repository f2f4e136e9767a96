#include "latt/gentle.hpp"

#include <algorithm>
#include <queue>

#include <json.hpp>

#include "latt/error.hpp"

namespace latt {

bool GentleQuiver::relation_between(int arrow1, int arrow2) const {
    for (auto [r1, r2] : relations)
        if (r1 == arrow1 && r2 == arrow2) return true;
    return false;
}

GentleQuiver make_gentle(int vertices, std::vector<std::pair<int, int>> arrows,
                         std::vector<std::pair<int, int>> relations) {
    require(vertices >= 1, errc::invalid_parameter, "quiver needs vertices");
    GentleQuiver T;
    T.vertices = vertices;
    T.arrows = std::move(arrows);
    T.relations = std::move(relations);
    int na = int(T.arrows.size());

    require(na == vertices - 1, errc::not_gentle, "underlying graph must be a tree");
    std::vector<std::vector<std::pair<int, int>>> incident(static_cast<size_t>(vertices));  // (other, arrow)
    std::vector<int> indeg(static_cast<size_t>(vertices), 0), outdeg(static_cast<size_t>(vertices), 0);
    for (int a = 0; a < na; ++a) {
        auto [s, t] = T.arrows[size_t(a)];
        require(0 <= s && s < vertices && 0 <= t && t < vertices && s != t,
                errc::invalid_parameter, "arrow endpoints out of range");
        incident[size_t(s)].emplace_back(t, a);
        incident[size_t(t)].emplace_back(s, a);
        ++outdeg[size_t(s)];
        ++indeg[size_t(t)];
    }
    // connectivity makes it a tree, given vertices-1 edges
    {
        std::vector<char> seen(static_cast<size_t>(vertices), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            ++cnt;
            for (auto [w, a] : incident[size_t(v)])
                if (!seen[size_t(w)]) {
                    seen[size_t(w)] = 1;
                    q.push(w);
                }
        }
        require(cnt == vertices, errc::not_gentle, "underlying graph must be connected");
    }
    for (int v = 0; v < vertices; ++v) {
        require(indeg[size_t(v)] <= 2, errc::not_gentle,
                "more than two incoming arrows at a vertex");
        require(outdeg[size_t(v)] <= 2, errc::not_gentle,
                "more than two outgoing arrows at a vertex");
    }
    for (auto [a1, a2] : T.relations) {
        require(0 <= a1 && a1 < na && 0 <= a2 && a2 < na, errc::invalid_parameter,
                "relation arrow index out of range");
        require(T.arrows[size_t(a1)].second == T.arrows[size_t(a2)].first, errc::not_gentle,
                "relation arrows do not compose");
    }
    // per arrow, at most one continuation inside the ideal and one outside
    for (int a = 0; a < na; ++a) {
        int in_ideal = 0, out_ideal = 0;
        for (int b = 0; b < na; ++b) {
            if (T.arrows[size_t(a)].second != T.arrows[size_t(b)].first) continue;
            (T.relation_between(a, b) ? in_ideal : out_ideal)++;
        }
        require(in_ideal <= 1 && out_ideal <= 1, errc::not_gentle,
                "gentleness fails on continuations of an arrow");
        int pre_in = 0, pre_out = 0;
        for (int b = 0; b < na; ++b) {
            if (T.arrows[size_t(b)].second != T.arrows[size_t(a)].first) continue;
            (T.relation_between(b, a) ? pre_in : pre_out)++;
        }
        require(pre_in <= 1 && pre_out <= 1, errc::not_gentle,
                "gentleness fails on predecessors of an arrow");
    }

    // east/north drawing: composable arrows keep direction unless the pair is
    // a relation; arrows sharing a source or a target must differ
    T.arrow_dir.assign(static_cast<size_t>(na), -1);
    if (na > 0) {
        std::vector<std::vector<std::pair<int, int>>> constraint(static_cast<size_t>(na));  // (arrow, equal?)
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < na; ++b) {
                if (a == b) continue;
                if (T.arrows[size_t(a)].second == T.arrows[size_t(b)].first) {
                    bool equal = !T.relation_between(a, b);
                    constraint[size_t(a)].emplace_back(b, equal);
                    constraint[size_t(b)].emplace_back(a, equal);
                }
                if (a < b && T.arrows[size_t(a)].first == T.arrows[size_t(b)].first) {
                    constraint[size_t(a)].emplace_back(b, false);
                    constraint[size_t(b)].emplace_back(a, false);
                }
                if (a < b && T.arrows[size_t(a)].second == T.arrows[size_t(b)].second) {
                    constraint[size_t(a)].emplace_back(b, false);
                    constraint[size_t(b)].emplace_back(a, false);
                }
            }
        for (int a0 = 0; a0 < na; ++a0) {
            if (T.arrow_dir[size_t(a0)] >= 0) continue;
            T.arrow_dir[size_t(a0)] = 0;
            std::queue<int> q;
            q.push(a0);
            while (!q.empty()) {
                int a = q.front();
                q.pop();
                for (auto [b, equal] : constraint[size_t(a)]) {
                    int want = equal ? T.arrow_dir[size_t(a)] : 1 - T.arrow_dir[size_t(a)];
                    if (T.arrow_dir[size_t(b)] < 0) {
                        T.arrow_dir[size_t(b)] = want;
                        q.push(b);
                    } else {
                        require(T.arrow_dir[size_t(b)] == want, errc::not_gentle,
                                "no consistent east/north drawing");
                    }
                }
            }
        }
    }
    // coordinates along the tree
    T.coords.assign(static_cast<size_t>(vertices), {0, 0});
    {
        std::vector<char> seen(static_cast<size_t>(vertices), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, a] : incident[size_t(v)]) {
                if (seen[size_t(w)]) continue;
                seen[size_t(w)] = 1;
                auto [s, t] = T.arrows[size_t(a)];
                int dx = T.arrow_dir[size_t(a)] == 0 ? 1 : 0;
                int dy = 1 - dx;
                if (v == s)
                    T.coords[size_t(w)] = {T.coords[size_t(v)].first + dx,
                                           T.coords[size_t(v)].second + dy};
                else
                    T.coords[size_t(w)] = {T.coords[size_t(v)].first - dx,
                                           T.coords[size_t(v)].second - dy};
                q.push(w);
            }
        }
    }
    return T;
}

GentleQuiver gentle_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    require(j.contains("vertices") && j.contains("arrows"), errc::parse_error,
            "quiver JSON needs vertices and arrows");
    std::vector<std::pair<int, int>> arrows, relations;
    for (const auto& a : j.at("arrows")) arrows.emplace_back(a.at(0), a.at(1));
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) relations.emplace_back(r.at(0), r.at(1));
    return make_gentle(j.at("vertices").get<int>(), std::move(arrows), std::move(relations));
}

GentleQuiver path_quiver(int n, unsigned orientation) {
    require(n >= 1, errc::invalid_parameter, "path quiver needs n >= 1");
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i + 1 < n; ++i) {
        if ((orientation >> i) & 1)
            arrows.emplace_back(i + 1, i);
        else
            arrows.emplace_back(i, i + 1);
    }
    return make_gentle(n, std::move(arrows), {});
}

namespace {

struct TreeNav {
    int n;
    std::vector<std::vector<std::pair<int, int>>> incident;  // (other, arrow)
    // arrow_at[u][v] = arrow index on tree edge {u,v}, -1 otherwise
    std::vector<std::vector<int>> arrow_at;
    std::vector<std::vector<int>> parent;  // parent[root][v] on the path to root

    explicit TreeNav(const GentleQuiver& T) : n(T.vertices) {
        incident.assign(static_cast<size_t>(n), {});
        arrow_at.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
        for (int a = 0; a < int(T.arrows.size()); ++a) {
            auto [s, t] = T.arrows[size_t(a)];
            incident[size_t(s)].emplace_back(t, a);
            incident[size_t(t)].emplace_back(s, a);
            arrow_at[size_t(s)][size_t(t)] = a;
            arrow_at[size_t(t)][size_t(s)] = a;
        }
        parent.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
        for (int root = 0; root < n; ++root) {
            std::queue<int> q;
            q.push(root);
            std::vector<char> seen(static_cast<size_t>(n), 0);
            seen[size_t(root)] = 1;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (auto [w, a] : incident[size_t(v)])
                    if (!seen[size_t(w)]) {
                        seen[size_t(w)] = 1;
                        parent[size_t(root)][size_t(w)] = v;
                        q.push(w);
                    }
            }
        }
    }

    std::vector<int> path(int u, int v) const {
        std::vector<int> p;
        int cur = v;
        while (cur != u) {
            p.push_back(cur);
            cur = parent[size_t(u)][size_t(cur)];
        }
        p.push_back(u);
        std::reverse(p.begin(), p.end());
        return p;
    }
};

// a walk is valid when no two consecutive steps read a zero relation,
// in either direction of reading
bool walk_valid(const GentleQuiver& T, const TreeNav& nav, const std::vector<int>& path) {
    for (size_t i = 0; i + 2 < path.size(); ++i) {
        int u = path[i], v = path[i + 1], w = path[i + 2];
        int a1 = nav.arrow_at[size_t(u)][size_t(v)];
        int a2 = nav.arrow_at[size_t(v)][size_t(w)];
        bool fwd1 = T.arrows[size_t(a1)].first == u;
        bool fwd2 = T.arrows[size_t(a2)].first == v;
        if (fwd1 && fwd2 && T.relation_between(a1, a2)) return false;
        if (!fwd1 && !fwd2 && T.relation_between(a2, a1)) return false;
    }
    return true;
}

}  // namespace

std::vector<StringModule> gentle_strings(const GentleQuiver& T) {
    TreeNav nav(T);
    std::vector<StringModule> out;
    for (int u = 0; u < T.vertices; ++u)
        for (int v = u; v < T.vertices; ++v) {
            auto p = nav.path(u, v);
            if (!walk_valid(T, nav, p)) continue;
            StringModule s;
            s.walk_vertices = p;
            s.support = Bits(T.vertices);
            for (int x : p) s.support.set(x);
            // reading direction: right endpoint maximizes x - y in the drawing
            auto score = [&](int x) {
                return T.coords[size_t(x)].first - T.coords[size_t(x)].second;
            };
            if (score(p.front()) >= score(p.back())) {
                s.right_endpoint = p.front();
                s.left_endpoint = p.back();
            } else {
                s.right_endpoint = p.back();
                s.left_endpoint = p.front();
            }
            out.push_back(std::move(s));
        }
    return out;
}

int hom_dim(const GentleQuiver& T, const StringModule& M, const StringModule& N) {
    // variables f_x for x in supp(M) n supp(N); constraints per arrow
    Bits common = M.support & N.support;
    std::vector<int> var_of(static_cast<size_t>(T.vertices), -1);
    int nv = 0;
    for (int x = common.first(); x >= 0; x = common.next(x)) var_of[size_t(x)] = nv++;
    if (nv == 0) return 0;

    std::vector<std::vector<long long>> rows;
    auto arrow_in = [&](const StringModule& S, int a) {
        return S.support.test(T.arrows[size_t(a)].first) &&
               S.support.test(T.arrows[size_t(a)].second);
    };
    for (int a = 0; a < int(T.arrows.size()); ++a) {
        auto [x, y] = T.arrows[size_t(a)];
        bool in_m = arrow_in(M, a), in_n = arrow_in(N, a);
        if (!M.support.test(x)) continue;  // maps out of the zero space
        // phi'_a f_x = f_y phi_a as maps M_x -> N_y
        if (in_n && N.support.test(x) && in_m) {
            std::vector<long long> row(static_cast<size_t>(nv), 0);
            row[size_t(var_of[size_t(x)])] += 1;
            row[size_t(var_of[size_t(y)])] -= 1;
            rows.push_back(std::move(row));
        } else if (in_n && N.support.test(x) && !in_m) {
            std::vector<long long> row(static_cast<size_t>(nv), 0);
            row[size_t(var_of[size_t(x)])] = 1;
            rows.push_back(std::move(row));
        } else if (!in_n && in_m && N.support.test(y)) {
            std::vector<long long> row(static_cast<size_t>(nv), 0);
            row[size_t(var_of[size_t(y)])] = 1;
            rows.push_back(std::move(row));
        }
    }

    // exact fraction-free elimination for the rank
    int rank = 0;
    for (int col = 0; col < nv && rank < int(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if (rows[size_t(r)][size_t(col)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[size_t(rank)], rows[size_t(pivot)]);
        for (int r = rank + 1; r < int(rows.size()); ++r) {
            long long num = rows[size_t(r)][size_t(col)];
            if (!num) continue;
            long long den = rows[size_t(rank)][size_t(col)];
            for (int c = 0; c < nv; ++c)
                rows[size_t(r)][size_t(c)] =
                    rows[size_t(r)][size_t(c)] * den - rows[size_t(rank)][size_t(c)] * num;
        }
        ++rank;
    }
    return nv - rank;
}

TorsionAnalysis torsion_analysis(const GentleQuiver& T, long long budget_ms) {
    TorsionAnalysis ta;
    ta.bricks = gentle_strings(T);
    int k = int(ta.bricks.size());
    ta.hom_graph = Graph(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (hom_dim(T, ta.bricks[size_t(a)], ta.bricks[size_t(b)]) == 0 &&
                hom_dim(T, ta.bricks[size_t(b)], ta.bricks[size_t(a)]) == 0)
                ta.hom_graph.add_edge(a, b);

    // the n simples are pairwise hom-orthogonal: a clique of size n
    {
        std::vector<int> simple_at(static_cast<size_t>(T.vertices), -1);
        for (int s = 0; s < k; ++s)
            if (ta.bricks[size_t(s)].support.count() == 1)
                simple_at[size_t(ta.bricks[size_t(s)].support.first())] = s;
        for (int u = 0; u < T.vertices; ++u)
            for (int v = u + 1; v < T.vertices; ++v)
                require(ta.hom_graph.has_edge(simple_at[size_t(u)], simple_at[size_t(v)]),
                        errc::theorem_violation, "simples must be pairwise hom-orthogonal");
    }
    // right-endpoint coloring must be proper on the hom graph
    for (auto [a, b] : ta.hom_graph.edges())
        require(ta.bricks[size_t(a)].right_endpoint != ta.bricks[size_t(b)].right_endpoint,
                errc::theorem_violation,
                "strings sharing a right endpoint cannot be hom-orthogonal");

    ta.n_elements = count_independent_sets(complement_of(ta.hom_graph));
    ta.dim = chromatic_number(ta.hom_graph, budget_ms).chi;
    return ta;
}

int torsion_dim(const GentleQuiver& T) { return torsion_analysis(T).dim; }

}  // namespace latt
