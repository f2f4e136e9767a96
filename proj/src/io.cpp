#include "latt/io.hpp"

#include <sstream>

#include <json.hpp>

#include "latt/error.hpp"

namespace latt {

std::string lattice_to_json(const Lattice& L) {
    nlohmann::ordered_json j;
    j["n"] = L.n;
    auto& cov = j["covers"] = nlohmann::ordered_json::array();
    for (auto [lo, hi] : L.covers) cov.push_back({lo, hi});
    if (!L.labels.empty()) j["labels"] = L.labels;
    return j.dump();
}

Lattice lattice_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    require(j.contains("n") && j.contains("covers"), errc::parse_error,
            "lattice JSON needs fields n and covers");
    int n = j.at("n").get<int>();
    CoverList covers;
    for (const auto& e : j.at("covers")) {
        require(e.is_array() && e.size() == 2, errc::parse_error,
                "each cover must be a pair [lo,hi]");
        covers.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();

    // the core wants indices in a linear extension; inputs that are not get
    // topologically sorted here
    bool sorted = true;
    for (auto [lo, hi] : covers)
        if (lo >= hi) sorted = false;
    if (!sorted) {
        std::vector<std::vector<int>> out(static_cast<size_t>(n));
        std::vector<int> indeg(static_cast<size_t>(n), 0);
        for (auto [lo, hi] : covers) {
            require(0 <= lo && lo < n && 0 <= hi && hi < n && lo != hi,
                    errc::parse_error, "cover endpoints out of range");
            out[size_t(lo)].push_back(hi);
            ++indeg[size_t(hi)];
        }
        std::vector<int> queue, order;
        for (int v = 0; v < n; ++v)
            if (!indeg[size_t(v)]) queue.push_back(v);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            order.push_back(v);
            for (int w : out[size_t(v)])
                if (--indeg[size_t(w)] == 0) queue.push_back(w);
        }
        require(int(order.size()) == n, errc::not_linear_extension,
                "covers contain a cycle");
        std::vector<int> rank(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) rank[size_t(order[size_t(i)])] = i;
        for (auto& [lo, hi] : covers) {
            lo = rank[size_t(lo)];
            hi = rank[size_t(hi)];
        }
        if (!labels.empty()) {
            std::vector<std::string> relabeled(static_cast<size_t>(n));
            for (int v = 0; v < n; ++v) relabeled[size_t(rank[size_t(v)])] = labels[size_t(v)];
            labels = std::move(relabeled);
        }
    }
    return build_lattice(n, covers, labels);
}

namespace {

std::string node_name(const Lattice& L, int x) {
    if (!L.labels.empty() && !L.labels[size_t(x)].empty()) return L.labels[size_t(x)];
    return std::to_string(x);
}

}  // namespace

std::string lattice_to_dot(const Lattice& L) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int x = 0; x < L.n; ++x)
        os << "  v" << x << " [label=\"" << node_name(L, x) << "\"];\n";
    for (auto [lo, hi] : L.covers) os << "  v" << lo << " -> v" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace latt
