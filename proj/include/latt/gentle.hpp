#pragma once

#include <string>
#include <vector>

#include "latt/coloring.hpp"
#include "latt/galois.hpp"

namespace latt {

// Gentle algebra on a tree quiver: arrows plus length-2 zero relations.
struct GentleQuiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;          // (source, target)
    std::vector<std::pair<int, int>> relations;       // (arrow index, arrow index)
    std::vector<int> arrow_dir;                       // 0 = east, 1 = north (drawing)
    std::vector<std::pair<int, int>> coords;          // drawing coordinates per vertex

    bool relation_between(int arrow1, int arrow2) const;  // arrow1 then arrow2 is zero
};

// Validates gentleness and computes the east/north drawing. Throws NotGentle
// with the violated condition.
GentleQuiver make_gentle(int vertices, std::vector<std::pair<int, int>> arrows,
                         std::vector<std::pair<int, int>> relations);

GentleQuiver gentle_from_json(const std::string& text);

// A_n path quiver; orientation bit r selects the direction of arrow between
// vertices i and i+1 (bit set: i+1 -> i).
GentleQuiver path_quiver(int n, unsigned orientation);

struct StringModule {
    std::vector<int> walk_vertices;  // tree path between the endpoints
    Bits support;
    int left_endpoint = -1;   // top-left in the drawing
    int right_endpoint = -1;  // bottom-right in the drawing
};

// All strings including the length-0 simples; these are exactly the bricks.
std::vector<StringModule> gentle_strings(const GentleQuiver& T);

// Dimension of Hom(M, N) by exact elimination on the commuting-square system.
int hom_dim(const GentleQuiver& T, const StringModule& M, const StringModule& N);

struct TorsionAnalysis {
    std::vector<StringModule> bricks;
    Graph hom_graph;  // edge iff hom-orthogonal: the canonical join graph of Tors
    unsigned long long n_elements = 0;  // |Tors(T)| = number of semibricks
    int dim = 0;
};

TorsionAnalysis torsion_analysis(const GentleQuiver& T, long long budget_ms = 60000);

int torsion_dim(const GentleQuiver& T);

}  // namespace latt
