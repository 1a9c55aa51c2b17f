#pragma once

// Shared collection of small named complexes used across the property
// tests. Everything here stays at n <= 8 so suites run in seconds.

#include <string>
#include <vector>

#include "sr/complex.hpp"
#include "sr/generators.hpp"

namespace zoo {

struct Entry {
    std::string name;
    sr::SimplicialComplex complex;
};

inline sr::SimplicialComplex two_disjoint_edges() {
    return sr::SimplicialComplex::from_facets({{"1", "2"}, {"3", "4"}});
}

inline sr::SimplicialComplex two_disjoint_triangles() {
    return sr::SimplicialComplex::from_facets({{"1", "2", "3"}, {"4", "5", "6"}});
}

inline sr::SimplicialComplex c6_with_chord() {
    return sr::SimplicialComplex::from_facets(
        {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}, {"1", "4"}});
}

inline sr::SimplicialComplex full_simplex(int n) {
    std::vector<std::string> f;
    for (int v = 1; v <= n; ++v) f.push_back(std::to_string(v));
    return sr::SimplicialComplex::from_facets({f});
}

inline sr::SimplicialComplex star(int leaves) {
    std::vector<std::vector<std::string>> facets;
    for (int v = 1; v <= leaves; ++v) facets.push_back({"0", std::to_string(v)});
    return sr::SimplicialComplex::from_facets(facets);
}

inline sr::SimplicialComplex points(int n) {
    std::vector<std::vector<std::string>> facets;
    for (int v = 1; v <= n; ++v) facets.push_back({std::to_string(v)});
    return sr::SimplicialComplex::from_facets(facets);
}

inline sr::SimplicialComplex k4_forests() {
    return sr::graphic_matroid(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

inline std::vector<Entry> small_zoo() {
    std::vector<Entry> out;
    out.push_back({"C5", sr::cycle(5)});
    out.push_back({"C4", sr::cycle(4)});
    out.push_back({"C6_chord", c6_with_chord()});
    out.push_back({"P4", sr::path(4)});
    out.push_back({"star5", star(5)});
    out.push_back({"K4", sr::complete_graph(4)});
    out.push_back({"K5", sr::complete_graph(5)});
    out.push_back({"boundary_d3", sr::simplex_boundary(3)});
    out.push_back({"boundary_d4", sr::simplex_boundary(4)});
    out.push_back({"octahedron", sr::cross_polytope_boundary(3)});
    out.push_back({"cross4", sr::cross_polytope_boundary(4)});
    out.push_back({"U24", sr::uniform_matroid(2, 4)});
    out.push_back({"U36", sr::uniform_matroid(3, 6)});
    out.push_back({"U25", sr::uniform_matroid(2, 5)});
    out.push_back({"RP2_6", sr::rp2_six_vertex()});
    out.push_back({"two_edges", two_disjoint_edges()});
    out.push_back({"two_triangles", two_disjoint_triangles()});
    out.push_back({"cone_C5", sr::cone(sr::cycle(5))});
    out.push_back({"K4_forests", k4_forests()});
    out.push_back({"cyclic_7_4", sr::cyclic_polytope_boundary(4, 7)});
    out.push_back({"full_simplex_4", full_simplex(4)});
    out.push_back({"two_points", points(2)});
    out.push_back({"point", points(1)});
    return out;
}

/// Entries with an actual ideal to resolve (excludes full simplexes).
inline std::vector<Entry> analysis_zoo() {
    std::vector<Entry> out;
    for (auto& e : small_zoo())
        if (e.complex.dim() + 1 < e.complex.vertex_count()) out.push_back(e);
    return out;
}

} // namespace zoo
