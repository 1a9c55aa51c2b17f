#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sr/complex.hpp"

namespace sr {

/// Counter-based pseudorandom stream, fixed by algorithm so that sampled
/// complexes are reproducible across platforms and implementations:
/// value(seed, i) is the splitmix64 finalizer applied to
/// seed + (i + 1) * 0x9E3779B97F4A7C15.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t position = 0)
        : seed_(seed), pos_(position) {}

    static std::uint64_t value(std::uint64_t seed, std::uint64_t i) {
        std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return value(seed_, pos_++); }
    std::uint64_t position() const { return pos_; }

private:
    std::uint64_t seed_;
    std::uint64_t pos_;
};

// deterministic constructions
SimplicialComplex simplex_boundary(int d);            // ∂Δ^d on d+1 vertices
SimplicialComplex cycle(int n);                       // n-cycle graph, n >= 3
SimplicialComplex path(int n);                        // path graph on n vertices
SimplicialComplex complete_graph(int n);              // K_n as a 1-complex
SimplicialComplex uniform_matroid(int r, int n);      // subsets of size <= r
SimplicialComplex cross_polytope_boundary(int d);     // 2d vertices, antipodal pairs (i, i+d)
SimplicialComplex rp2_six_vertex();                   // minimal triangulation of RP^2
/// Facets of the cyclic polytope C(n, d) by Gale's evenness condition on
/// the index sequence 1..n. Supported for d in {3, 4, 5}, n >= d + 2.
SimplicialComplex cyclic_polytope_boundary(int d, int n);
/// Forests complex of a graph: ground set = edges, faces = acyclic subsets.
SimplicialComplex graphic_matroid(int vertices, const std::vector<std::pair<int, int>>& edges);

// seeded random families
SimplicialComplex random_pure(int n, int d, int count, std::uint64_t seed);
std::vector<std::pair<int, int>> random_graph_edges(int n, double p, std::uint64_t seed);
SimplicialComplex random_graph(int n, double p, std::uint64_t seed);

/// Family of complexes as named in the CLI and in search ledgers.
/// Every trial of a deterministic family yields the same complex; random
/// families derive a per-trial seed from (seed, trial).
struct FamilySpec {
    std::string name;
    std::map<std::string, std::string> params;
    std::uint64_t seed = 0;

    int int_param(const std::string& key) const;
    int int_param(const std::string& key, int fallback) const;
    double double_param(const std::string& key, double fallback) const;
    std::string to_string() const;
};

SimplicialComplex family_complex(const FamilySpec& family, int trial);
bool family_is_random(const std::string& name);
std::vector<std::string> family_names();

} // namespace sr
