#include "sr/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sr/errors.hpp"

namespace sr {

namespace {

std::vector<std::string> number_labels(const std::vector<int>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (int v : vs) out.push_back(std::to_string(v));
    return out;
}

SimplicialComplex from_int_facets(const std::vector<std::vector<int>>& facets) {
    std::vector<std::vector<std::string>> fl;
    fl.reserve(facets.size());
    for (const auto& f : facets) fl.push_back(number_labels(f));
    return SimplicialComplex::from_facets(fl);
}

} // namespace

SimplicialComplex simplex_boundary(int d) {
    if (d < 1) fail(errc::parameter_out_of_range, "simplex_boundary requires d >= 1");
    std::vector<std::vector<int>> facets;
    for (int skip = 1; skip <= d + 1; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= d + 1; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(f);
    }
    return from_int_facets(facets);
}

SimplicialComplex cycle(int n) {
    if (n < 3) fail(errc::parameter_out_of_range, "cycle requires n >= 3");
    std::vector<std::vector<int>> facets;
    for (int v = 1; v <= n; ++v) facets.push_back({v, v % n + 1});
    return from_int_facets(facets);
}

SimplicialComplex path(int n) {
    if (n < 1) fail(errc::parameter_out_of_range, "path requires n >= 1");
    if (n == 1) return from_int_facets({{1}});
    std::vector<std::vector<int>> facets;
    for (int v = 1; v < n; ++v) facets.push_back({v, v + 1});
    return from_int_facets(facets);
}

SimplicialComplex complete_graph(int n) {
    if (n < 2) fail(errc::parameter_out_of_range, "complete_graph requires n >= 2");
    std::vector<std::vector<int>> facets;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) facets.push_back({a, b});
    return from_int_facets(facets);
}

SimplicialComplex uniform_matroid(int r, int n) {
    if (r < 1 || r > n) fail(errc::parameter_out_of_range, "uniform_matroid requires 1 <= r <= n");
    if (n > VertexSet::max_vertices) fail(errc::parameter_out_of_range, "too many vertices");
    std::vector<std::vector<int>> facets;
    for_each_subset_of_size(VertexSet::full(n), r, [&](VertexSet s) {
        std::vector<int> f;
        for (int v : s) f.push_back(v + 1);
        facets.push_back(f);
        return true;
    });
    return from_int_facets(facets);
}

SimplicialComplex cross_polytope_boundary(int d) {
    if (d < 1 || 2 * d > VertexSet::max_vertices)
        fail(errc::parameter_out_of_range, "cross_polytope_boundary dimension out of range");
    // antipodal pairs (i, i + d); facets pick one vertex from each pair
    std::vector<std::vector<int>> facets;
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << d); ++pick) {
        std::vector<int> f;
        for (int i = 1; i <= d; ++i) f.push_back((pick >> (i - 1)) & 1 ? i + d : i);
        facets.push_back(f);
    }
    return from_int_facets(facets);
}

SimplicialComplex rp2_six_vertex() {
    return from_int_facets({{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                            {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}});
}

namespace {

// Gale's evenness condition: S is a facet of C(n, d) iff any two elements
// outside S have an even number of elements of S strictly between them.
bool gale_even(const std::vector<int>& s, int n) {
    std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
    for (int v : s) in[static_cast<std::size_t>(v)] = true;
    for (int i = 1; i <= n; ++i) {
        if (in[static_cast<std::size_t>(i)]) continue;
        int between = 0;
        for (int j = i + 1; j <= n; ++j) {
            if (in[static_cast<std::size_t>(j)]) {
                ++between;
            } else {
                if (between % 2 != 0) return false;
                between = 0;
            }
        }
        // run after the last gap need not be checked against anything
    }
    return true;
}

} // namespace

SimplicialComplex cyclic_polytope_boundary(int d, int n) {
    if (d < 3 || d > 5)
        fail(errc::parameter_out_of_range, "cyclic_polytope_boundary supports d in {3, 4, 5}");
    if (n < d + 2 || n > VertexSet::max_vertices)
        fail(errc::parameter_out_of_range, "cyclic_polytope_boundary requires d + 2 <= n <= 63");
    std::vector<std::vector<int>> facets;
    for_each_subset_of_size(VertexSet::full(n), d, [&](VertexSet s) {
        std::vector<int> f;
        for (int v : s) f.push_back(v + 1);
        if (gale_even(f, n)) facets.push_back(f);
        return true;
    });
    return from_int_facets(facets);
}

namespace {

bool acyclic(int vertices, const std::vector<std::pair<int, int>>& edges, std::uint64_t subset) {
    // union-find over the selected edges
    std::vector<int> parent(static_cast<std::size_t>(vertices + 1));
    for (int v = 0; v <= vertices; ++v) parent[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!((subset >> e) & 1)) continue;
        int a = find(edges[e].first), b = find(edges[e].second);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
}

} // namespace

SimplicialComplex graphic_matroid(int vertices, const std::vector<std::pair<int, int>>& edges) {
    if (edges.empty()) fail(errc::empty_input, "graphic_matroid requires at least one edge");
    if (edges.size() > 24) fail(errc::parameter_out_of_range, "too many edges for forest enumeration");
    // maximal forests (the facets) by scanning edge subsets from large to small
    std::vector<std::uint64_t> maximal;
    int m = static_cast<int>(edges.size());
    for (std::uint64_t sub = (std::uint64_t(1) << m); sub-- > 0;) {
        if (!acyclic(vertices, edges, sub)) continue;
        bool dominated = false;
        for (std::uint64_t big : maximal) {
            if ((sub & ~big) == 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(sub);
    }
    std::vector<std::vector<int>> facets;
    for (std::uint64_t sub : maximal) {
        std::vector<int> f;
        for (int e = 0; e < m; ++e)
            if ((sub >> e) & 1) f.push_back(e + 1);  // ground-set element = edge index
        facets.push_back(f);
    }
    return from_int_facets(facets);
}

namespace {

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return out;
}

// u-th k-subset of the nonnegative integers in colex (ascending mask) order
std::vector<int> unrank_colex(std::uint64_t u, int k) {
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (binomial_u64(c + 1, i) <= u) ++c;
        out[static_cast<std::size_t>(i - 1)] = c;
        u -= binomial_u64(c, i);
    }
    return out;
}

} // namespace

SimplicialComplex random_pure(int n, int d, int count, std::uint64_t seed) {
    if (n < 1 || n > 24 || d < 1 || d > n)
        fail(errc::parameter_out_of_range, "random_pure requires 1 <= d <= n <= 24");
    std::uint64_t total = binomial_u64(n, d);
    if (count < 1 || static_cast<std::uint64_t>(count) > total)
        fail(errc::parameter_out_of_range, "random_pure facet count out of range");
    RandomStream stream(seed);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < static_cast<std::size_t>(count)) {
        std::uint64_t u = stream.next() % total;
        std::vector<int> comb = unrank_colex(u, d);
        std::uint64_t mask = 0;
        for (int v : comb) mask |= std::uint64_t(1) << v;
        chosen.insert(mask);
    }
    std::vector<std::vector<int>> facets;
    for (std::uint64_t mask : chosen) {
        std::vector<int> f;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) f.push_back(v + 1);
        facets.push_back(f);
    }
    return from_int_facets(facets);
}

std::vector<std::pair<int, int>> random_graph_edges(int n, double p, std::uint64_t seed) {
    if (n < 1 || n > VertexSet::max_vertices || p < 0.0 || p > 1.0)
        fail(errc::parameter_out_of_range, "random_graph parameters out of range");
    // threshold comparison at 53-bit precision keeps the draw reproducible
    std::uint64_t threshold = static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));
    RandomStream stream(seed);
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if ((stream.next() >> 11) < threshold) edges.push_back({a, b});
    return edges;
}

SimplicialComplex random_graph(int n, double p, std::uint64_t seed) {
    auto edges = random_graph_edges(n, p, seed);
    std::vector<std::vector<int>> facets;
    for (int v = 1; v <= n; ++v) facets.push_back({v});
    for (auto [a, b] : edges) facets.push_back({a, b});
    return from_int_facets(facets);
}

int FamilySpec::int_param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
        fail(errc::parameter_out_of_range, "family " + name + " missing parameter " + key);
    return std::stoi(it->second);
}

int FamilySpec::int_param(const std::string& key, int fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stoi(it->second);
}

double FamilySpec::double_param(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stod(it->second);
}

std::string FamilySpec::to_string() const {
    std::string out = name;
    for (const auto& [k, v] : params) out += " " + k + "=" + v;
    return out;
}

bool family_is_random(const std::string& name) {
    return name == "random_pure" || name == "random_graph" || name == "graphic_random";
}

std::vector<std::string> family_names() {
    return {"simplex_boundary", "cycle", "path", "complete_graph", "uniform_matroid",
            "cross_polytope_boundary", "cyclic_polytope_boundary", "rp2_six_vertex",
            "graphic_random", "random_pure", "random_graph"};
}

SimplicialComplex family_complex(const FamilySpec& family, int trial) {
    // random families get an independent substream per trial
    std::uint64_t trialSeed = RandomStream::value(family.seed, static_cast<std::uint64_t>(trial));
    const std::string& f = family.name;
    if (f == "simplex_boundary") return simplex_boundary(family.int_param("d"));
    if (f == "cycle") return cycle(family.int_param("n"));
    if (f == "path") return path(family.int_param("n"));
    if (f == "complete_graph") return complete_graph(family.int_param("n"));
    if (f == "uniform_matroid") return uniform_matroid(family.int_param("r"), family.int_param("n"));
    if (f == "cross_polytope_boundary") return cross_polytope_boundary(family.int_param("d"));
    if (f == "cyclic_polytope_boundary")
        return cyclic_polytope_boundary(family.int_param("d"), family.int_param("n"));
    if (f == "rp2_six_vertex") return rp2_six_vertex();
    if (f == "random_pure")
        return random_pure(family.int_param("n"), family.int_param("d"),
                           family.int_param("count"), trialSeed);
    if (f == "random_graph")
        return random_graph(family.int_param("n"), family.double_param("p", 0.5), trialSeed);
    if (f == "graphic_random") {
        int n = family.int_param("n");
        auto edges = random_graph_edges(n, family.double_param("p", 0.5), trialSeed);
        if (edges.empty()) edges.push_back({1, 2});  // keep the ground set nonempty
        return graphic_matroid(n, edges);
    }
    fail(errc::parameter_out_of_range, "unknown family: " + f);
}

} // namespace sr
