#pragma once

#include <string>
#include <vector>

#include "sr/bigint.hpp"
#include "sr/vertex_set.hpp"

namespace sr {

/// Face counts per dimension; entry 0 holds f_{-1} = 1, entry k+1 holds f_k.
struct FVector {
    std::vector<long long> counts;
    int dim() const { return static_cast<int>(counts.size()) - 2; }
    long long at(int k) const { return counts[static_cast<std::size_t>(k + 1)]; }
};

/// h_0 .. h_d with d = dim + 1.
struct HVector {
    std::vector<long long> h;
    int d() const { return static_cast<int>(h.size()) - 1; }
    long long at(int i) const { return h[static_cast<std::size_t>(i)]; }
};

/// Simplicial complex given by its inclusion-maximal faces over a dense
/// internal vertex set 0..n-1. Immutable after construction; every
/// operation returns a fresh complex. Construction normalizes the input:
/// non-maximal sets are dropped, duplicates merged, facets put in the
/// canonical order (cardinality, then mask), and labels sorted so that
/// permuting the input never changes the result.
///
/// The irrelevant complex {∅} is represented as n = 0 with the single
/// facet ∅; it is constructible here but rejected by the analysis modules.
///
/// The ambient count is the number of actual vertices: every i in 0..n-1
/// lies in some facet. Analyses enumerate 2^n subsets, so while the hard
/// cap is 63 vertices, beyond roughly n = 24 they stop being practical.
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facet_labels);

    int vertex_count() const { return n_; }
    int dim() const;  // -1 for {∅}
    const std::vector<VertexSet>& facets() const { return facets_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

    bool is_face(VertexSet s) const;
    bool is_pure() const;

    /// All k-faces, deduplicated, ascending mask order. k may be -1 (gives {∅}).
    std::vector<VertexSet> faces(int k) const;
    /// Faces grouped by dimension: entry k lists the k-face masks, sorted.
    /// The empty face is implicit.
    std::vector<std::vector<std::uint64_t>> faces_by_dim() const;

    FVector f_vector() const;
    HVector h_vector() const;

    SimplicialComplex induced(VertexSet w) const;
    SimplicialComplex delete_vertices(VertexSet u) const;
    SimplicialComplex skeleton(int i) const;
    SimplicialComplex link(VertexSet f) const;
    VertexSet cone_apexes() const;
    SimplicialComplex core() const;

    long long euler_characteristic() const;          // unreduced
    long long reduced_euler_characteristic() const;  // χ - 1

    /// Stable identity of the canonical form (FNV-1a over n and facet masks).
    std::string hash() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

    /// Facet lists expressed in the external labels (for re-normalization
    /// and serialization).
    std::vector<std::vector<std::string>> facet_labels() const;

private:
    int n_ = 0;
    std::vector<VertexSet> facets_;
    std::vector<std::string> labels_;
};

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& base);

} // namespace sr
