#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sr/bigint.hpp"
#include "sr/complex.hpp"
#include "sr/engine.hpp"
#include "sr/field.hpp"

namespace sr {

/// Graded Betti numbers β_{i,j} of the face ideal, i ≥ 1. β_{0,0} = 1 is
/// implicit. `degenerate` marks the zero ideal (Δ a full simplex), whose
/// table is empty.
struct BettiTable {
    int n = 0;
    int d = 0;  // dim + 1
    int c = 0;  // codimension n - d
    FieldSpec field;
    bool degenerate = false;
    std::map<std::pair<int, int>, long long> beta;  // (i, j) -> β_{i,j} > 0
    int pd = 0;                                     // max i with a nonzero row

    long long at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
};

/// β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W) over all nonempty W ⊆ [n].
/// Throws DegenerateComplex for {∅}; a full simplex yields the flagged
/// empty table. threads > 1 fans the subset scan out with a result
/// identical to the sequential one.
BettiTable hochster_betti_table(const SimplicialComplex& dx, FieldSpec field, int threads = 1);
BettiTable hochster_betti_table(SubsetHomologyEngine& engine, int threads = 1);

/// Minimal and maximal shifts m_i = min{j : β_{i,j} ≠ 0}, M_i = max{...},
/// for i = 1..pd (stored 0-based).
struct ShiftSequences {
    std::vector<int> m, M;
    int pd() const { return static_cast<int>(m.size()); }
    int m_at(int i) const { return m[static_cast<std::size_t>(i - 1)]; }
    int M_at(int i) const { return M[static_cast<std::size_t>(i - 1)]; }
};

ShiftSequences shifts(const BettiTable& t);

/// Inclusion-minimal non-faces; these index the minimal generators of the
/// face ideal. Canonical order.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& dx);

bool is_pure_resolution(const BettiTable& t);
bool is_quasi_pure(const BettiTable& t);

/// e(k[Δ]) = number of top-dimensional faces.
long long multiplicity(const SimplicialComplex& dx);

/// The conjectured bounds (Π_{i<=c} m_i)/c! and (Π_{i<=c} M_i)/c!, exact.
/// Only the first c shifts enter, also when pd > c.
struct BoundPair {
    Rational lower, upper;
};
BoundPair multiplicity_bounds(const BettiTable& t);

/// Checks 1 + Σ_{i≥1,j} (-1)^i β_{i,j} t^j == (1-t)^{n-d} · Σ h_i t^i as
/// integer polynomials, tying the table back to the face counts.
bool k_polynomial_check(const SimplicialComplex& dx, const BettiTable& t);
bool k_polynomial_check(const SimplicialComplex& dx, FieldSpec field);

/// Plain-text grid (rows i, columns j) and structured document.
std::string betti_table_text(const BettiTable& t);

} // namespace sr
