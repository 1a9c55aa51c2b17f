#pragma once

#include <optional>

#include "sr/complex.hpp"
#include "sr/engine.hpp"
#include "sr/field.hpp"

namespace sr {

/// Purity of every induced subcomplex (the matroid complex property),
/// by scanning subsets in canonical order. On failure `witness` holds
/// the first impure selection.
struct MatroidCheck {
    bool is_matroid = false;
    std::optional<VertexSet> witness;
};
MatroidCheck is_matroid(const SimplicialComplex& dx);

/// Independent matroid test through the ideal: for every pair of minimal
/// non-faces N1, N2 and every shared vertex v, (N1 ∪ N2) - v must again be
/// a non-face. Oracle partner of is_matroid.
bool circuit_axiom_check(const SimplicialComplex& dx);

/// Link criterion: every face's link has the reduced homology of a sphere
/// of the link's own dimension. Cones fail at F = ∅, so no separate core
/// condition is needed. By convention {∅} passes (it is the (-1)-sphere).
bool is_gorenstein_star(const SimplicialComplex& dx, FieldSpec field);

/// Gorenstein ⟺ the core is Gorenstein*.
bool is_gorenstein(const SimplicialComplex& dx, FieldSpec field);

struct ClassificationFlags {
    FieldSpec field;
    bool is_pure = false;
    bool is_cone = false;
    bool is_matroid = false;
    bool is_cm = false;
    int q_max = 0;  // 0 when not CM
    bool is_2cm = false;
    bool is_dcm = false;  // q_max >= d = dim + 1
    bool is_gorenstein = false;
    bool is_gorenstein_star = false;
};

ClassificationFlags classify(const SimplicialComplex& dx, FieldSpec field);
/// Variant reusing a caller's engine for the CM / q_max part.
ClassificationFlags classify(const SimplicialComplex& dx, SubsetHomologyEngine& engine);

} // namespace sr
