#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sr/bigint.hpp"
#include "sr/complex.hpp"
#include "sr/engine.hpp"
#include "sr/field.hpp"

namespace sr {

/// Reisner's criterion: H̃_i(lk F) = 0 for every face F (including ∅) and
/// every i < dim Δ - |F|. Works through links and the generic homology
/// path; the Hochster-criterion test below goes through induced
/// subcomplexes instead, and the two are kept as an oracle pair.
bool is_cm_reisner(const SimplicialComplex& dx, FieldSpec field);

/// Hochster's criterion: H̃_p(Δ_W) = 0 for every W and every p with
/// p + (n - |W|) < d - 1.
bool is_cm_hochster(const SimplicialComplex& dx, FieldSpec field);
bool is_cm_hochster(SubsetHomologyEngine& engine);

/// q-CM: every deletion of at most q-1 vertices leaves a CM complex of
/// the same dimension.
bool is_q_cm(const SimplicialComplex& dx, int q, FieldSpec field);

/// Largest q such that Δ is q-CM; throws NotCM when Δ itself is not CM.
/// `witness` (when given) receives the smallest deletion set, in canonical
/// order, defeating (q_max + 1)-CM.
int q_max(const SimplicialComplex& dx, FieldSpec field, VertexSet* witness = nullptr);

/// q(Skel_j(Δ)) computed against a shared engine; returns 0 when the
/// skeleton is not even CM.
int q_max_skeleton(SubsetHomologyEngine& engine, int j, VertexSet* witness = nullptr);

struct ConnectivitySequence {
    std::vector<int> q;  // q_0 .. q_{d-1}
    FieldSpec field;
    int at(int i) const { return q[static_cast<std::size_t>(i)]; }
};

/// (q_0, ..., q_{d-1}) with q_i = q(Skel_i(Δ)). Requires Δ CM over the
/// field (NotCM otherwise). Strict decrease and q_0 = n are asserted.
ConnectivitySequence connectivity_sequence(const SimplicialComplex& dx, FieldSpec field);
ConnectivitySequence connectivity_sequence(SubsetHomologyEngine& engine);

/// Skip bookkeeping derived from a strictly increasing m-sequence:
/// m'_i = m_i - i - 1, t_j = largest i with m'_i < j (0 when none),
/// s_j = t_j + j + 1, q_j = n - s_j + 1.
struct SkipTable {
    int n = 0, d = 0;
    std::vector<int> m;        // m_1 .. m_{n-d}
    std::vector<int> m_prime;  // m'_1 .. m'_{n-d}
    std::vector<int> t, s, q;  // indexed by j = 0 .. d-1
};

SkipTable skips_from_m_sequence(const std::vector<int>& m, int n, int d);

/// Checks that the skipped values of the m-sequence computed from the
/// Betti table are exactly {n - q_j + 1} for the independently computed
/// connectivity sequence, and that the two closed-form expressions for
/// (Π m_i)/(n-d)! agree.
struct MainTheoremReport {
    bool holds = false;
    std::vector<int> m, q;
    std::vector<int> skips_from_m;  // [n] - {m_i}
    std::vector<int> skips_from_q;  // {n - q_j + 1}, sorted
    Rational product_side, closed_form_side;
};
MainTheoremReport verify_main_theorem(const SimplicialComplex& dx, FieldSpec field);

struct QEstimateReport {
    bool holds = false;
    bool tight = false;
    long long e = 0;
    Rational bound;  // (Π q_i)/d!
    Rational slack;  // e - bound
    std::vector<int> q;
};
QEstimateReport verify_q_estimate(const SimplicialComplex& dx, FieldSpec field);

/// Codimension-one skeleton is CM (trivially true in dimension <= 0).
bool is_almost_cm(const SimplicialComplex& dx, FieldSpec field);

struct SkeletonPropReport {
    bool holds = false;
    std::vector<int> q;
};
/// q_{i-1} >= q_i + 1 at every computed level.
SkeletonPropReport verify_skeleton_proposition(const SimplicialComplex& dx, FieldSpec field);

/// Which lower-bound hypothesis applies (2-CM with small q_1, or d-CM),
/// and the two sides of d!·Π(n-i) <= Π q_i(n-q_i+1), evaluated exactly.
struct LowerBoundCertificate {
    bool is_2cm = false;
    bool q1_within_codim = false;  // q_1 <= n-d+1 (vacuous when d < 2)
    bool is_dcm = false;
    bool hypothesis_holds = false;
    bool inequality_holds = false;
    BigInt lhs, rhs;
    std::vector<int> q;
};
LowerBoundCertificate lower_bound_certificate(const SimplicialComplex& dx, FieldSpec field);

} // namespace sr
