#include "sr/cm.hpp"

#include <algorithm>
#include <bit>

#include "sr/errors.hpp"
#include "sr/homology.hpp"
#include "sr/resolution.hpp"

namespace sr {

bool is_cm_reisner(const SimplicialComplex& dx, FieldSpec field) {
    int dim = dx.dim();
    if (dim < 0) fail(errc::degenerate_complex, "CM test on {∅}");
    // lk ∅ = Δ itself
    std::vector<VertexSet> faces{VertexSet()};
    for (const auto& lvl : dx.faces_by_dim())
        for (std::uint64_t m : lvl) faces.push_back(VertexSet(m));
    for (VertexSet f : faces) {
        SimplicialComplex lk = dx.link(f);
        BettiVector bv = reduced_betti(lk, field);
        int upper = dim - f.count();  // need vanishing strictly below this
        for (int i = -1; i <= std::min(lk.dim(), upper - 1); ++i)
            if (i < upper && bv.at(i) != 0) return false;
    }
    return true;
}

namespace {

/// CM test for Skel_j(Δ)_V via Hochster's criterion, phrased on the parent
/// complex: H̃_p(Skel_j(Δ_W)) must vanish for all W ⊆ V and p with
/// p + (|V| - |W|) < j. Only deletions T = V - W of size < j can make the
/// condition non-vacuous, so just those are scanned.
bool skeleton_induced_is_cm(SubsetHomologyEngine& eng, int j, std::uint64_t v) {
    auto profV = eng.profile(v);
    if (profV.induced_dim() < j) return false;  // dimension dropped
    for (int t = 0; t < j; ++t) {
        bool ok = for_each_subset_of_size(VertexSet(v), t, [&](VertexSet del) {
            std::uint64_t w = v & ~del.mask();
            auto prof = eng.profile(w);
            for (int p = 0; p < j - t; ++p)
                if (prof.betti_skel(p, j) != 0) return false;
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

} // namespace

bool is_cm_hochster(SubsetHomologyEngine& engine) {
    std::uint64_t full = VertexSet::full(engine.n()).mask();
    return skeleton_induced_is_cm(engine, engine.dim(), full);
}

bool is_cm_hochster(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "CM test on {∅}");
    SubsetHomologyEngine engine(dx, field);
    return is_cm_hochster(engine);
}

int q_max_skeleton(SubsetHomologyEngine& engine, int j, VertexSet* witness) {
    int n = engine.n();
    VertexSet ground = VertexSet::full(n);
    std::uint64_t full = ground.mask();
    for (int k = 0; k <= n; ++k) {
        VertexSet bad;
        bool found_bad = false;
        for_each_subset_of_size(ground, k, [&](VertexSet u) {
            std::uint64_t v = full & ~u.mask();
            if (v == 0 || !skeleton_induced_is_cm(engine, j, v)) {
                bad = u;
                found_bad = true;
                return false;
            }
            return true;
        });
        if (found_bad) {
            if (witness) *witness = bad;
            return k;
        }
    }
    return n;  // not reachable: deleting all n vertices always fails
}

bool is_q_cm(const SimplicialComplex& dx, int q, FieldSpec field) {
    if (q < 1) fail(errc::parameter_out_of_range, "q-CM requires q >= 1");
    if (dx.dim() < 0) fail(errc::degenerate_complex, "CM test on {∅}");
    SubsetHomologyEngine engine(dx, field);
    std::uint64_t full = VertexSet::full(engine.n()).mask();
    for (int k = 0; k <= q - 1; ++k) {
        bool ok = for_each_subset_of_size(VertexSet::full(engine.n()), k, [&](VertexSet u) {
            std::uint64_t v = full & ~u.mask();
            return v != 0 && skeleton_induced_is_cm(engine, engine.dim(), v);
        });
        if (!ok) return false;
    }
    return true;
}

int q_max(const SimplicialComplex& dx, FieldSpec field, VertexSet* witness) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "CM test on {∅}");
    SubsetHomologyEngine engine(dx, field);
    int q = q_max_skeleton(engine, engine.dim(), witness);
    if (q == 0) fail(errc::not_cm, "q_max of a non-Cohen-Macaulay complex");
    return q;
}

ConnectivitySequence connectivity_sequence(SubsetHomologyEngine& engine) {
    int d = engine.dim() + 1;
    if (!is_cm_hochster(engine))
        fail(errc::not_cm, "connectivity sequence requires a CM complex");
    ConnectivitySequence out;
    out.field = engine.field();
    out.q.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        out.q[static_cast<std::size_t>(i)] = q_max_skeleton(engine, i);
    if (out.q[0] != engine.n()) fail(errc::internal, "q_0 != n for a CM complex");
    for (int i = 1; i < d; ++i)
        if (out.q[static_cast<std::size_t>(i)] >= out.q[static_cast<std::size_t>(i - 1)])
            fail(errc::internal, "connectivity sequence not strictly decreasing");
    if (out.q[static_cast<std::size_t>(d - 1)] < 1)
        fail(errc::internal, "connectivity sequence below 1");
    return out;
}

ConnectivitySequence connectivity_sequence(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "CM test on {∅}");
    SubsetHomologyEngine engine(dx, field);
    return connectivity_sequence(engine);
}

SkipTable skips_from_m_sequence(const std::vector<int>& m, int n, int d) {
    if (d < 1 || n < d || static_cast<int>(m.size()) != n - d)
        fail(errc::malformed_sequence, "m-sequence must have length n - d with d >= 1");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 2 || m[i] > n)
            fail(errc::malformed_sequence, "m-sequence values must lie in [2, n]");
        if (i > 0 && m[i] <= m[i - 1])
            fail(errc::malformed_sequence, "m-sequence must be strictly increasing");
    }

    SkipTable out;
    out.n = n;
    out.d = d;
    out.m = m;
    out.m_prime.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out.m_prime[i] = m[i] - static_cast<int>(i) - 2;  // m'_i = m_i - i - 1, i is 1-based

    out.t.resize(static_cast<std::size_t>(d));
    out.s.resize(static_cast<std::size_t>(d));
    out.q.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        int tj = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (out.m_prime[i] < j) tj = static_cast<int>(i) + 1;
        out.t[static_cast<std::size_t>(j)] = tj;
        out.s[static_cast<std::size_t>(j)] = tj + j + 1;
        out.q[static_cast<std::size_t>(j)] = n - out.s[static_cast<std::size_t>(j)] + 1;
    }

    // the s_j must be exactly the values of [n] skipped by the m-sequence
    std::vector<int> skipped;
    for (int v = 1; v <= n; ++v)
        if (std::find(m.begin(), m.end(), v) == m.end()) skipped.push_back(v);
    if (skipped != out.s) fail(errc::internal, "skip bookkeeping disagrees with the skipped set");
    return out;
}

namespace {

Rational falling_product_over_skips(int n, const std::vector<int>& q) {
    BigInt num(1), den(1);
    for (std::size_t j = 0; j < q.size(); ++j) {
        num *= BigInt(n - static_cast<int>(j));
        den *= BigInt(n - q[j] + 1);
    }
    return Rational(num, den);
}

} // namespace

MainTheoremReport verify_main_theorem(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "theorem check on {∅}");
    SubsetHomologyEngine engine(dx, field);
    ConnectivitySequence conn = connectivity_sequence(engine);  // throws NotCM
    BettiTable table = hochster_betti_table(engine);

    MainTheoremReport rep;
    int n = dx.vertex_count();
    int c = table.c;
    rep.q = conn.q;
    if (c > 0) {
        ShiftSequences sh = shifts(table);
        rep.m.assign(sh.m.begin(), sh.m.begin() + c);
    }

    for (int v = 1; v <= n; ++v)
        if (std::find(rep.m.begin(), rep.m.end(), v) == rep.m.end())
            rep.skips_from_m.push_back(v);
    for (int qi : rep.q) rep.skips_from_q.push_back(n - qi + 1);
    std::sort(rep.skips_from_q.begin(), rep.skips_from_q.end());

    BigInt prod(1);
    for (int mi : rep.m) prod *= BigInt(mi);
    rep.product_side = Rational(prod, BigInt::factorial(c));
    rep.closed_form_side = falling_product_over_skips(n, rep.q);

    rep.holds = rep.skips_from_m == rep.skips_from_q &&
                rep.product_side == rep.closed_form_side;
    return rep;
}

QEstimateReport verify_q_estimate(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "theorem check on {∅}");
    SubsetHomologyEngine engine(dx, field);
    ConnectivitySequence conn = connectivity_sequence(engine);

    QEstimateReport rep;
    rep.q = conn.q;
    rep.e = multiplicity(dx);
    BigInt prod(1);
    for (int qi : conn.q) prod *= BigInt(qi);
    rep.bound = Rational(prod, BigInt::factorial(dx.dim() + 1));
    rep.slack = Rational(BigInt(rep.e), BigInt(1)) - rep.bound;
    rep.holds = Rational(rep.e) >= rep.bound;
    rep.tight = Rational(rep.e) == rep.bound;
    return rep;
}

bool is_almost_cm(const SimplicialComplex& dx, FieldSpec field) {
    int d = dx.dim() + 1;
    if (dx.dim() < 0) fail(errc::degenerate_complex, "CM test on {∅}");
    if (d <= 1) return true;  // 0-dimensional: nothing below the top skeleton
    return is_cm_hochster(dx.skeleton(d - 2), field);
}

SkeletonPropReport verify_skeleton_proposition(const SimplicialComplex& dx, FieldSpec field) {
    SkeletonPropReport rep;
    ConnectivitySequence conn = connectivity_sequence(dx, field);
    rep.q = conn.q;
    rep.holds = true;
    for (std::size_t i = 1; i < rep.q.size(); ++i)
        if (rep.q[i - 1] < rep.q[i] + 1) rep.holds = false;
    return rep;
}

LowerBoundCertificate lower_bound_certificate(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "certificate on {∅}");
    SubsetHomologyEngine engine(dx, field);
    ConnectivitySequence conn = connectivity_sequence(engine);

    LowerBoundCertificate cert;
    cert.q = conn.q;
    int n = dx.vertex_count();
    int d = dx.dim() + 1;
    int qmax = conn.q.back();  // q(Skel_{d-1}) = q(Δ)
    cert.is_2cm = qmax >= 2;
    cert.is_dcm = qmax >= d;
    cert.q1_within_codim = d < 2 || conn.q[1] <= n - d + 1;
    cert.hypothesis_holds = (cert.is_2cm && cert.q1_within_codim) || cert.is_dcm;

    cert.lhs = BigInt::factorial(d);
    cert.rhs = BigInt(1);
    for (int i = 1; i <= d - 1; ++i) {
        cert.lhs *= BigInt(n - i);
        int qi = conn.q[static_cast<std::size_t>(i)];
        cert.rhs *= BigInt(qi) * BigInt(n - qi + 1);
    }
    cert.inequality_holds = cert.lhs <= cert.rhs;
    return cert;
}

} // namespace sr
