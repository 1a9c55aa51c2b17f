#include <algorithm>

#include "doctest.h"
#include "sr/cm.hpp"
#include "sr/errors.hpp"
#include "sr/generators.hpp"
#include "sr/resolution.hpp"
#include "zoo.hpp"

using sr::FieldSpec;
using sr::VertexSet;

namespace {

// brute-force q-connectivity of a graph complex: the graph is q-connected
// iff it has more than q vertices and no deletion of fewer than q vertices
// disconnects it (complete graphs count as (n-1)-connected)
int graph_connectivity(const sr::SimplicialComplex& dx) {
    int n = dx.vertex_count();
    auto connected_on = [&](std::uint64_t verts) {
        if (verts == 0) return false;
        std::uint64_t start = verts & (~verts + 1);
        std::uint64_t seen = start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (VertexSet f : dx.facets()) {
                if (f.count() != 2 || (f.mask() & ~verts) != 0) continue;
                bool touches = (f.mask() & seen) != 0;
                if (touches && (f.mask() & ~seen) != 0) {
                    seen |= f.mask();
                    grew = true;
                }
            }
        }
        return seen == verts;
    };
    std::uint64_t full = VertexSet::full(n).mask();
    for (int k = 0; k <= n; ++k) {
        bool allGood = true;
        sr::for_each_subset_of_size(VertexSet::full(n), k, [&](VertexSet u) {
            std::uint64_t rest = full & ~u.mask();
            if (std::popcount(rest) <= 1 || !connected_on(rest)) {
                allGood = false;
                return false;
            }
            return true;
        });
        if (!allGood) return k;
    }
    return n;
}

} // namespace

TEST_CASE("the two CM criteria agree everywhere") {
    for (const auto& e : zoo::small_zoo()) {
        if (e.complex.dim() < 0) continue;
        for (int ch : {0, 2, 3}) {
            auto field = FieldSpec::of_characteristic(ch);
            CHECK(sr::is_cm_reisner(e.complex, field) == sr::is_cm_hochster(e.complex, field));
        }
    }
}

TEST_CASE("known CM verdicts") {
    auto q = FieldSpec::rationals();
    auto f2 = FieldSpec::of_characteristic(2);
    auto f3 = FieldSpec::of_characteristic(3);

    for (auto g : {sr::cycle(5), sr::path(4), sr::complete_graph(6), zoo::star(4)}) {
        CHECK(sr::is_cm_reisner(g, q));  // connected graphs
        CHECK(sr::is_cm_hochster(g, f2));
    }
    CHECK_FALSE(sr::is_cm_reisner(zoo::two_disjoint_edges(), q));
    CHECK_FALSE(sr::is_cm_hochster(zoo::two_disjoint_edges(), f3));
    CHECK(sr::is_cm_reisner(sr::simplex_boundary(3), q));

    // the projective plane separates characteristics
    auto rp2 = sr::rp2_six_vertex();
    CHECK(sr::is_cm_reisner(rp2, q));
    CHECK(sr::is_cm_reisner(rp2, f3));
    CHECK_FALSE(sr::is_cm_reisner(rp2, f2));
    CHECK(sr::is_cm_hochster(rp2, q));
    CHECK_FALSE(sr::is_cm_hochster(rp2, f2));
}

TEST_CASE("q_max values") {
    auto q = FieldSpec::rationals();
    CHECK(sr::q_max(zoo::points(5), q) == 5);
    CHECK(sr::q_max(sr::cycle(5), q) == 2);
    for (int n : {3, 4, 5, 6}) CHECK(sr::q_max(sr::complete_graph(n), q) == n - 1);
    CHECK_THROWS_AS(sr::q_max(zoo::two_disjoint_edges(), q), sr::Error);

    VertexSet witness;
    CHECK(sr::q_max(sr::path(4), q, &witness) == 1);
    CHECK(witness.mask() == 0b0010);  // canonical witness: the first interior vertex

    CHECK_THROWS_AS(sr::is_q_cm(sr::cycle(5), 0, q), sr::Error);
    CHECK(sr::is_q_cm(sr::cycle(5), 2, q));
    CHECK_FALSE(sr::is_q_cm(sr::cycle(5), 3, q));
}

TEST_CASE("graph q-CM equals graph connectivity in dimension one") {
    auto q = FieldSpec::rationals();
    for (const auto& e : zoo::small_zoo()) {
        if (e.complex.dim() != 1) continue;
        if (!sr::is_cm_hochster(e.complex, q)) continue;
        CHECK(sr::q_max(e.complex, q) == graph_connectivity(e.complex));
    }
}

TEST_CASE("connectivity sequences of the worked examples") {
    auto q = FieldSpec::rationals();
    CHECK(sr::connectivity_sequence(sr::cycle(5), q).q == std::vector<int>{5, 2});
    CHECK(sr::connectivity_sequence(sr::complete_graph(4), q).q == std::vector<int>{4, 3});
    CHECK(sr::connectivity_sequence(sr::cross_polytope_boundary(3), q).q ==
          std::vector<int>{6, 4, 2});
    CHECK_THROWS_AS(sr::connectivity_sequence(zoo::two_disjoint_edges(), q), sr::Error);
    // refusal is per-field: the projective plane is fine over Q, not over F2
    CHECK(sr::connectivity_sequence(sr::rp2_six_vertex(), q).q == std::vector<int>{6, 5, 1});
    CHECK_THROWS_AS(sr::connectivity_sequence(sr::rp2_six_vertex(), FieldSpec::of_characteristic(2)),
                    sr::Error);
}

TEST_CASE("skip table reproduces the worked n=19 example") {
    auto table = sr::skips_from_m_sequence({2, 3, 4, 6, 7, 11, 13, 16, 17, 18}, 19, 9);
    CHECK(table.m_prime == std::vector<int>{0, 0, 0, 1, 1, 4, 5, 7, 7, 7});
    CHECK(table.t == std::vector<int>{0, 3, 5, 5, 5, 6, 7, 7, 10});
    CHECK(table.s == std::vector<int>{1, 5, 8, 9, 10, 12, 14, 15, 19});
    CHECK(table.q == std::vector<int>{19, 15, 12, 11, 10, 8, 6, 5, 1});
}

TEST_CASE("skip table small cases and validation") {
    auto c5 = sr::skips_from_m_sequence({2, 3, 5}, 5, 2);
    CHECK(c5.s == std::vector<int>{1, 4});
    CHECK(c5.q == std::vector<int>{5, 2});

    auto p3 = sr::skips_from_m_sequence({2}, 3, 2);
    CHECK(p3.s == std::vector<int>{1, 3});
    CHECK(p3.q == std::vector<int>{3, 1});

    CHECK_THROWS_AS(sr::skips_from_m_sequence({3, 2}, 5, 3), sr::Error);   // not increasing
    CHECK_THROWS_AS(sr::skips_from_m_sequence({2, 3}, 5, 2), sr::Error);   // wrong length
    CHECK_THROWS_AS(sr::skips_from_m_sequence({1, 3}, 5, 3), sr::Error);   // below 2
    CHECK_THROWS_AS(sr::skips_from_m_sequence({2, 9}, 5, 3), sr::Error);   // above n
}

TEST_CASE("main theorem: shifts against connectivity") {
    auto q = FieldSpec::rationals();

    auto c5 = sr::verify_main_theorem(sr::cycle(5), q);
    CHECK(c5.holds);
    CHECK(c5.product_side == sr::Rational(5));
    CHECK(c5.closed_form_side == sr::Rational(5));

    auto oct = sr::verify_main_theorem(sr::cross_polytope_boundary(3), q);
    CHECK(oct.holds);
    CHECK(oct.product_side == sr::Rational(8));

    auto bd3 = sr::verify_main_theorem(sr::simplex_boundary(3), q);
    CHECK(bd3.holds);
    CHECK(bd3.product_side == sr::Rational(4));

    CHECK_THROWS_AS(sr::verify_main_theorem(zoo::two_disjoint_edges(), q), sr::Error);
}

TEST_CASE("multiplicity against the connectivity product") {
    auto q = FieldSpec::rationals();
    auto c5 = sr::verify_q_estimate(sr::cycle(5), q);
    CHECK(c5.holds);
    CHECK(c5.tight);  // 5 = 5*2/2!
    auto k4 = sr::verify_q_estimate(sr::complete_graph(4), q);
    CHECK(k4.tight);  // 6 = 4*3/2!
    auto oct = sr::verify_q_estimate(sr::cross_polytope_boundary(3), q);
    CHECK(oct.tight);  // 8 = 6*4*2/3!
    auto u36 = sr::verify_q_estimate(sr::uniform_matroid(3, 6), q);
    CHECK(u36.holds);
}

TEST_CASE("almost CM") {
    auto q = FieldSpec::rationals();
    for (const auto& e : zoo::small_zoo()) {
        if (e.complex.dim() < 0) continue;
        if (sr::is_cm_hochster(e.complex, q)) CHECK(sr::is_almost_cm(e.complex, q));
        if (e.complex.dim() == 1) CHECK(sr::is_almost_cm(e.complex, q));
    }
    CHECK_FALSE(sr::is_almost_cm(zoo::two_disjoint_triangles(), q));
    CHECK(sr::is_almost_cm(zoo::two_disjoint_edges(), q));
}

TEST_CASE("skeleton connectivity steps down by at least one") {
    auto q = FieldSpec::rationals();
    for (auto dx : {sr::cross_polytope_boundary(3), sr::cycle(5), sr::uniform_matroid(3, 6)}) {
        auto rep = sr::verify_skeleton_proposition(dx, q);
        CHECK(rep.holds);
    }
}

TEST_CASE("lower bound certificate hypotheses and inequality") {
    auto q = FieldSpec::rationals();

    auto oct = sr::lower_bound_certificate(sr::cross_polytope_boundary(3), q);
    CHECK(oct.is_2cm);
    CHECK(oct.q1_within_codim);  // q_1 = 4 <= n - d + 1 = 4
    CHECK(oct.hypothesis_holds);
    CHECK(oct.lhs == sr::BigInt(120));  // 3! * 5 * 4
    CHECK(oct.rhs == sr::BigInt(120));  // (4*3) * (2*5)
    CHECK(oct.inequality_holds);

    auto c5 = sr::lower_bound_certificate(sr::cycle(5), q);
    CHECK(c5.lhs == sr::BigInt(8));  // 2! * 4
    CHECK(c5.rhs == sr::BigInt(8));  // 2 * 4
    CHECK(c5.inequality_holds);

    auto k6 = sr::lower_bound_certificate(sr::complete_graph(6), q);
    CHECK(k6.is_dcm);  // q_max = 5 >= d = 2
    CHECK(k6.inequality_holds);
}

TEST_CASE("skips from the table reproduce the connectivity sequence") {
    auto q = FieldSpec::rationals();
    for (auto dx : {sr::cycle(5), sr::cycle(6), sr::complete_graph(5), sr::simplex_boundary(4),
                    sr::cross_polytope_boundary(3), sr::uniform_matroid(3, 6),
                    sr::uniform_matroid(2, 5)}) {
        auto t = sr::hochster_betti_table(dx, q);
        if (t.degenerate) continue;
        auto s = sr::shifts(t);
        std::vector<int> m(s.m.begin(), s.m.begin() + t.c);
        auto table = sr::skips_from_m_sequence(m, t.n, t.d);
        auto conn = sr::connectivity_sequence(dx, q);
        CHECK(table.q == conn.q);
    }
}

TEST_CASE("vertex link connectivity dominates the next skeleton level") {
    // q_i(lk v) >= q_{i+1}(Δ) for CM complexes
    auto q = FieldSpec::rationals();
    for (auto dx : {sr::cross_polytope_boundary(3), sr::uniform_matroid(3, 6)}) {
        auto conn = sr::connectivity_sequence(dx, q);
        for (int v = 0; v < dx.vertex_count(); ++v) {
            auto lk = dx.link(VertexSet::single(v));
            auto lkConn = sr::connectivity_sequence(lk, q);
            for (std::size_t i = 0; i + 1 < conn.q.size(); ++i)
                CHECK(lkConn.q[i] >= conn.q[i + 1]);
        }
    }
}
