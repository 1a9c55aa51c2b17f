#include "sr/verify.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "sr/errors.hpp"

namespace sr {

const char* purity_status_name(PurityStatus s) {
    switch (s) {
    case PurityStatus::not_applicable: return "not_applicable";
    case PurityStatus::confirmed: return "confirmed_pure";
    case PurityStatus::observation_pure: return "observation_pure";
    case PurityStatus::observation_not_pure: return "observation_not_pure";
    case PurityStatus::violated: return "violated";
    }
    return "unknown";
}

bool MultiplicityReport::all_hold() const {
    if (degenerate) return true;
    if (!upper_holds) return false;
    if (lower_applicable && !lower_holds) return false;
    if (purity_at_equality == PurityStatus::violated) return false;
    for (const auto& v : verdicts)
        if (v.applicable && !v.holds) return false;
    return true;
}

PurityStatus equality_purity_check(const MultiplicityReport& report) {
    if (report.degenerate) return PurityStatus::not_applicable;
    bool lowerTight = report.lower_tight && report.flags.is_cm;
    if (!report.upper_tight && !lowerTight) return PurityStatus::not_applicable;

    int d = report.dim + 1;
    bool quasiPureCm = report.quasi_pure && report.flags.is_cm;
    bool gorensteinMid = report.flags.is_gorenstein_star && (report.dim == 3 || report.dim == 4);
    bool q1Small = true;
    if (report.connectivity && d >= 2)
        q1Small = report.connectivity->at(1) <= report.n - d + 1;
    bool lowerTheoremClass =
        report.flags.is_cm && ((report.flags.is_2cm && q1Small) || report.flags.is_dcm);

    bool proven = false;
    bool needCm = false;
    if (report.upper_tight) {
        if (report.flags.is_matroid || gorensteinMid || quasiPureCm) proven = true;
        if (report.dim == 1) {
            proven = true;
            needCm = true;  // one-dimensional upper equality forces CM as well
        }
        // two-dimensional upper equality carries no purity theorem
    }
    if (lowerTight) {
        if (report.flags.is_matroid || gorensteinMid || quasiPureCm || lowerTheoremClass ||
            report.dim == 1 || report.dim == 2)
            proven = true;
    }

    if (!proven)
        return report.pure ? PurityStatus::observation_pure : PurityStatus::observation_not_pure;
    if (report.pure && (!needCm || report.flags.is_cm)) return PurityStatus::confirmed;
    return PurityStatus::violated;
}

MultiplicityReport verify_conjecture(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "conjecture check on {∅}");
    SubsetHomologyEngine engine(dx, field);

    MultiplicityReport rep;
    rep.complex_hash = dx.hash();
    rep.n = dx.vertex_count();
    rep.dim = dx.dim();
    rep.field = field;
    rep.e = multiplicity(dx);
    rep.flags = classify(dx, engine);

    BettiTable table = hochster_betti_table(engine);
    if (table.degenerate) {
        rep.degenerate = true;  // zero ideal: empty products, e = 1 by convention
        rep.lower = Rational(1);
        rep.upper = Rational(1);
        rep.upper_holds = rep.lower_holds = true;
        rep.upper_tight = rep.lower_tight = true;
        rep.lower_applicable = rep.flags.is_cm;
        return rep;
    }

    BoundPair bounds = multiplicity_bounds(table);
    rep.lower = bounds.lower;
    rep.upper = bounds.upper;
    rep.shift_seqs = shifts(table);
    rep.pure = is_pure_resolution(table);
    rep.quasi_pure = is_quasi_pure(table);

    Rational e(rep.e);
    rep.upper_holds = e <= rep.upper;
    rep.upper_tight = e == rep.upper;
    rep.lower_applicable = rep.flags.is_cm;
    rep.lower_holds = e >= rep.lower;
    rep.lower_tight = e == rep.lower;
    if (rep.flags.is_cm) rep.connectivity = connectivity_sequence(engine);

    rep.purity_at_equality = equality_purity_check(rep);
    return rep;
}

namespace {

std::string bound_detail(const MultiplicityReport& r) {
    std::ostringstream os;
    os << "e=" << r.e << " lower=" << r.lower.to_string() << " upper=" << r.upper.to_string();
    return os.str();
}

} // namespace

TheoremVerdict verify_matroid_theorem(const SimplicialComplex& dx, FieldSpec field) {
    MatroidCheck mc = is_matroid(dx);
    if (!mc.is_matroid) fail(errc::not_a_matroid, "matroid theorem on a non-matroid complex");
    TheoremVerdict v;
    v.name = "matroid_bounds";
    v.applicable = true;
    MultiplicityReport rep = verify_conjecture(dx, field);
    v.holds = rep.degenerate ||
              (rep.upper_holds && rep.lower_holds && rep.flags.is_cm &&
               rep.purity_at_equality != PurityStatus::violated);
    v.detail = bound_detail(rep);
    return v;
}

TheoremVerdict verify_dim12(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() != 1 && dx.dim() != 2)
        fail(errc::wrong_dimension, "dimension-1/2 suite needs dim 1 or 2");
    TheoremVerdict v;
    v.name = dx.dim() == 1 ? "dim1_bounds" : "dim2_bounds";
    v.applicable = true;
    MultiplicityReport rep = verify_conjecture(dx, field);
    bool ok = rep.upper_holds;
    if (dx.dim() == 1) {
        // shifts of a graph complex sit in {i+1, i+2}, hence quasi-purity
        ok = ok && rep.quasi_pure;
        for (int i = 1; i <= rep.shift_seqs.pd(); ++i) {
            int m = rep.shift_seqs.m_at(i), M = rep.shift_seqs.M_at(i);
            if (m < i + 1 || M > i + 2) ok = false;
        }
        if (rep.upper_tight && !(rep.flags.is_cm && rep.pure)) ok = false;
    }
    if (rep.flags.is_cm) {
        ok = ok && rep.lower_holds;
        if (rep.lower_tight && !rep.pure) ok = false;
    }
    v.holds = ok;
    v.detail = bound_detail(rep);
    return v;
}

std::vector<TheoremVerdict> verify_gorenstein(const SimplicialComplex& dx, FieldSpec field) {
    if (!is_gorenstein_star(dx, field))
        fail(errc::not_gorenstein_star, "Gorenstein* suite on a non-Gorenstein* complex");
    std::vector<TheoremVerdict> out;
    int n = dx.vertex_count();
    int d = dx.dim() + 1;
    SubsetHomologyEngine engine(dx, field);
    BettiTable table = hochster_betti_table(engine);
    if (table.degenerate) return out;
    ShiftSequences sh = shifts(table);
    int c = table.c;

    {
        TheoremVerdict v;
        v.name = "gorenstein_self_duality";
        v.applicable = true;
        v.holds = true;
        for (int i = 0; i <= c; ++i) {
            int Mi = i == 0 ? 0 : sh.M_at(i);
            int mco = c - i == 0 ? 0 : sh.m_at(c - i);
            if (Mi + mco != n) v.holds = false;
        }
        out.push_back(v);
    }

    if (d >= 3) {
        ConnectivitySequence conn = connectivity_sequence(engine);
        TheoremVerdict vq;
        vq.name = "gorenstein_q_structure";
        vq.applicable = true;
        vq.holds = conn.at(d - 1) == 2 && conn.at(d - 2) <= 5;
        out.push_back(vq);

        TheoremVerdict vm;
        vm.name = "gorenstein_M_skips";
        vm.applicable = true;
        std::vector<int> skipsFromM;
        for (int val = 1; val <= n; ++val) {
            bool hit = false;
            for (int i = 1; i <= c; ++i)
                if (sh.M_at(i) == val) hit = true;
            if (!hit) skipsFromM.push_back(val);
        }
        std::vector<int> skipsFromQ;
        for (int j = 0; j < d; ++j) skipsFromQ.push_back(conn.at(j) - 1);
        std::sort(skipsFromQ.begin(), skipsFromQ.end());
        vm.holds = skipsFromM == skipsFromQ;

        // (Π M_i)/(n-d)! = n(n-2)...(n-(d-1)) / ((q_1 - 1)...(q_{d-2} - 1))
        BigInt prodM(1);
        for (int i = 1; i <= c; ++i) prodM *= BigInt(sh.M_at(i));
        Rational lhs(prodM, BigInt::factorial(c));
        BigInt num(n), den(1);
        for (int j = 2; j <= d - 1; ++j) num *= BigInt(n - j);
        for (int j = 1; j <= d - 2; ++j) den *= BigInt(conn.at(j) - 1);
        if (lhs != Rational(num, den)) vm.holds = false;
        out.push_back(vm);
    }

    if (dx.dim() == 3 || dx.dim() == 4) {
        TheoremVerdict vb;
        vb.name = "gorenstein_dim34_bounds";
        vb.applicable = true;
        MultiplicityReport rep = verify_conjecture(dx, field);
        vb.holds = rep.upper_holds && rep.lower_holds &&
                   rep.purity_at_equality != PurityStatus::violated;
        vb.detail = bound_detail(rep);
        out.push_back(vb);
    }

    {
        // recorded hypothesis flags for the upper-bound classes
        TheoremVerdict vp;
        vp.name = "gorenstein_ubc_hypotheses";
        vp.applicable = true;
        vp.holds = true;
        bool m1Large = c >= 1 && sh.M_at(1) >= d / 2 + 1;
        bool codim4 = (n - d == 4) && d <= 22;
        std::ostringstream os;
        os << "M1>=floor(d/2)+1: " << (m1Large ? "yes" : "no")
           << "; codim 4 with d<=22: " << (codim4 ? "yes" : "no");
        vp.detail = os.str();
        out.push_back(vp);
    }
    return out;
}

TheoremVerdict consistency_euler_ds(const SimplicialComplex& dx) {
    int dim = dx.dim();
    if (dim < 2 || dim > 4)
        fail(errc::wrong_dimension, "Euler/Dehn-Sommerville identities need dim in {2,3,4}");
    TheoremVerdict v;
    v.applicable = true;
    FVector f = dx.f_vector();
    std::ostringstream os;
    if (dim == 2) {
        v.name = "euler_f1_3n_minus_6";
        long long n = f.at(0);
        v.holds = f.at(1) == 3 * n - 6;
        os << "f1=" << f.at(1) << " 3n-6=" << 3 * n - 6;
    } else if (dim == 3) {
        v.name = "euler_f3_f1_minus_n";
        v.holds = f.at(3) == f.at(1) - f.at(0);
        os << "f3=" << f.at(3) << " f1-n=" << f.at(1) - f.at(0);
    } else {
        v.name = "dehn_sommerville_f4";
        HVector h = dx.h_vector();
        long long rhs = 2 * (h.at(0) + h.at(1) + h.at(2));
        v.holds = f.at(4) == rhs;
        os << "f4=" << f.at(4) << " 2(h0+h1+h2)=" << rhs;
    }
    v.detail = os.str();
    return v;
}

SuiteResult run_suite(const SimplicialComplex& dx, FieldSpec field) {
    SuiteResult out;
    out.report = verify_conjecture(dx, field);
    MultiplicityReport& rep = out.report;
    if (rep.degenerate) {
        out.all_hold = true;
        return out;
    }

    if (rep.flags.is_matroid) rep.verdicts.push_back(verify_matroid_theorem(dx, field));
    if (dx.dim() == 1 || dx.dim() == 2) rep.verdicts.push_back(verify_dim12(dx, field));
    if (rep.flags.is_gorenstein_star) {
        auto gs = verify_gorenstein(dx, field);
        rep.verdicts.insert(rep.verdicts.end(), gs.begin(), gs.end());
        if (dx.dim() >= 2 && dx.dim() <= 4) rep.verdicts.push_back(consistency_euler_ds(dx));
    }
    if (rep.flags.is_cm) {
        MainTheoremReport mt = verify_main_theorem(dx, field);
        TheoremVerdict v1{"connectivity_skip_identity", true, mt.holds,
                          "product=" + mt.product_side.to_string()};
        rep.verdicts.push_back(v1);

        QEstimateReport qe = verify_q_estimate(dx, field);
        TheoremVerdict v2{"multiplicity_vs_connectivity", true, qe.holds,
                          "bound=" + qe.bound.to_string()};
        rep.verdicts.push_back(v2);

        SkeletonPropReport sp = verify_skeleton_proposition(dx, field);
        rep.verdicts.push_back({"skeleton_connectivity_steps", true, sp.holds, ""});

        LowerBoundCertificate cert = lower_bound_certificate(dx, field);
        TheoremVerdict v3;
        v3.name = "lower_bound_certificate";
        v3.applicable = cert.hypothesis_holds;
        v3.holds = !cert.hypothesis_holds || cert.inequality_holds;
        v3.detail = "lhs=" + cert.lhs.to_string() + " rhs=" + cert.rhs.to_string();
        rep.verdicts.push_back(v3);

        if (rep.quasi_pure) {
            TheoremVerdict v4;
            v4.name = "quasi_pure_bounds";
            v4.applicable = true;
            v4.holds = rep.upper_holds && rep.lower_holds;
            if ((rep.upper_tight || rep.lower_tight) && !rep.pure) v4.holds = false;
            rep.verdicts.push_back(v4);
        }
    }
    if (rep.quasi_pure && is_almost_cm(dx, field)) {
        TheoremVerdict v5;
        v5.name = "almost_cm_quasi_pure_ubc";
        v5.applicable = true;
        v5.holds = rep.upper_holds;
        rep.verdicts.push_back(v5);
    }

    out.all_hold = rep.all_hold();
    return out;
}

namespace {

bool report_violates(const MultiplicityReport& rep) {
    if (rep.degenerate) return false;
    if (!rep.upper_holds) return true;
    if (rep.lower_applicable && !rep.lower_holds) return true;
    return rep.purity_at_equality == PurityStatus::violated;
}

bool complex_violates(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) return false;
    try {
        return report_violates(verify_conjecture(dx, field));
    } catch (const Error&) {
        return false;
    }
}

} // namespace

SimplicialComplex shrink_while(SimplicialComplex dx,
                               const std::function<bool(const SimplicialComplex&)>& keep) {
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (int v = 0; v < dx.vertex_count() && !reduced; ++v) {
            if (dx.vertex_count() <= 1) break;
            try {
                SimplicialComplex smaller = dx.delete_vertices(VertexSet::single(v));
                if (keep(smaller)) {
                    dx = smaller;
                    reduced = true;
                }
            } catch (const Error&) {
            }
        }
        if (reduced) continue;
        auto fl = dx.facet_labels();
        for (std::size_t i = 0; i < fl.size() && !reduced; ++i) {
            if (fl.size() <= 1) break;
            auto rest = fl;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            SimplicialComplex smaller = SimplicialComplex::from_facets(rest);
            if (keep(smaller)) {
                dx = smaller;
                reduced = true;
            }
        }
    }
    return dx;
}

FuzzLedger fuzz_search(const FamilySpec& family, int trials,
                       const std::vector<int>& characteristics, int threads) {
    FuzzLedger ledger;
    ledger.family = family;
    ledger.trials = trials;
    ledger.characteristics = characteristics;
    const int perTrial = static_cast<int>(characteristics.size());
    ledger.entries.assign(static_cast<std::size_t>(trials) * static_cast<std::size_t>(perTrial),
                          LedgerEntry{});

    auto runTrial = [&](int t) {
        SimplicialComplex dx = family_complex(family, t);
        for (int ci = 0; ci < perTrial; ++ci) {
            FieldSpec field = FieldSpec::of_characteristic(characteristics[static_cast<std::size_t>(ci)]);
            MultiplicityReport rep = verify_conjecture(dx, field);
            LedgerEntry entry;
            entry.trial = t;
            entry.complex_hash = rep.complex_hash;
            entry.n = rep.n;
            entry.dim = rep.dim;
            entry.degenerate = rep.degenerate;
            entry.upper_holds = rep.upper_holds;
            entry.upper_tight = rep.upper_tight;
            entry.lower_applicable = rep.lower_applicable;
            entry.lower_holds = rep.lower_holds;
            entry.lower_tight = rep.lower_tight;
            entry.purity = rep.purity_at_equality;
            entry.violation = report_violates(rep);
            if (entry.violation) {
                SimplicialComplex witness = shrink_while(
                    dx, [field](const SimplicialComplex& c) { return complex_violates(c, field); });
                entry.witness_facets = witness.facet_labels();
            }
            ledger.entries[static_cast<std::size_t>(t) * static_cast<std::size_t>(perTrial) +
                           static_cast<std::size_t>(ci)] = std::move(entry);
        }
    };

    threads = std::max(1, std::min(threads, trials > 0 ? trials : 1));
    if (threads == 1) {
        for (int t = 0; t < trials; ++t) runTrial(t);
    } else {
        // workers own disjoint trial indices and write disjoint slots
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (int t = w; t < trials; t += threads) runTrial(t);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& entry : ledger.entries) {
        if (entry.violation) ++ledger.violations;
        if (!entry.degenerate && entry.upper_tight) ++ledger.upper_tight_count;
        if (!entry.degenerate && entry.lower_applicable && entry.lower_tight)
            ++ledger.lower_tight_count;
    }
    return ledger;
}

} // namespace sr
