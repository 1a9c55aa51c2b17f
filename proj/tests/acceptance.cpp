// Acceptance suite: one check per shipped guarantee, each printed as a
// single PASS/FAIL line. Exits with the number of failed criteria.
//
// argv[1] (optional, wired through ctest) is the path to the CLI binary,
// used by the ledger-determinism check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "sr/classify.hpp"
#include "sr/cm.hpp"
#include "sr/complex.hpp"
#include "sr/engine.hpp"
#include "sr/errors.hpp"
#include "sr/generators.hpp"
#include "sr/homology.hpp"
#include "sr/io.hpp"
#include "sr/resolution.hpp"
#include "sr/verify.hpp"

using Clock = std::chrono::steady_clock;

namespace {

struct Item {
    std::string name;
    sr::SimplicialComplex complex;
};

struct Failure {
    std::string where;
};

int g_failures = 0;
bool g_cm_pair_ok = true;

void report(int id, const std::string& description, bool pass, double seconds,
            const std::string& note = "") {
    std::printf("criterion %2d %s (%7.2fs) %s%s%s\n", id, pass ? "PASS" : "FAIL", seconds,
                description.c_str(), note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<int> kAllChars{0, 2, 3};

// ---------------------------------------------------------------- zoo ----

std::vector<Item> named_zoo() {
    std::vector<Item> out;
    for (int d = 1; d <= 5; ++d)
        out.push_back({"simplex_boundary(" + std::to_string(d) + ")", sr::simplex_boundary(d)});
    for (int n = 3; n <= 10; ++n)
        out.push_back({"cycle(" + std::to_string(n) + ")", sr::cycle(n)});
    for (int n = 3; n <= 8; ++n)
        out.push_back({"complete_graph(" + std::to_string(n) + ")", sr::complete_graph(n)});
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= n; ++r)
            out.push_back({"uniform(" + std::to_string(r) + "," + std::to_string(n) + ")",
                           sr::uniform_matroid(r, n)});
    for (int d = 1; d <= 4; ++d)
        out.push_back({"cross_polytope(" + std::to_string(d) + ")", sr::cross_polytope_boundary(d)});
    for (int n = 6; n <= 10; ++n)
        out.push_back({"cyclic(4," + std::to_string(n) + ")", sr::cyclic_polytope_boundary(4, n)});
    for (int n = 7; n <= 10; ++n)
        out.push_back({"cyclic(5," + std::to_string(n) + ")", sr::cyclic_polytope_boundary(5, n)});
    out.push_back({"rp2_six_vertex", sr::rp2_six_vertex()});
    return out;
}

std::vector<Item> gorenstein_zoo() {
    std::vector<Item> out;
    for (int d = 1; d <= 4; ++d)
        out.push_back({"cross_polytope(" + std::to_string(d) + ")", sr::cross_polytope_boundary(d)});
    for (int n = 6; n <= 10; ++n)
        out.push_back({"cyclic(4," + std::to_string(n) + ")", sr::cyclic_polytope_boundary(4, n)});
    for (int n = 7; n <= 10; ++n)
        out.push_back({"cyclic(5," + std::to_string(n) + ")", sr::cyclic_polytope_boundary(5, n)});
    return out;
}

// 200 seeded random complexes, kept when CM over the rationals
std::vector<Item> random_cm_zoo() {
    std::vector<Item> out;
    sr::FieldSpec q = sr::FieldSpec::rationals();
    int trial = 0;
    while (out.size() < 200 && trial < 20000) {
        int n = 6 + trial % 5;        // 6..10
        int d = 2 + trial % 2;        // facet size 2 or 3
        int count = 4 + trial % 9;    // 4..12 facets
        std::uint64_t seed = sr::RandomStream::value(20250808, static_cast<std::uint64_t>(trial));
        sr::SimplicialComplex dx = sr::random_pure(n, d, count, seed);
        ++trial;
        if (dx.dim() + 1 >= dx.vertex_count()) continue;  // skip degenerate draws
        if (!sr::is_cm_hochster(dx, q)) continue;
        out.push_back({"random_cm#" + std::to_string(out.size()), dx});
    }
    return out;
}

std::vector<Item> matroid_zoo() {
    std::vector<Item> out;
    for (int n = 2; n <= 8; ++n)
        for (int r = 1; r <= n; ++r)
            out.push_back({"uniform(" + std::to_string(r) + "," + std::to_string(n) + ")",
                           sr::uniform_matroid(r, n)});
    // graphic matroids of every labeled graph on up to 5 vertices
    for (int v = 2; v <= 5; ++v) {
        std::vector<std::pair<int, int>> all;
        for (int a = 1; a <= v; ++a)
            for (int b = a + 1; b <= v; ++b) all.push_back({a, b});
        int m = static_cast<int>(all.size());
        for (std::uint64_t sub = 1; sub < (std::uint64_t(1) << m); ++sub) {
            std::vector<std::pair<int, int>> edges;
            for (int e = 0; e < m; ++e)
                if ((sub >> e) & 1) edges.push_back(all[static_cast<std::size_t>(e)]);
            out.push_back({"graphic(v=" + std::to_string(v) + ",#" + std::to_string(sub) + ")",
                           sr::graphic_matroid(v, edges)});
        }
    }
    // cones and joins of matroid complexes stay matroid complexes
    out.push_back({"cone(U24)", sr::cone(sr::uniform_matroid(2, 4))});
    out.push_back({"cone(U25)", sr::cone(sr::uniform_matroid(2, 5))});
    out.push_back({"cone(U36)", sr::cone(sr::uniform_matroid(3, 6))});
    out.push_back({"join(U12,U24)", sr::join(sr::uniform_matroid(1, 2), sr::uniform_matroid(2, 4))});
    out.push_back({"join(U24,U24)", sr::join(sr::uniform_matroid(2, 4), sr::uniform_matroid(2, 4))});
    return out;
}

std::vector<Item> random_low_dim_zoo() {
    std::vector<Item> out;
    int trial = 0;
    while (out.size() < 500 && trial < 20000) {
        int n = 6 + trial % 5;      // 6..10
        int d = 2 + trial % 2;      // dimension 1 or 2
        int count = 4 + trial % 10; // 4..13 facets
        std::uint64_t seed = sr::RandomStream::value(998877, static_cast<std::uint64_t>(trial));
        sr::SimplicialComplex dx = sr::random_pure(n, d, count, seed);
        ++trial;
        if (dx.dim() + 1 >= dx.vertex_count()) continue;
        if (dx.dim() != d - 1) continue;  // keep the advertised dimension
        out.push_back({"random12#" + std::to_string(out.size()), dx});
    }
    return out;
}

// ---------------------------------------------------------- criteria ----

void criterion_1() {
    auto start = Clock::now();
    std::vector<int> m{2, 3, 4, 6, 7, 11, 13, 16, 17, 18};
    sr::SkipTable warm = sr::skips_from_m_sequence(m, 19, 9);  // warm the code path
    auto timed = Clock::now();
    sr::SkipTable table = sr::skips_from_m_sequence(m, 19, 9);
    double core = seconds_since(timed);
    bool pass = table.s == std::vector<int>{1, 5, 8, 9, 10, 12, 14, 15, 19} &&
                table.q == std::vector<int>{19, 15, 12, 11, 10, 8, 6, 5, 1} &&
                warm.s == table.s && core < 0.001;
    std::ostringstream note;
    note << "core run " << core * 1e6 << "us";
    report(1, "worked n=19 skip table, exact, under 1ms", pass, seconds_since(start), note.str());
}

void criteria_2_3_7(const std::vector<Item>& named, const std::vector<Item>& randomCm) {
    auto start = Clock::now();
    bool skipIdentity = true, qEstimate = true, cmPair = true;
    bool tightC5 = false, tightK4 = false, tightOct = false;
    std::string firstBad;
    int cmRuns = 0;

    std::vector<const Item*> all;
    for (const auto& e : named) all.push_back(&e);
    for (const auto& e : randomCm) all.push_back(&e);

    for (const Item* item : all) {
        for (int ch : kAllChars) {
            sr::FieldSpec field = sr::FieldSpec::of_characteristic(ch);
            bool hochster = sr::is_cm_hochster(item->complex, field);
            bool reisner = sr::is_cm_reisner(item->complex, field);
            if (hochster != reisner) {
                cmPair = false;
                firstBad = item->name + " CM criteria disagree";
            }
            if (!hochster) continue;
            ++cmRuns;
            sr::MainTheoremReport mt = sr::verify_main_theorem(item->complex, field);
            if (!mt.holds) {
                skipIdentity = false;
                if (firstBad.empty()) firstBad = item->name + " ch=" + std::to_string(ch);
            }
            sr::QEstimateReport qe = sr::verify_q_estimate(item->complex, field);
            if (!qe.holds) {
                qEstimate = false;
                if (firstBad.empty()) firstBad = item->name + " q-estimate";
            }
            if (ch == 0 && qe.tight) {
                if (item->name == "cycle(5)") tightC5 = true;
                if (item->name == "complete_graph(4)" || item->name == "uniform(2,4)")
                    tightK4 = true;
                if (item->name == "cross_polytope(3)") tightOct = true;
            }
        }
    }
    double elapsed = seconds_since(start);
    report(2, "minimal-shift skips match the connectivity sequence on the CM zoo (chars 0,2,3)",
           skipIdentity && elapsed < 600.0, elapsed,
           std::to_string(cmRuns) + " CM runs" + (firstBad.empty() ? "" : "; first: " + firstBad));
    report(3, "f_top >= (prod q_i)/d! on the CM zoo, tight on C5, K4, octahedron",
           qEstimate && tightC5 && tightK4 && tightOct, 0.0);
    // criterion 7 is finished later once the remaining suites are built
    g_cm_pair_ok = g_cm_pair_ok && cmPair;
}

void criterion_4(const std::vector<Item>& matroids) {
    auto start = Clock::now();
    bool pass = true;
    std::string firstBad;
    for (const auto& item : matroids) {
        if (!sr::is_matroid(item.complex).is_matroid) {
            pass = false;
            firstBad = item.name + " not recognized as matroid";
            break;
        }
        for (int ch : {0, 2}) {
            sr::FieldSpec field = sr::FieldSpec::of_characteristic(ch);
            sr::MultiplicityReport rep = sr::verify_conjecture(item.complex, field);
            if (rep.degenerate) continue;
            bool ok = rep.upper_holds && rep.lower_holds && rep.flags.is_cm;
            if (rep.upper_tight || rep.lower_tight) ok = ok && rep.pure;
            if (!ok) {
                pass = false;
                if (firstBad.empty()) firstBad = item.name + " ch=" + std::to_string(ch);
            }
        }
    }
    report(4, "matroid bounds (uniform, all graphs on <=5 vertices, cones/joins); equality => pure",
           pass, seconds_since(start), firstBad);
}

void criterion_5(const std::vector<Item>& randoms) {
    auto start = Clock::now();
    bool pass = true;
    std::string firstBad;
    for (const auto& item : randoms) {
        for (int ch : {0, 2}) {
            sr::FieldSpec field = sr::FieldSpec::of_characteristic(ch);
            sr::MultiplicityReport rep = sr::verify_conjecture(item.complex, field);
            bool ok = rep.upper_holds;
            if (rep.flags.is_cm) ok = ok && rep.lower_holds;
            if (item.complex.dim() == 1) ok = ok && rep.quasi_pure;
            if (!ok) {
                pass = false;
                if (firstBad.empty()) firstBad = item.name + " ch=" + std::to_string(ch);
            }
        }
    }
    report(5, "500 random low-dimensional complexes: UBC, LBC on the CM part, graphs quasi-pure",
           pass, seconds_since(start), firstBad);
}

void criterion_6(const std::vector<Item>& gorenstein) {
    auto start = Clock::now();
    bool pass = true;
    std::string firstBad;
    for (const auto& item : gorenstein) {
        for (int ch : {0, 2}) {
            sr::FieldSpec field = sr::FieldSpec::of_characteristic(ch);
            try {
                auto verdicts = sr::verify_gorenstein(item.complex, field);
                for (const auto& v : verdicts)
                    if (v.applicable && !v.holds) {
                        pass = false;
                        if (firstBad.empty())
                            firstBad = item.name + " " + v.name + " ch=" + std::to_string(ch);
                    }
            } catch (const sr::Error& e) {
                pass = false;
                if (firstBad.empty()) firstBad = item.name + " " + e.what();
            }
        }
        if (item.complex.dim() >= 2 && item.complex.dim() <= 4) {
            auto v = sr::consistency_euler_ds(item.complex);
            if (!v.holds) {
                pass = false;
                if (firstBad.empty()) firstBad = item.name + " " + v.name;
            }
        }
    }
    report(6, "Gorenstein* suite: self-duality, M-skips, q endpoints, dim-3/4 bounds, Euler/DS",
           pass, seconds_since(start), firstBad);
}

void criterion_7_extra(const std::vector<Item>& matroids, const std::vector<Item>& randoms,
                       bool namedOk) {
    auto start = Clock::now();
    bool pass = namedOk;
    std::string firstBad;
    auto checkPair = [&](const Item& item) {
        if (item.complex.dim() < 0) return;
        for (int ch : kAllChars) {
            sr::FieldSpec field = sr::FieldSpec::of_characteristic(ch);
            if (sr::is_cm_hochster(item.complex, field) != sr::is_cm_reisner(item.complex, field)) {
                pass = false;
                if (firstBad.empty()) firstBad = item.name + " ch=" + std::to_string(ch);
            }
        }
    };
    for (const auto& item : matroids) checkPair(item);
    for (const auto& item : randoms) checkPair(item);
    report(7, "Reisner and Hochster CM criteria agree on every suite complex (chars 0,2,3)", pass,
           seconds_since(start), firstBad);
}

void criterion_8(const std::vector<Item>& named, const std::vector<Item>& matroids) {
    auto start = Clock::now();
    bool pass = true;
    std::string firstBad;
    auto checkAgree = [&](const Item& item) {
        if (item.complex.dim() < 0) return;
        if (sr::is_matroid(item.complex).is_matroid != sr::circuit_axiom_check(item.complex)) {
            pass = false;
            if (firstBad.empty()) firstBad = item.name;
        }
    };
    for (const auto& item : named) checkAgree(item);
    for (const auto& item : matroids) checkAgree(item);

    auto c5 = sr::is_matroid(sr::cycle(5));
    bool c5ok = !c5.is_matroid && c5.witness.has_value() && c5.witness->mask() == 0b01011;
    if (!c5ok) {
        pass = false;
        firstBad = "C5 witness";
    }
    if (!sr::is_matroid(sr::uniform_matroid(2, 4)).is_matroid) {
        pass = false;
        firstBad = "U24 rejected";
    }
    report(8, "matroid test == circuit axiom on the zoo; C5 rejected with witness {1,2,4}", pass,
           seconds_since(start), firstBad);
}

void criteria_9_10(const std::vector<Item>& named, const std::vector<Item>& randomCm) {
    auto start = Clock::now();
    bool syzygy = true, kpoly = true;
    std::string firstBad9, firstBad10;
    std::vector<const Item*> all;
    for (const auto& e : named) all.push_back(&e);
    for (const auto& e : randomCm) all.push_back(&e);
    for (const Item* item : all) {
        auto nonfaces = sr::minimal_nonfaces(item->complex);
        std::map<int, long long> bySize;
        for (auto s : nonfaces) ++bySize[s.count()];
        for (int ch : kAllChars) {
            sr::FieldSpec field = sr::FieldSpec::of_characteristic(ch);
            sr::BettiTable t = sr::hochster_betti_table(item->complex, field);
            if (t.degenerate) {
                if (!nonfaces.empty()) {
                    syzygy = false;
                    firstBad9 = item->name;
                }
                continue;
            }
            for (int j = 1; j <= t.n; ++j) {
                long long expected = bySize.count(j) ? bySize[j] : 0;
                if (t.at(1, j) != expected) {
                    syzygy = false;
                    if (firstBad9.empty()) firstBad9 = item->name;
                }
            }
            if (!sr::k_polynomial_check(item->complex, t)) {
                kpoly = false;
                if (firstBad10.empty()) firstBad10 = item->name + " ch=" + std::to_string(ch);
            }
        }
    }
    double elapsed = seconds_since(start);
    report(9, "first syzygies count the minimal non-faces across the zoo", syzygy, elapsed,
           firstBad9);
    report(10, "K-polynomial identity across the zoo (chars 0,2,3)", kpoly, 0.0, firstBad10);
}

void criterion_11() {
    auto start = Clock::now();
    auto rp2 = sr::rp2_six_vertex();
    auto q = sr::FieldSpec::rationals();
    auto f2 = sr::FieldSpec::of_characteristic(2);
    auto f3 = sr::FieldSpec::of_characteristic(3);
    bool pass = sr::is_cm_hochster(rp2, q) && sr::is_cm_hochster(rp2, f3) &&
                !sr::is_cm_hochster(rp2, f2);
    auto tq = sr::hochster_betti_table(rp2, q);
    auto t2 = sr::hochster_betti_table(rp2, f2);
    pass = pass && tq.beta != t2.beta;
    report(11, "RP2_6: CM over Q and F3, not over F2; Betti tables differ", pass,
           seconds_since(start));
}

void criterion_12() {
    auto start = Clock::now();
    auto q = sr::FieldSpec::rationals();
    bool pass = true;
    std::string firstBad;

    auto c5 = sr::verify_conjecture(sr::cycle(5), q);
    if (!(c5.e == 5 && c5.upper_tight && c5.lower_tight && c5.pure)) {
        pass = false;
        firstBad = "C5";
    }
    auto oct = sr::verify_conjecture(sr::cross_polytope_boundary(3), q);
    if (!(oct.e == 8 && oct.upper_tight && oct.lower_tight && oct.pure)) {
        pass = false;
        firstBad = "octahedron";
    }
    for (int n = 3; n <= 8; ++n) {
        auto kn = sr::verify_conjecture(sr::complete_graph(n), q);
        if (!(kn.e == static_cast<long long>(n) * (n - 1) / 2 && kn.upper_tight)) {
            pass = false;
            if (firstBad.empty()) firstBad = "K" + std::to_string(n);
        }
    }
    report(12, "worked equalities: C5 and octahedron tight and pure; K_n meets the upper bound",
           pass, seconds_since(start), firstBad);
}

void criterion_13(const char* cliPath) {
    auto start = Clock::now();
    bool pass = true;
    std::string note;

    // (a) byte-identical search ledgers through the CLI
    if (cliPath == nullptr) {
        pass = false;
        note = "CLI path not supplied";
    } else {
        std::string base = "sr_acceptance_ledger_";
        std::string fileA = base + "a.jsonl", fileB = base + "b.jsonl";
        std::string cmd = std::string(cliPath) +
                          " search random_pure n=8 d=3 count=6 --trials 30 --seed 1 --field 2 --out ";
        int rcA = std::system((cmd + fileA).c_str());
        int rcB = std::system((cmd + fileB).c_str());
        auto slurp = [](const std::string& p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        };
        std::string a = slurp(fileA), b = slurp(fileB);
        if (rcA != 0 || rcB != 0 || a.empty() || a != b) {
            pass = false;
            note = "ledger runs differ or failed";
        } else {
            note = "ledgers identical (" + std::to_string(a.size()) + " bytes)";
        }
        std::remove(fileA.c_str());
        std::remove(fileB.c_str());
    }

    // (b) full table at n = 12 on one core
    auto t12 = Clock::now();
    auto dx12 = sr::cyclic_polytope_boundary(4, 12);
    sr::BettiTable table12 = sr::hochster_betti_table(dx12, sr::FieldSpec::rationals(), 1);
    double s12 = seconds_since(t12);
    if (s12 >= 60.0 || table12.beta.empty()) pass = false;

    // (c) full table at n = 16 with the parallel fan-out, on a dense
    // 4-dimensional sphere rather than a sparse random complex
    auto t16 = Clock::now();
    auto dx16 = sr::cyclic_polytope_boundary(5, 16);
    int threads = std::max(1u, std::thread::hardware_concurrency());
    sr::BettiTable table16 =
        sr::hochster_betti_table(dx16, sr::FieldSpec::of_characteristic(2), threads);
    double s16 = seconds_since(t16);
    if (s16 >= 900.0 || table16.beta.empty()) pass = false;

    std::ostringstream os;
    os << note << "; n=12 table " << s12 << "s, n=16 table " << s16 << "s (" << threads
       << " threads)";
    report(13, "deterministic search ledgers; n=12 table < 60s, n=16 table < 15min", pass,
           seconds_since(start), os.str());
}

} // namespace

int main(int argc, char** argv) {
    const char* cliPath = argc > 1 ? argv[1] : nullptr;
    std::printf("== acceptance suite ==\n");
    auto total = Clock::now();

    criterion_1();

    auto named = named_zoo();
    auto randomCm = random_cm_zoo();
    std::printf("   (zoo: %zu named complexes, %zu random CM samples)\n", named.size(),
                randomCm.size());
    criteria_2_3_7(named, randomCm);

    auto matroids = matroid_zoo();
    criterion_4(matroids);

    auto randoms = random_low_dim_zoo();
    criterion_5(randoms);

    criterion_6(gorenstein_zoo());
    criterion_7_extra(matroids, randoms, g_cm_pair_ok);
    criterion_8(named, matroids);
    criteria_9_10(named, randomCm);
    criterion_11();
    criterion_12();
    criterion_13(cliPath);

    std::printf("== %d criterion failures in %.1fs ==\n", g_failures, seconds_since(total));
    return g_failures;
}
