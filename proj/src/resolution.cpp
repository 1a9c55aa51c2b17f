#include "sr/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "sr/errors.hpp"

namespace sr {

namespace {

BettiTable table_shell(const SimplicialComplex& dx, FieldSpec field) {
    BettiTable t;
    t.n = dx.vertex_count();
    t.d = dx.dim() + 1;
    t.c = t.n - t.d;
    t.field = field;
    return t;
}

void validate_table(const BettiTable& t) {
    for (const auto& [key, val] : t.beta) {
        auto [i, j] = key;
        if (val <= 0 || i < 1 || j < i + 1 || j > t.n)
            fail(errc::internal, "Betti table entry outside i+1 <= j <= n");
    }
    // minimality: no vanishing row below pd, and pd >= codimension
    for (int i = 1; i <= t.pd; ++i) {
        bool any = false;
        for (const auto& [key, val] : t.beta)
            if (key.first == i && val > 0) any = true;
        if (!any) fail(errc::internal, "gap in Betti table rows");
    }
    if (!t.degenerate && t.pd < t.c) fail(errc::internal, "projective dimension below codimension");
}

} // namespace

BettiTable hochster_betti_table(SubsetHomologyEngine& engine, int threads) {
    const SimplicialComplex& dx = engine.complex();
    BettiTable t = table_shell(dx, engine.field());
    if (dx.dim() < 0) fail(errc::degenerate_complex, "Betti table of {∅}");
    if (t.c == 0) {
        t.degenerate = true;  // full simplex, zero ideal
        return t;
    }

    const int n = t.n;
    const std::uint64_t total = std::uint64_t(1) << n;

    // grid[i][j] accumulation; i, j <= n
    std::vector<long long> grid(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
    auto accumulate = [n](std::vector<long long>& g, const SubsetHomologyEngine::Profile& prof,
                          std::uint64_t w) {
        int j = std::popcount(w);
        int kmax = prof.induced_dim();
        for (int p = 0; p <= kmax; ++p) {
            long long b = prof.betti(p);
            if (b == 0) continue;
            int i = j - p - 1;
            if (i >= 1)
                g[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) +
                  static_cast<std::size_t>(j)] += b;
        }
    };

    if (engine.has_flat_cache()) {
        engine.fill_all(threads);
        for (std::uint64_t w = 1; w < total; ++w) accumulate(grid, engine.profile(w), w);
    } else {
        // above the memo range: constant-memory scan, workers keep local
        // grids whose integer sums merge independently of scheduling
        threads = std::max(1, threads);
        std::vector<std::vector<long long>> partial(
            static_cast<std::size_t>(threads),
            std::vector<long long>(grid.size(), 0));
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + static_cast<std::uint64_t>(threads) - 1) /
                              static_cast<std::uint64_t>(threads);
        for (int ti = 0; ti < threads; ++ti) {
            std::uint64_t lo = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(ti) * chunk);
            std::uint64_t hi = std::min(total, (static_cast<std::uint64_t>(ti) + 1) * chunk);
            if (lo >= hi) continue;
            pool.emplace_back([&, ti, lo, hi] {
                std::vector<std::int32_t> buf(static_cast<std::size_t>(engine.stride()));
                for (std::uint64_t w = lo; w < hi; ++w) {
                    engine.profile_uncached(w, buf.data());
                    accumulate(partial[static_cast<std::size_t>(ti)],
                               SubsetHomologyEngine::Profile{buf.data(), engine.dim()}, w);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : partial)
            for (std::size_t i = 0; i < grid.size(); ++i) grid[i] += part[i];
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            long long v = grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) +
                               static_cast<std::size_t>(j)];
            if (v) {
                t.beta[{i, j}] = v;
                t.pd = std::max(t.pd, i);
            }
        }
    validate_table(t);
    return t;
}

BettiTable hochster_betti_table(const SimplicialComplex& dx, FieldSpec field, int threads) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "Betti table of {∅}");
    SubsetHomologyEngine engine(dx, field);
    return hochster_betti_table(engine, threads);
}

ShiftSequences shifts(const BettiTable& t) {
    if (t.degenerate) fail(errc::degenerate_complex, "shifts of a degenerate table");
    ShiftSequences s;
    s.m.assign(static_cast<std::size_t>(t.pd), 0);
    s.M.assign(static_cast<std::size_t>(t.pd), 0);
    for (const auto& [key, val] : t.beta) {
        auto [i, j] = key;
        auto idx = static_cast<std::size_t>(i - 1);
        if (s.m[idx] == 0 || j < s.m[idx]) s.m[idx] = j;
        if (j > s.M[idx]) s.M[idx] = j;
    }
    // sanity required of any complex: 2 <= m_1 < ... < m_c <= n
    for (int i = 1; i <= t.c; ++i) {
        int prev = i == 1 ? 1 : s.m_at(i - 1);
        if (s.m_at(i) <= prev || s.m_at(i) > t.n || (i == 1 && s.m_at(1) < 2))
            fail(errc::internal, "minimal shifts not strictly increasing in the first c rows");
    }
    return s;
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& dx) {
    std::vector<VertexSet> out;
    int d = dx.dim() + 1;
    VertexSet ground = VertexSet::full(dx.vertex_count());
    // a minimal non-face has every proper subset a face, so its size is at most d + 1
    for (int size = 1; size <= std::min(d + 1, dx.vertex_count()); ++size) {
        for_each_subset_of_size(ground, size, [&](VertexSet s) {
            if (dx.is_face(s)) return true;
            bool boundary_faces = true;
            for (int v : s) {
                if (!dx.is_face(s.without(v))) {
                    boundary_faces = false;
                    break;
                }
            }
            if (boundary_faces) out.push_back(s);
            return true;
        });
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool is_pure_resolution(const BettiTable& t) {
    ShiftSequences s = shifts(t);
    for (int i = 1; i <= t.pd; ++i)
        if (s.m_at(i) != s.M_at(i)) return false;
    return true;
}

bool is_quasi_pure(const BettiTable& t) {
    ShiftSequences s = shifts(t);
    for (int i = 2; i <= t.pd; ++i)
        if (s.m_at(i) < s.M_at(i - 1)) return false;
    return true;
}

long long multiplicity(const SimplicialComplex& dx) {
    int top = dx.dim();
    long long count = 0;
    for (VertexSet f : dx.facets())
        if (f.count() - 1 == top) ++count;
    return count;
}

BoundPair multiplicity_bounds(const BettiTable& t) {
    if (t.degenerate) return {Rational(1), Rational(1)};  // empty products over c = 0
    ShiftSequences s = shifts(t);
    BigInt lowerNum(1), upperNum(1);
    for (int i = 1; i <= t.c; ++i) {
        lowerNum *= BigInt(s.m_at(i));
        upperNum *= BigInt(s.M_at(i));
    }
    BigInt cf = BigInt::factorial(t.c);
    return {Rational(lowerNum, cf), Rational(upperNum, cf)};
}

bool k_polynomial_check(const SimplicialComplex& dx, const BettiTable& t) {
    int n = dx.vertex_count();
    std::vector<long long> lhs(static_cast<std::size_t>(n + 1), 0);
    lhs[0] = 1;
    for (const auto& [key, val] : t.beta) {
        auto [i, j] = key;
        lhs[static_cast<std::size_t>(j)] += (i % 2 == 0) ? val : -val;
    }
    // rhs = (1 - t)^c * h(t)
    HVector h = dx.h_vector();
    int c = t.c;
    std::vector<long long> rhs(static_cast<std::size_t>(n + 1), 0);
    for (int k = 0; k <= c; ++k) {
        long long binom = BigInt::binomial(c, k).to_int64();
        long long coef = (k % 2 == 0) ? binom : -binom;
        for (int i = 0; i <= h.d(); ++i) {
            if (k + i > n) fail(errc::internal, "K-polynomial degree exceeds n");
            rhs[static_cast<std::size_t>(k + i)] += coef * h.at(i);
        }
    }
    return lhs == rhs;
}

bool k_polynomial_check(const SimplicialComplex& dx, FieldSpec field) {
    BettiTable t = hochster_betti_table(dx, field);
    return k_polynomial_check(dx, t);
}

std::string betti_table_text(const BettiTable& t) {
    std::ostringstream os;
    if (t.degenerate) {
        os << "(zero ideal: empty Betti table)\n";
        return os.str();
    }
    std::vector<int> cols;
    for (const auto& [key, val] : t.beta)
        if (std::find(cols.begin(), cols.end(), key.second) == cols.end())
            cols.push_back(key.second);
    std::sort(cols.begin(), cols.end());
    os << "      ";
    for (int j : cols) {
        os.width(8);
        os << ("j=" + std::to_string(j));
    }
    os << "\n";
    for (int i = 1; i <= t.pd; ++i) {
        os << "i=";
        os.width(4);
        std::string row = std::to_string(i);
        os << row;
        for (int j : cols) {
            os.width(8);
            long long v = t.at(i, j);
            if (v)
                os << v;
            else
                os << ".";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace sr
