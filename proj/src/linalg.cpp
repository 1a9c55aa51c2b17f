#include "sr/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "sr/errors.hpp"

namespace sr {

int rank_gf2(std::vector<std::vector<std::uint64_t>>& rows, int cols) {
    int rank = 0;
    std::size_t nrows = rows.size();
    for (int c = 0; c < cols && rank < static_cast<int>(nrows); ++c) {
        std::size_t word = static_cast<std::size_t>(c) / 64;
        std::uint64_t bit = std::uint64_t(1) << (c % 64);
        std::size_t pivot = nrows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < nrows; ++r) {
            if (rows[r][word] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot == nrows) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        const auto& prow = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            if (rows[r][word] & bit) {
                for (std::size_t w = word; w < prow.size(); ++w) rows[r][w] ^= prow[w];
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) out = out * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(out);
}

} // namespace

int rank_gfp(std::vector<std::uint32_t>& a, int rows, int cols, std::uint32_t p) {
    auto at = [&](int r, int c) -> std::uint32_t& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (at(r, c) % p != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        std::uint64_t inv = mod_pow(at(rank, c), p - 2, p);  // Fermat
        for (int j = c; j < cols; ++j)
            at(rank, j) = static_cast<std::uint32_t>(at(rank, j) * inv % p);
        for (int r = rank + 1; r < rows; ++r) {
            std::uint64_t factor = at(r, c) % p;
            if (!factor) continue;
            for (int j = c; j < cols; ++j) {
                std::uint64_t v = at(r, j) + (p - factor) * at(rank, j) % p;
                at(r, j) = static_cast<std::uint32_t>(v % p);
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

// Integer-preserving elimination over int64. Throws errc::overflow when an
// intermediate value leaves the safe range, in which case the caller
// escalates to the BigInt variant.
int rank_int64(std::vector<long long>& a, int rows, int cols, long long cap) {
    auto at = [&](int r, int c) -> long long& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        // pivot with least |value| keeps growth down; boundary matrices
        // almost always offer a ±1 here
        int pivot = -1;
        long long best = 0;
        for (int r = rank; r < rows; ++r) {
            long long v = at(r, c);
            if (v == 0) continue;
            if (pivot < 0 || std::llabs(v) < best) {
                pivot = r;
                best = std::llabs(v);
                if (best == 1) break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        long long pv = at(rank, c);
        std::vector<long long> updated(static_cast<std::size_t>(cols - c));
        for (int r = rank + 1; r < rows; ++r) {
            long long lead = at(r, c);
            if (lead == 0) continue;
            long long g = std::gcd(std::llabs(lead), std::llabs(pv));
            long long mulRow = pv / g, mulPiv = lead / g;
            long long rowGcd = 0;
            // stage the new row so an overflow leaves the matrix a valid
            // row-equivalent state for the BigInt retry
            for (int j = c; j < cols; ++j) {
                __int128 v = static_cast<__int128>(mulRow) * at(r, j) -
                             static_cast<__int128>(mulPiv) * at(rank, j);
                if (v > cap || v < -cap) throw Error(errc::overflow, "rank_int64 growth");
                long long vv = static_cast<long long>(v);
                updated[static_cast<std::size_t>(j - c)] = vv;
                rowGcd = std::gcd(rowGcd, std::llabs(vv));
            }
            if (rowGcd > 1)
                for (auto& v : updated) v /= rowGcd;
            for (int j = c; j < cols; ++j) at(r, j) = updated[static_cast<std::size_t>(j - c)];
        }
        ++rank;
    }
    return rank;
}

int rank_bigint(const std::vector<long long>& src, int rows, int cols) {
    std::vector<BigInt> a(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) a[i] = BigInt(src[i]);
    auto at = [&](int r, int c) -> BigInt& {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
    };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (!at(r, c).is_zero()) {
                if (pivot < 0 || BigInt::compare(at(r, c).abs(), at(pivot, c).abs()) < 0) pivot = r;
                if (at(pivot, c).abs() == BigInt(1)) break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        BigInt pv = at(rank, c);
        for (int r = rank + 1; r < rows; ++r) {
            BigInt lead = at(r, c);
            if (lead.is_zero()) continue;
            BigInt g = BigInt::gcd(lead, pv);
            BigInt mulRow = pv / g, mulPiv = lead / g;
            BigInt rowGcd(0);
            for (int j = c; j < cols; ++j) {
                at(r, j) = mulRow * at(r, j) - mulPiv * at(rank, j);
                rowGcd = BigInt::gcd(rowGcd, at(r, j));
            }
            if (BigInt::compare(rowGcd, BigInt(1)) > 0)
                for (int j = c; j < cols; ++j) at(r, j) = at(r, j) / rowGcd;
        }
        ++rank;
    }
    return rank;
}

} // namespace

int rank_over_q(std::vector<long long>& a, int rows, int cols, long long growth_cap) {
    if (rows == 0 || cols == 0) return 0;
    long long cap = growth_cap > 0 ? growth_cap : (std::numeric_limits<long long>::max() / 2);
    try {
        return rank_int64(a, rows, cols, cap);
    } catch (const Error& e) {
        if (e.code() != errc::overflow) throw;
        // row operations so far preserved the rank, so resuming from the
        // current state is sound
        return rank_bigint(a, rows, cols);
    }
}

} // namespace sr
