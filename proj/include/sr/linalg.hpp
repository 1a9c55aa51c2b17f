#pragma once

#include <cstdint>
#include <vector>

#include "sr/bigint.hpp"

namespace sr {

/// Rank over GF(2). Rows are packed bit vectors of `cols` bits; the
/// row storage is consumed.
int rank_gf2(std::vector<std::vector<std::uint64_t>>& rows, int cols);

/// Rank over GF(p), p an odd prime (p = 2 has the packed path above).
/// Dense row-major entries already reduced into [0, p). Consumed.
int rank_gfp(std::vector<std::uint32_t>& a, int rows, int cols, std::uint32_t p);

/// Exact rank over the rationals of an integer matrix. Runs an
/// integer-preserving elimination (cross-multiply rows, then divide each
/// row by its gcd) entirely in int64 with overflow checks, and redoes the
/// computation with big integers in the rare case growth exceeds 64 bits.
/// `growth_cap` bounds |entry| on the fast path and exists so tests can
/// force the escalation; leave it at the default otherwise.
int rank_over_q(std::vector<long long>& a, int rows, int cols,
                long long growth_cap = 0);

} // namespace sr
