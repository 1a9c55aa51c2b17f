#include "sr/engine.hpp"

#include <algorithm>
#include <thread>

#include "sr/errors.hpp"
#include "sr/linalg.hpp"

namespace sr {

SubsetHomologyEngine::SubsetHomologyEngine(const SimplicialComplex& dx, FieldSpec field,
                                           int flat_cache_max_n)
    : dx_(dx), field_(field), n_(dx.vertex_count()), dim_(dx.dim()) {
    if (dim_ < 0) fail(errc::degenerate_complex, "subset homology of {∅}");
    stride_ = 2 * (dim_ + 1);
    faces_ = dx_.faces_by_dim();
    use_flat_ = n_ <= flat_cache_max_n;
    if (use_flat_)
        flat_.assign((std::size_t(1) << n_) * static_cast<std::size_t>(stride_), 0);
}

int SubsetHomologyEngine::rank_of_boundary(const std::vector<std::uint64_t>& rowFaces,
                                           const std::vector<std::uint64_t>& colFaces) const {
    int rows = static_cast<int>(colFaces.size());  // one row per k-face (transposed)
    int cols = static_cast<int>(rowFaces.size());
    if (rows == 0 || cols == 0) return 0;

    // Transposing makes each built row the boundary of one k-face; rank is
    // unaffected. Row indices of the (k-1)-faces come from binary search in
    // the sorted filtered list.
    if (field_.characteristic == 2) {
        int words = (cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> mat(
            static_cast<std::size_t>(rows),
            std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
        for (int r = 0; r < rows; ++r) {
            std::uint64_t face = colFaces[static_cast<std::size_t>(r)];
            for (std::uint64_t rest = face; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t sub = face & ~(std::uint64_t(1) << v);
                auto it = std::lower_bound(rowFaces.begin(), rowFaces.end(), sub);
                int c = static_cast<int>(it - rowFaces.begin());
                mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) / 64] ^=
                    std::uint64_t(1) << (c % 64);
            }
        }
        return rank_gf2(mat, cols);
    }

    if (field_.is_rationals()) {
        std::vector<long long> mat(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
        for (int r = 0; r < rows; ++r) {
            std::uint64_t face = colFaces[static_cast<std::size_t>(r)];
            int i = 0;
            for (std::uint64_t rest = face; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t sub = face & ~(std::uint64_t(1) << v);
                auto it = std::lower_bound(rowFaces.begin(), rowFaces.end(), sub);
                int c = static_cast<int>(it - rowFaces.begin());
                mat[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                    static_cast<std::size_t>(c)] = (i % 2 == 0) ? 1 : -1;
                ++i;
            }
        }
        return rank_over_q(mat, rows, cols);
    }

    std::uint32_t p = static_cast<std::uint32_t>(field_.characteristic);
    std::vector<std::uint32_t> mat(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
    for (int r = 0; r < rows; ++r) {
        std::uint64_t face = colFaces[static_cast<std::size_t>(r)];
        int i = 0;
        for (std::uint64_t rest = face; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t sub = face & ~(std::uint64_t(1) << v);
            auto it = std::lower_bound(rowFaces.begin(), rowFaces.end(), sub);
            int c = static_cast<int>(it - rowFaces.begin());
            mat[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                static_cast<std::size_t>(c)] = (i % 2 == 0) ? 1 : p - 1;
            ++i;
        }
    }
    return rank_gfp(mat, rows, cols, p);
}

void SubsetHomologyEngine::compute_profile(std::uint64_t mask, std::int32_t* out) const {
    // filter the global face lists down to faces inside the subset
    std::vector<std::vector<std::uint64_t>> sub(static_cast<std::size_t>(dim_ + 1));
    for (int k = 0; k <= dim_; ++k) {
        const auto& lvl = faces_[static_cast<std::size_t>(k)];
        auto& dst = sub[static_cast<std::size_t>(k)];
        for (std::uint64_t f : lvl)
            if ((f & ~mask) == 0) dst.push_back(f);
        if (dst.empty()) break;  // downward closed: nothing above either
    }
    for (int k = 0; k <= dim_; ++k)
        out[k] = static_cast<std::int32_t>(sub[static_cast<std::size_t>(k)].size());
    out[dim_ + 1] = out[0] > 0 ? 1 : 0;  // rank ∂_0 (augmentation)
    for (int k = 1; k <= dim_; ++k) {
        if (sub[static_cast<std::size_t>(k)].empty()) {
            out[dim_ + 1 + k] = 0;
            continue;
        }
        out[dim_ + 1 + k] = static_cast<std::int32_t>(
            rank_of_boundary(sub[static_cast<std::size_t>(k - 1)], sub[static_cast<std::size_t>(k)]));
    }
}

SubsetHomologyEngine::Profile SubsetHomologyEngine::profile(std::uint64_t mask) {
    if (mask == 0) fail(errc::empty_selection, "profile of the empty subset");
    if (use_flat_) {
        std::int32_t* slot = flat_.data() + mask * static_cast<std::uint64_t>(stride_);
        if (slot[0] == 0) compute_profile(mask, slot);  // f_0 >= 1 for any nonempty subset
        return Profile{slot, dim_};
    }
    auto it = sparse_.find(mask);
    if (it == sparse_.end()) {
        std::vector<std::int32_t> buf(static_cast<std::size_t>(stride_));
        compute_profile(mask, buf.data());
        it = sparse_.emplace(mask, std::move(buf)).first;
    }
    return Profile{it->second.data(), dim_};
}

void SubsetHomologyEngine::fill_all(int threads) {
    if (!use_flat_) return;  // on-demand only beyond the flat-cache range
    const std::uint64_t total = std::uint64_t(1) << n_;
    threads = std::max(1, threads);
    if (threads == 1) {
        for (std::uint64_t m = 1; m < total; ++m)
            profile(m);
        return;
    }
    // disjoint mask ranges write disjoint cache slots, so no locking
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + static_cast<std::uint64_t>(threads) - 1) /
                          static_cast<std::uint64_t>(threads);
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(t) * chunk);
        std::uint64_t hi = std::min(total, (static_cast<std::uint64_t>(t) + 1) * chunk);
        if (lo >= hi) continue;
        pool.emplace_back([this, lo, hi] {
            for (std::uint64_t m = lo; m < hi; ++m) {
                std::int32_t* slot = flat_.data() + m * static_cast<std::uint64_t>(stride_);
                compute_profile(m, slot);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace sr
