#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sr/complex.hpp"
#include "sr/field.hpp"

namespace sr {

/// Homology of induced subcomplexes Δ_W for all W ⊆ [n], served from one
/// shared face enumeration of Δ.
///
/// Per subset the engine stores the face counts f_k(Δ_W) and boundary
/// ranks rank ∂_k(Δ_W); everything downstream (reduced Betti numbers of
/// Δ_W, of skeleta of Δ_W, dimensions, Hochster sums, q-CM scans) is
/// arithmetic on that profile. Results are memoized per (W, field):
/// a flat table when n is small enough, a hash map otherwise.
///
/// Instances are safe to share across threads after fill_all(); concurrent
/// on-demand queries are not synchronized.
class SubsetHomologyEngine {
public:
    /// `flat_cache_max_n` bounds the vertex count up to which the memo is a
    /// flat 2^n table; above it a hash map serves sparse on-demand queries
    /// and full-table scans run uncached. The default suits analyses at the
    /// practical cap; tests lower it to exercise the uncached path.
    SubsetHomologyEngine(const SimplicialComplex& dx, FieldSpec field, int flat_cache_max_n = 18);

    const SimplicialComplex& complex() const { return dx_; }
    FieldSpec field() const { return field_; }
    int n() const { return n_; }
    int dim() const { return dim_; }

    /// f_k(Δ_W) followed by rank ∂_k(Δ_W), k = 0..dim.
    struct Profile {
        const std::int32_t* data;
        int dim;
        long long f(int k) const {
            return (k < 0 || k > dim) ? 0 : data[k];
        }
        long long boundary_rank(int k) const {
            return (k < 0 || k > dim) ? 0 : data[dim + 1 + k];
        }
        int induced_dim() const {
            for (int k = dim; k >= 0; --k)
                if (data[k] > 0) return k;
            return -1;
        }
        /// Reduced Betti number b_p(Δ_W). W must be nonempty.
        long long betti(int p) const {
            if (p < 0 || p > dim) return 0;
            return f(p) - boundary_rank(p) - boundary_rank(p + 1);
        }
        /// Reduced Betti number of the j-skeleton, b_p(Skel_j(Δ_W)).
        long long betti_skel(int p, int j) const {
            if (p > j) return 0;
            if (p == j) return f(j) - boundary_rank(j);
            return betti(p);
        }
    };

    /// Profile for the induced subcomplex on `mask`; mask must be nonzero.
    Profile profile(std::uint64_t mask);

    /// One-shot profile into caller storage (stride() int32), bypassing the
    /// memo. Lets full-table scans above the flat-cache range run in
    /// constant memory, and is safe to call concurrently.
    void profile_uncached(std::uint64_t mask, std::int32_t* out) const {
        compute_profile(mask, out);
    }
    int stride() const { return stride_; }
    bool has_flat_cache() const { return use_flat_; }

    /// Precompute every subset's profile. With threads > 1 the mask space
    /// is partitioned; results are identical to the sequential fill.
    void fill_all(int threads = 1);

private:
    void compute_profile(std::uint64_t mask, std::int32_t* out) const;
    int rank_of_boundary(const std::vector<std::uint64_t>& rowFaces,
                         const std::vector<std::uint64_t>& colFaces) const;

    SimplicialComplex dx_;
    FieldSpec field_;
    int n_;
    int dim_;
    int stride_;  // 2 * (dim + 1) int32 per subset
    std::vector<std::vector<std::uint64_t>> faces_;  // by dimension, sorted masks

    bool use_flat_;
    std::vector<std::int32_t> flat_;        // stride-packed; f_0 == 0 means not yet computed
    std::unordered_map<std::uint64_t, std::vector<std::int32_t>> sparse_;
};

} // namespace sr
