#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sr/errors.hpp"

namespace sr {

/// Subset of the ambient vertices 0..n-1, packed into one machine word.
/// The ambient count is capped at 63 so a set always fits a uint64_t.
class VertexSet {
public:
    static constexpr int max_vertices = 63;

    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t mask) : mask_(mask) {}

    static VertexSet single(int v) { return VertexSet(std::uint64_t(1) << v); }

    /// {0, 1, ..., n-1}
    static VertexSet full(int n) {
        if (n < 0 || n > max_vertices)
            fail(errc::parameter_out_of_range, "vertex count must be in [0, 63]");
        return VertexSet(n == 0 ? 0 : (std::uint64_t(1) << n) - 1);
    }

    std::uint64_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int count() const { return std::popcount(mask_); }

    bool contains(int v) const { return (mask_ >> v) & 1; }
    bool subset_of(VertexSet o) const { return (mask_ & ~o.mask_) == 0; }
    bool intersects(VertexSet o) const { return (mask_ & o.mask_) != 0; }

    VertexSet with(int v) const { return VertexSet(mask_ | (std::uint64_t(1) << v)); }
    VertexSet without(int v) const { return VertexSet(mask_ & ~(std::uint64_t(1) << v)); }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.mask_ == b.mask_; }
    friend bool operator!=(VertexSet a, VertexSet b) { return a.mask_ != b.mask_; }

    int lowest() const { return std::countr_zero(mask_); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t m = mask_; m;) {
            int v = std::countr_zero(m);
            out.push_back(v);
            m &= m - 1;
        }
        return out;
    }

    struct Iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        Iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const Iterator& o) const { return rest != o.rest; }
    };
    Iterator begin() const { return {mask_}; }
    Iterator end() const { return {0}; }

private:
    std::uint64_t mask_ = 0;
};

/// Canonical total order on faces: by cardinality, then by mask value.
inline bool canonical_less(VertexSet a, VertexSet b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.mask() < b.mask();
}

/// Visits the k-element subsets of `ground` in ascending mask order
/// (Gosper's hack over positions, then mapped onto the ground vertices,
/// which preserves the order because the map is monotone).
/// Returns false from `fn` to stop early; the function then returns false.
template <typename Fn>
bool for_each_subset_of_size(VertexSet ground, int k, Fn&& fn) {
    std::vector<int> verts = ground.to_vector();
    int n = static_cast<int>(verts.size());
    if (k < 0 || k > n) return true;
    if (k == 0) return fn(VertexSet());
    std::uint64_t sub = (std::uint64_t(1) << k) - 1;
    const std::uint64_t limit = std::uint64_t(1) << n;
    while (sub < limit) {
        std::uint64_t m = 0;
        for (std::uint64_t s = sub; s;) {
            int i = std::countr_zero(s);
            m |= std::uint64_t(1) << verts[static_cast<std::size_t>(i)];
            s &= s - 1;
        }
        if (!fn(VertexSet(m))) return false;
        std::uint64_t lo = sub & (~sub + 1);
        std::uint64_t left = sub + lo;
        sub = left | (((sub ^ left) / lo) >> 2);
    }
    return true;
}

} // namespace sr
