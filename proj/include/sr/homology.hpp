#pragma once

#include <vector>

#include "sr/complex.hpp"
#include "sr/field.hpp"

namespace sr {

/// Dense matrix over a chosen field. Entries are stored as integers,
/// reduced into [0, p) for positive characteristic.
struct FieldMatrix {
    FieldSpec field;
    int rows = 0;
    int cols = 0;
    std::vector<long long> entries;  // row-major

    long long at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(c)];
    }
};

/// Matrix of ∂_k from k-chains to (k-1)-chains of the augmented complex,
/// in the canonical face order on both sides. ∂_0 sends every vertex to
/// the empty face. Signs follow ∂[v_0..v_k] = Σ (-1)^i [.. v̂_i ..] on
/// sorted vertex lists.
FieldMatrix boundary_matrix(const SimplicialComplex& dx, int k, FieldSpec field);

/// Exact rank over the matrix's field.
int rank(const FieldMatrix& m);

/// Reduced Betti numbers b_{-1} .. b_dim.
struct BettiVector {
    std::vector<long long> b;  // entry 0 is b_{-1}
    int top_dim() const { return static_cast<int>(b.size()) - 2; }
    long long at(int k) const { return b[static_cast<std::size_t>(k + 1)]; }
    long long reduced_euler() const {
        long long chi = 0;
        for (int k = -1; k <= top_dim(); ++k) chi += (k % 2 == 0) ? at(k) : -at(k);
        return chi;
    }
};

/// Reduced simplicial homology dimensions over the given field, computed
/// from boundary ranks. For the irrelevant complex {∅} this is b_{-1} = 1.
BettiVector reduced_betti(const SimplicialComplex& dx, FieldSpec field);

} // namespace sr
