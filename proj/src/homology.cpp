#include "sr/homology.hpp"

#include <algorithm>

#include "sr/errors.hpp"
#include "sr/linalg.hpp"

namespace sr {

FieldMatrix boundary_matrix(const SimplicialComplex& dx, int k, FieldSpec field) {
    if (k < 0 || k > dx.dim())
        fail(errc::dimension_out_of_range, "boundary_matrix: k must be in [0, dim]");
    std::vector<VertexSet> domain = dx.faces(k);
    std::vector<VertexSet> codomain = dx.faces(k - 1);

    FieldMatrix m;
    m.field = field;
    m.rows = static_cast<int>(codomain.size());
    m.cols = static_cast<int>(domain.size());
    m.entries.assign(static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols), 0);

    std::vector<std::uint64_t> rowMasks;
    rowMasks.reserve(codomain.size());
    for (VertexSet f : codomain) rowMasks.push_back(f.mask());

    long long minusOne = field.is_rationals() ? -1 : field.characteristic - 1;
    for (int c = 0; c < m.cols; ++c) {
        VertexSet face = domain[static_cast<std::size_t>(c)];
        int i = 0;
        for (int v : face) {
            std::uint64_t sub = face.without(v).mask();
            auto it = std::lower_bound(rowMasks.begin(), rowMasks.end(), sub);
            int r = static_cast<int>(it - rowMasks.begin());
            m.entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(m.cols) +
                      static_cast<std::size_t>(c)] = (i % 2 == 0) ? 1 : minusOne;
            ++i;
        }
    }
    return m;
}

int rank(const FieldMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (m.field.is_rationals()) {
        std::vector<long long> a = m.entries;
        return rank_over_q(a, m.rows, m.cols);
    }
    if (m.field.characteristic == 2) {
        int words = (m.cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(
            static_cast<std::size_t>(m.rows),
            std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c)
                if (m.at(r, c) % 2 != 0)
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c) / 64] |=
                        std::uint64_t(1) << (c % 64);
        return rank_gf2(rows, m.cols);
    }
    std::uint32_t p = static_cast<std::uint32_t>(m.field.characteristic);
    std::vector<std::uint32_t> a(m.entries.size());
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        long long v = m.entries[i] % m.field.characteristic;
        if (v < 0) v += m.field.characteristic;
        a[i] = static_cast<std::uint32_t>(v);
    }
    return rank_gfp(a, m.rows, m.cols, p);
}

BettiVector reduced_betti(const SimplicialComplex& dx, FieldSpec field) {
    int d = dx.dim();
    BettiVector out;
    out.b.assign(static_cast<std::size_t>(d + 2), 0);
    if (d < 0) {
        out.b[0] = 1;  // {∅} is the (-1)-sphere
        return out;
    }
    FVector f = dx.f_vector();
    std::vector<int> ranks(static_cast<std::size_t>(d + 2), 0);  // ranks[k] = rank ∂_k
    ranks[0] = f.at(0) > 0 ? 1 : 0;  // augmentation row of ones
    for (int k = 1; k <= d; ++k) ranks[static_cast<std::size_t>(k)] = rank(boundary_matrix(dx, k, field));
    for (int k = 0; k <= d; ++k)
        out.b[static_cast<std::size_t>(k + 1)] =
            f.at(k) - ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)];
    return out;
}

} // namespace sr
