#include "sr/classify.hpp"

#include <algorithm>

#include "sr/cm.hpp"
#include "sr/errors.hpp"
#include "sr/homology.hpp"
#include "sr/resolution.hpp"

namespace sr {

namespace {

// purity of the induced subcomplex on w, without building it
bool induced_is_pure(const SimplicialComplex& dx, VertexSet w) {
    std::vector<VertexSet> cuts;
    cuts.reserve(dx.facets().size());
    for (VertexSet f : dx.facets()) cuts.push_back(f & w);
    // vertices of w never disappear, so empty cuts are dominated by singletons
    for (int v : w) cuts.push_back(VertexSet::single(v));
    std::sort(cuts.begin(), cuts.end(), canonical_less);
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    int top = cuts.back().count();
    for (VertexSet s : cuts) {
        if (s.count() == top || s.empty()) continue;
        bool dominated = false;
        for (VertexSet big : cuts) {
            if (big.count() > s.count() && s.subset_of(big)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;  // s is a maximal face of smaller dimension
    }
    return true;
}

} // namespace

MatroidCheck is_matroid(const SimplicialComplex& dx) {
    MatroidCheck out;
    int n = dx.vertex_count();
    if (dx.dim() < 0) {
        out.is_matroid = true;  // {∅} vacuously
        return out;
    }
    VertexSet ground = VertexSet::full(n);
    for (int size = 1; size <= n; ++size) {
        bool clean = for_each_subset_of_size(ground, size, [&](VertexSet w) {
            if (!induced_is_pure(dx, w)) {
                out.witness = w;
                return false;
            }
            return true;
        });
        if (!clean) return out;
    }
    out.is_matroid = true;
    return out;
}

bool circuit_axiom_check(const SimplicialComplex& dx) {
    std::vector<VertexSet> gens = minimal_nonfaces(dx);
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            VertexSet shared = gens[a] & gens[b];
            if (shared.empty()) continue;
            VertexSet joined = gens[a] | gens[b];
            for (int v : shared) {
                if (dx.is_face(joined.without(v))) return false;  // quotient left the ideal
            }
        }
    }
    return true;
}

bool is_gorenstein_star(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) return true;  // {∅} is the (-1)-sphere
    std::vector<VertexSet> faces{VertexSet()};
    for (const auto& lvl : dx.faces_by_dim())
        for (std::uint64_t m : lvl) faces.push_back(VertexSet(m));
    for (VertexSet f : faces) {
        SimplicialComplex lk = dx.link(f);
        BettiVector bv = reduced_betti(lk, field);
        int top = lk.dim();
        for (int i = -1; i < top; ++i)
            if (bv.at(i) != 0) return false;
        if (top >= -1 && bv.at(top) != 1) return false;
    }
    return true;
}

bool is_gorenstein(const SimplicialComplex& dx, FieldSpec field) {
    return is_gorenstein_star(dx.core(), field);
}

ClassificationFlags classify(const SimplicialComplex& dx, SubsetHomologyEngine& engine) {
    ClassificationFlags flags;
    flags.field = engine.field();
    flags.is_pure = dx.is_pure();
    flags.is_cone = !dx.cone_apexes().empty();
    flags.is_matroid = is_matroid(dx).is_matroid;
    flags.is_cm = is_cm_hochster(engine);
    if (flags.is_cm) flags.q_max = q_max_skeleton(engine, engine.dim());
    flags.is_2cm = flags.q_max >= 2;
    flags.is_dcm = flags.q_max >= dx.dim() + 1;
    flags.is_gorenstein_star = is_gorenstein_star(dx, engine.field());
    flags.is_gorenstein = flags.is_gorenstein_star || is_gorenstein(dx, engine.field());
    return flags;
}

ClassificationFlags classify(const SimplicialComplex& dx, FieldSpec field) {
    if (dx.dim() < 0) fail(errc::degenerate_complex, "classification of {∅}");
    SubsetHomologyEngine engine(dx, field);
    return classify(dx, engine);
}

} // namespace sr
