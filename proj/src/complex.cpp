#include "sr/complex.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>

#include "sr/bigint.hpp"
#include "sr/errors.hpp"

namespace sr {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// Numeric order when every label parses as an integer, else plain string order.
void sort_labels(std::vector<std::string>& labels) {
    bool all_numeric = std::all_of(labels.begin(), labels.end(), is_integer_token);
    if (all_numeric) {
        std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
            long long x = std::stoll(a), y = std::stoll(b);
            if (x != y) return x < y;
            return a < b;
        });
    } else {
        std::sort(labels.begin(), labels.end());
    }
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}

std::vector<VertexSet> normalize_facets(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> maximal;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool contained = false;
        // only later sets can strictly contain this one (canonical order is by size)
        for (std::size_t j = i + 1; j < sets.size() && !contained; ++j)
            contained = sets[i].subset_of(sets[j]) && sets[i] != sets[j];
        if (!contained) maximal.push_back(sets[i]);
    }
    return maximal;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facet_labels) {
    if (facet_labels.empty()) fail(errc::empty_input, "no facets given");

    std::vector<std::string> labels;
    for (const auto& fl : facet_labels)
        for (const auto& l : fl) labels.push_back(l);
    sort_labels(labels);
    if (static_cast<int>(labels.size()) > VertexSet::max_vertices)
        fail(errc::parameter_out_of_range, "more than 63 vertices");

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);

    std::vector<VertexSet> sets;
    sets.reserve(facet_labels.size());
    for (const auto& fl : facet_labels) {
        VertexSet s;
        for (const auto& l : fl) s = s.with(index.at(l));
        sets.push_back(s);
    }

    SimplicialComplex out;
    out.n_ = static_cast<int>(labels.size());
    out.labels_ = std::move(labels);
    out.facets_ = normalize_facets(std::move(sets));
    return out;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(facets_.size());
    for (VertexSet f : facets_) {
        std::vector<std::string> fl;
        for (int v : f) fl.push_back(labels_[static_cast<std::size_t>(v)]);
        out.push_back(std::move(fl));
    }
    return out;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, f.count() - 1);
    return d;
}

bool SimplicialComplex::is_face(VertexSet s) const {
    for (VertexSet f : facets_)
        if (s.subset_of(f)) return true;
    return false;
}

bool SimplicialComplex::is_pure() const {
    for (VertexSet f : facets_)
        if (f.count() != facets_.back().count()) return false;
    return true;
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces_by_dim() const {
    int d = dim();
    std::vector<std::vector<std::uint64_t>> out(static_cast<std::size_t>(std::max(d + 1, 0)));
    if (d < 0) return out;
    // refuse enumerations that cannot fit in memory anyway (the practical
    // cap for the subset analyses is far lower, around n = 24)
    BigInt budget(0);
    for (VertexSet f : facets_)
        budget += BigInt::pow(BigInt(2), f.count());
    if (budget > BigInt(1LL << 27))
        fail(errc::parameter_out_of_range, "face enumeration beyond practical limits");
    // downward closure, one dimension at a time
    std::set<std::uint64_t> current;
    for (VertexSet f : facets_)
        if (!f.empty()) current.insert(f.mask());
    std::vector<std::set<std::uint64_t>> byDim(static_cast<std::size_t>(d + 1));
    for (std::uint64_t m : current) byDim[static_cast<std::size_t>(std::popcount(m) - 1)].insert(m);
    for (int k = d; k >= 1; --k) {
        for (std::uint64_t m : byDim[static_cast<std::size_t>(k)]) {
            for (std::uint64_t rest = m; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                byDim[static_cast<std::size_t>(k - 1)].insert(m & ~(std::uint64_t(1) << v));
            }
        }
    }
    for (int k = 0; k <= d; ++k)
        out[static_cast<std::size_t>(k)]
            .assign(byDim[static_cast<std::size_t>(k)].begin(), byDim[static_cast<std::size_t>(k)].end());
    return out;
}

std::vector<VertexSet> SimplicialComplex::faces(int k) const {
    if (k < -1 || k > dim())
        fail(errc::dimension_out_of_range, "faces: k must be in [-1, dim]");
    if (k == -1) return {VertexSet()};
    auto all = faces_by_dim();
    std::vector<VertexSet> out;
    out.reserve(all[static_cast<std::size_t>(k)].size());
    for (std::uint64_t m : all[static_cast<std::size_t>(k)]) out.push_back(VertexSet(m));
    return out;
}

FVector SimplicialComplex::f_vector() const {
    auto all = faces_by_dim();
    FVector out;
    out.counts.push_back(1);  // f_{-1}
    for (const auto& lvl : all) out.counts.push_back(static_cast<long long>(lvl.size()));
    return out;
}

HVector SimplicialComplex::h_vector() const {
    FVector f = f_vector();
    int d = dim() + 1;
    HVector out;
    out.h.resize(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        BigInt hi(0);
        for (int j = 0; j <= i; ++j) {
            BigInt term = BigInt::binomial(d - j, d - i) * BigInt(f.at(j - 1));
            hi += ((i - j) % 2 == 0) ? term : -term;
        }
        out.h[static_cast<std::size_t>(i)] = hi.to_int64();
    }
    return out;
}

SimplicialComplex SimplicialComplex::induced(VertexSet w) const {
    if (w.empty()) fail(errc::empty_selection, "induced subcomplex on the empty vertex set");
    if (!w.subset_of(VertexSet::full(n_)))
        fail(errc::parameter_out_of_range, "selection contains vertices outside the complex");
    std::vector<std::vector<std::string>> fl;
    for (VertexSet f : facets_) {
        VertexSet cut = f & w;
        std::vector<std::string> one;
        for (int v : cut) one.push_back(labels_[static_cast<std::size_t>(v)]);
        fl.push_back(std::move(one));
    }
    // vertices of w missing from every facet intersection are still vertices
    // of the result (each is a face of Δ by the no-phantom-vertex invariant)
    for (int v : w)
        fl.push_back({labels_[static_cast<std::size_t>(v)]});
    return from_facets(fl);
}

SimplicialComplex SimplicialComplex::delete_vertices(VertexSet u) const {
    VertexSet rest = VertexSet::full(n_) - u;
    if (rest.empty()) fail(errc::empty_selection, "deleting every vertex");
    return induced(rest);
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
    if (i < 0 || i > dim())
        fail(errc::dimension_out_of_range, "skeleton: i must be in [0, dim]");
    std::vector<std::vector<std::string>> fl;
    for (VertexSet f : faces(i)) {
        std::vector<std::string> one;
        for (int v : f) one.push_back(labels_[static_cast<std::size_t>(v)]);
        fl.push_back(std::move(one));
    }
    for (VertexSet f : facets_) {
        if (f.count() - 1 < i) {
            std::vector<std::string> one;
            for (int v : f) one.push_back(labels_[static_cast<std::size_t>(v)]);
            fl.push_back(std::move(one));
        }
    }
    return from_facets(fl);
}

SimplicialComplex SimplicialComplex::link(VertexSet f) const {
    if (!is_face(f)) fail(errc::not_a_face, "link of a non-face");
    std::vector<std::vector<std::string>> fl;
    for (VertexSet m : facets_) {
        if (!f.subset_of(m)) continue;
        VertexSet g = m - f;
        std::vector<std::string> one;
        for (int v : g) one.push_back(labels_[static_cast<std::size_t>(v)]);
        fl.push_back(std::move(one));
    }
    return from_facets(fl);
}

VertexSet SimplicialComplex::cone_apexes() const {
    VertexSet acc = VertexSet::full(n_);
    for (VertexSet f : facets_) acc = acc & f;
    return acc;
}

SimplicialComplex SimplicialComplex::core() const {
    VertexSet apexes = cone_apexes();
    if (apexes.empty()) return *this;
    VertexSet rest = VertexSet::full(n_) - apexes;
    if (rest.empty()) {
        // the complex is a full simplex; its core is {∅}
        return from_facets({{}});
    }
    return induced(rest);
}

long long SimplicialComplex::euler_characteristic() const {
    FVector f = f_vector();
    long long chi = 0;
    for (int k = 0; k <= f.dim(); ++k) chi += (k % 2 == 0) ? f.at(k) : -f.at(k);
    return chi;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
    return euler_characteristic() - 1;
}

std::string SimplicialComplex::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xFF;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (VertexSet f : facets_) mix(f.mask());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    // keep a's labels; clashing b labels get fresh ones. All-numeric label
    // sets continue numerically (so join with a point matches cone), other
    // sets take primes.
    std::set<std::string> taken(a.labels().begin(), a.labels().end());
    std::vector<std::string> bLabels = b.labels();
    bool allNumeric = true;
    long long maxNumeric = 0;
    for (const auto& pool : {a.labels(), b.labels()}) {
        for (const auto& l : pool) {
            bool numeric = !l.empty() && l.find_first_not_of("0123456789") == std::string::npos;
            if (!numeric) allNumeric = false;
            else maxNumeric = std::max(maxNumeric, std::stoll(l));
        }
    }
    for (auto& l : bLabels) {
        if (!taken.count(l)) {
            taken.insert(l);
            continue;
        }
        if (allNumeric) {
            l = std::to_string(++maxNumeric);
        } else {
            while (taken.count(l)) l += "'";
        }
        taken.insert(l);
    }
    std::vector<std::vector<std::string>> fl;
    for (VertexSet fa : a.facets()) {
        for (VertexSet fb : b.facets()) {
            std::vector<std::string> one;
            for (int v : fa) one.push_back(a.label(v));
            for (int v : fb) one.push_back(bLabels[static_cast<std::size_t>(v)]);
            fl.push_back(std::move(one));
        }
    }
    return SimplicialComplex::from_facets(fl);
}

SimplicialComplex cone(const SimplicialComplex& base) {
    SimplicialComplex apex = SimplicialComplex::from_facets({{"apex"}});
    return join(base, apex);
}

} // namespace sr
