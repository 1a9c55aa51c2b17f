#include "sr/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sr/errors.hpp"
#include "sr/resolution.hpp"

namespace sr {

using nlohmann::json;

SimplicialComplex parse_complex_text(const std::string& text, const std::string& source) {
    std::vector<std::vector<std::string>> facets;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> facet;
        std::string tok;
        while (tokens >> tok) facet.push_back(tok);
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (facets.empty())
        throw Error(errc::parse_error,
                    "ParseError: " + source + ":" + std::to_string(lineno) + ": no facets found");
    return SimplicialComplex::from_facets(facets);
}

std::string write_complex_text(const SimplicialComplex& dx) {
    if (dx.dim() < 0)
        fail(errc::degenerate_complex, "{∅} has no text form; use the structured format");
    std::ostringstream os;
    os << "# n=" << dx.vertex_count() << " dim=" << dx.dim() << "\n";
    for (const auto& facet : dx.facet_labels()) {
        for (std::size_t i = 0; i < facet.size(); ++i) os << (i ? " " : "") << facet[i];
        os << "\n";
    }
    return os.str();
}

SimplicialComplex complex_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
        fail(errc::parse_error, "structured complex needs a \"facets\" array");
    std::vector<std::vector<std::string>> facets;
    // declared labels are vertices; any not covered by a facet enter as
    // singletons (normalization absorbs the covered ones)
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array()) fail(errc::parse_error, "\"labels\" must be an array");
        for (const auto& l : doc["labels"]) {
            if (l.is_string())
                facets.push_back({l.get<std::string>()});
            else if (l.is_number_integer())
                facets.push_back({std::to_string(l.get<long long>())});
            else
                fail(errc::parse_error, "labels must be strings or integers");
        }
    }
    for (const auto& f : doc["facets"]) {
        if (!f.is_array()) fail(errc::parse_error, "each facet must be an array of labels");
        std::vector<std::string> facet;
        for (const auto& l : f) {
            if (l.is_string())
                facet.push_back(l.get<std::string>());
            else if (l.is_number_integer())
                facet.push_back(std::to_string(l.get<long long>()));
            else
                fail(errc::parse_error, "labels must be strings or integers");
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

json complex_to_json(const SimplicialComplex& dx) {
    json doc;
    doc["labels"] = dx.labels();
    json facets = json::array();
    for (const auto& f : dx.facet_labels()) facets.push_back(f);
    doc["facets"] = facets;
    return doc;
}

SimplicialComplex load_complex(const std::string& content, const std::string& source) {
    for (char c : content) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') {
            json doc;
            try {
                doc = json::parse(content);
            } catch (const json::parse_error& e) {
                throw Error(errc::parse_error, "ParseError: " + source + ": " + e.what());
            }
            return complex_from_json(doc);
        }
        break;
    }
    return parse_complex_text(content, source);
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_complex(buf.str(), path);
}

json rational_to_json(const Rational& r) {
    char approx[64];
    std::snprintf(approx, sizeof(approx), "%.6g", r.to_double());
    return json{{"num", r.num().to_string()},
                {"den", r.den().to_string()},
                {"approx_decimal", std::string(approx)}};
}

json report_to_json(const MultiplicityReport& rep) {
    json doc;
    doc["complex"] = {{"hash", rep.complex_hash}, {"n", rep.n}, {"dim", rep.dim}};
    doc["field_characteristic"] = rep.field.characteristic;
    doc["degenerate"] = rep.degenerate;
    doc["multiplicity"] = rep.e;
    doc["lower_bound"] = rational_to_json(rep.lower);
    doc["upper_bound"] = rational_to_json(rep.upper);
    doc["upper"] = {{"holds", rep.upper_holds}, {"tight", rep.upper_tight}};
    doc["lower"] = {{"applicable", rep.lower_applicable},
                    {"holds", rep.lower_holds},
                    {"tight", rep.lower_tight}};
    doc["flags"] = {{"pure_complex", rep.flags.is_pure},
                    {"cone", rep.flags.is_cone},
                    {"matroid", rep.flags.is_matroid},
                    {"cm", rep.flags.is_cm},
                    {"q_max", rep.flags.q_max},
                    {"two_cm", rep.flags.is_2cm},
                    {"d_cm", rep.flags.is_dcm},
                    {"gorenstein", rep.flags.is_gorenstein},
                    {"gorenstein_star", rep.flags.is_gorenstein_star}};
    if (!rep.degenerate) {
        doc["shifts"] = {{"m", rep.shift_seqs.m}, {"M", rep.shift_seqs.M}};
        doc["pure_resolution"] = rep.pure;
        doc["quasi_pure_resolution"] = rep.quasi_pure;
    }
    if (rep.connectivity) doc["connectivity"] = rep.connectivity->q;
    doc["purity_at_equality"] = purity_status_name(rep.purity_at_equality);
    json verdicts = json::array();
    for (const auto& v : rep.verdicts)
        verdicts.push_back({{"name", v.name},
                            {"applicable", v.applicable},
                            {"holds", v.holds},
                            {"detail", v.detail}});
    doc["verdicts"] = verdicts;
    doc["all_hold"] = rep.all_hold();
    return doc;
}

namespace {

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

} // namespace

namespace {

// exact value first; non-integers also get a decimal marked approximate
std::string rational_text(const Rational& r) {
    if (r.is_integer()) return r.num().to_string();
    char approx[64];
    std::snprintf(approx, sizeof(approx), "%.4g", r.to_double());
    return r.to_string() + " (~" + approx + ")";
}

} // namespace

std::string report_to_text(const MultiplicityReport& rep) {
    std::ostringstream os;
    os << "field " << rep.field.name() << ":\n";
    if (rep.degenerate) {
        os << "  degenerate (full simplex, zero ideal): e = 1, bounds = 1\n";
        return os.str();
    }
    os << "  e = " << rep.e << "  lower = " << rational_text(rep.lower)
       << "  upper = " << rational_text(rep.upper) << "\n";
    os << "  upper bound: " << (rep.upper_holds ? "holds" : "VIOLATED")
       << (rep.upper_tight ? " (equality)" : "") << "\n";
    if (rep.lower_applicable)
        os << "  lower bound: " << (rep.lower_holds ? "holds" : "VIOLATED")
           << (rep.lower_tight ? " (equality)" : "") << "\n";
    else
        os << "  lower bound (informational, non-CM): " << (rep.lower_holds ? "e >= bound" : "e < bound")
           << "\n";
    os << "  shifts m = [" << join_ints(rep.shift_seqs.m) << "]  M = ["
       << join_ints(rep.shift_seqs.M) << "]\n";
    os << "  resolution: " << (rep.pure ? "pure" : rep.quasi_pure ? "quasi-pure" : "not quasi-pure")
       << "\n";
    os << "  flags: " << (rep.flags.is_pure ? "pure-complex " : "")
       << (rep.flags.is_cone ? "cone " : "") << (rep.flags.is_matroid ? "matroid " : "")
       << (rep.flags.is_cm ? "CM " : "") << (rep.flags.is_2cm ? "2-CM " : "")
       << (rep.flags.is_dcm ? "d-CM " : "") << (rep.flags.is_gorenstein ? "Gorenstein " : "")
       << (rep.flags.is_gorenstein_star ? "Gorenstein* " : "") << "\n";
    if (rep.flags.is_cm) os << "  q_max = " << rep.flags.q_max << "\n";
    if (rep.connectivity) os << "  connectivity q = (" << join_ints(rep.connectivity->q) << ")\n";
    os << "  purity at equality: " << purity_status_name(rep.purity_at_equality) << "\n";
    for (const auto& v : rep.verdicts) {
        os << "  [" << (v.applicable ? (v.holds ? "pass" : "FAIL") : "n/a ") << "] " << v.name;
        if (!v.detail.empty()) os << "  (" << v.detail << ")";
        os << "\n";
    }
    return os.str();
}

json ledger_entry_to_json(const LedgerEntry& entry, const FuzzLedger& ledger) {
    json doc;
    doc["family"] = ledger.family.name;
    json params(json::value_t::object);
    for (const auto& [k, v] : ledger.family.params) params[k] = v;
    doc["params"] = params;
    doc["seed"] = ledger.family.seed;
    doc["trial"] = entry.trial;
    doc["hash"] = entry.complex_hash;
    doc["n"] = entry.n;
    doc["dim"] = entry.dim;
    doc["degenerate"] = entry.degenerate;
    doc["upper_holds"] = entry.upper_holds;
    doc["upper_tight"] = entry.upper_tight;
    doc["lower_applicable"] = entry.lower_applicable;
    doc["lower_holds"] = entry.lower_holds;
    doc["lower_tight"] = entry.lower_tight;
    doc["purity"] = purity_status_name(entry.purity);
    doc["violation"] = entry.violation;
    if (entry.violation) doc["witness_facets"] = entry.witness_facets;
    return doc;
}

std::string ledger_to_jsonl(const FuzzLedger& ledger) {
    std::ostringstream os;
    std::size_t idx = 0;
    for (int t = 0; t < ledger.trials; ++t) {
        for (int ch : ledger.characteristics) {
            const LedgerEntry& entry = ledger.entries[idx++];
            json doc = ledger_entry_to_json(entry, ledger);
            doc["characteristic"] = ch;
            os << doc.dump() << "\n";
        }
    }
    json summary;
    summary["summary"] = {{"trials", ledger.trials},
                          {"violations", ledger.violations},
                          {"upper_tight", ledger.upper_tight_count},
                          {"lower_tight", ledger.lower_tight_count}};
    os << summary.dump() << "\n";
    return os.str();
}

std::string skip_table_text(const SkipTable& table) {
    std::ostringstream os;
    auto row = [&os](const std::string& head, const std::vector<int>& vals) {
        os << head;
        for (int v : vals) {
            os.width(5);
            os << v;
        }
        os << "\n";
    };
    std::vector<int> idx;
    for (std::size_t i = 1; i <= table.m.size(); ++i) idx.push_back(static_cast<int>(i));
    row("i    ", idx);
    row("m_i  ", table.m);
    row("m'_i ", table.m_prime);
    os << "\n";
    os << "j    t_j  s_j  q_j\n";
    for (std::size_t j = 0; j < table.s.size(); ++j) {
        os.width(3);
        os << j;
        os.width(5);
        os << table.t[j];
        os.width(5);
        os << table.s[j];
        os.width(5);
        os << table.q[j];
        os << "\n";
    }
    return os.str();
}

} // namespace sr
