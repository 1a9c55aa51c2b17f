#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sr/cm.hpp"
#include "sr/errors.hpp"
#include "sr/generators.hpp"
#include "sr/io.hpp"
#include "sr/resolution.hpp"
#include "sr/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;

std::vector<sr::FieldSpec> parse_fields(const std::vector<int>& chars) {
    std::vector<int> cs = chars.empty() ? std::vector<int>{0, 2} : chars;
    std::vector<sr::FieldSpec> out;
    for (int c : cs) out.push_back(sr::FieldSpec::of_characteristic(c));
    return out;
}

// family arguments arrive either positionally (in the family's natural
// parameter order) or as key=value tokens
sr::FamilySpec build_family(const std::string& name, const std::vector<std::string>& args,
                            std::uint64_t seed) {
    static const std::map<std::string, std::vector<std::string>> order = {
        {"simplex_boundary", {"d"}},
        {"cycle", {"n"}},
        {"path", {"n"}},
        {"complete_graph", {"n"}},
        {"uniform_matroid", {"r", "n"}},
        {"cross_polytope_boundary", {"d"}},
        {"cyclic_polytope_boundary", {"d", "n"}},
        {"rp2_six_vertex", {}},
        {"random_pure", {"n", "d", "count"}},
        {"random_graph", {"n", "p"}},
        {"graphic_random", {"n", "p"}},
    };
    auto it = order.find(name);
    if (it == order.end())
        sr::fail(sr::errc::parameter_out_of_range, "unknown family: " + name);
    sr::FamilySpec spec;
    spec.name = name;
    spec.seed = seed;
    std::size_t positional = 0;
    for (const auto& arg : args) {
        auto eq = arg.find('=');
        if (eq != std::string::npos) {
            std::string key = arg.substr(0, eq), value = arg.substr(eq + 1);
            if (key == "seed")
                spec.seed = std::stoull(value);
            else if (key == "trials")
                continue;  // handled by the command itself
            else
                spec.params[key] = value;
        } else {
            if (positional >= it->second.size())
                sr::fail(sr::errc::parameter_out_of_range,
                         "too many positional parameters for " + name);
            spec.params[it->second[positional++]] = arg;
        }
    }
    return spec;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) sr::fail(sr::errc::parse_error, "cannot write " + path);
    out << content;
}

int cmd_analyze(const std::string& input, const std::vector<int>& chars,
                const std::string& format, int threads, const std::string& outPath) {
    sr::SimplicialComplex dx = sr::load_complex_file(input);
    if (dx.dim() < 0) {
        write_output(outPath, "degenerate: the irrelevant complex {∅}; no analysis defined\n");
        return kExitOk;
    }
    std::ostringstream os;
    nlohmann::json docs = nlohmann::json::array();
    bool first = true;
    for (sr::FieldSpec field : parse_fields(chars)) {
        sr::SubsetHomologyEngine engine(dx, field);
        engine.fill_all(threads);
        sr::BettiTable table = sr::hochster_betti_table(engine);
        sr::MultiplicityReport rep = sr::verify_conjecture(dx, field);
        if (format == "doc") {
            nlohmann::json doc = sr::report_to_json(rep);
            if (!table.degenerate) {
                nlohmann::json entries = nlohmann::json::array();
                for (const auto& [key, val] : table.beta)
                    entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", val}});
                doc["betti_table"] = entries;
            }
            doc["f_vector"] = dx.f_vector().counts;
            doc["h_vector"] = dx.h_vector().h;
            docs.push_back(doc);
        } else {
            if (first) {
                os << "complex: n=" << dx.vertex_count() << " dim=" << dx.dim()
                   << " facets=" << dx.facets().size() << " hash=" << dx.hash() << "\n";
                sr::FVector f = dx.f_vector();
                os << "f-vector:";
                for (int k = -1; k <= f.dim(); ++k) os << " " << f.at(k);
                os << "\nh-vector:";
                sr::HVector h = dx.h_vector();
                for (int i = 0; i <= h.d(); ++i) os << " " << h.at(i);
                os << "\n";
                first = false;
            }
            os << "\n" << sr::report_to_text(rep);
            if (table.degenerate)
                os << "  (zero ideal: empty Betti table)\n";
            else
                os << "betti table:\n" << sr::betti_table_text(table);
        }
    }
    write_output(outPath, format == "doc" ? docs.dump(2) + "\n" : os.str());
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& familyName,
               const std::vector<std::string>& familyArgs, const std::vector<int>& chars,
               const std::string& format, const std::string& outPath) {
    std::vector<std::string> args = familyArgs;
    if (!familyName.empty() && !input.empty())
        args.insert(args.begin(), input);  // the input slot caught the first family parameter
    sr::SimplicialComplex dx =
        familyName.empty() ? sr::load_complex_file(input)
                           : sr::family_complex(build_family(familyName, args, 0), 0);
    if (dx.dim() < 0) {
        write_output(outPath, "degenerate: {∅} has no theorem suite\n");
        return kExitOk;
    }
    bool allHold = true;
    std::ostringstream os;
    nlohmann::json docs = nlohmann::json::array();
    for (sr::FieldSpec field : parse_fields(chars)) {
        sr::SuiteResult suite = sr::run_suite(dx, field);
        allHold = allHold && suite.all_hold;
        if (format == "doc")
            docs.push_back(sr::report_to_json(suite.report));
        else
            os << sr::report_to_text(suite.report);
    }
    write_output(outPath, format == "doc" ? docs.dump(2) + "\n" : os.str());
    return allHold ? kExitOk : kExitVerdictFailure;
}

int cmd_search(const std::string& familyName, const std::vector<std::string>& familyArgs,
               int trials, std::uint64_t seed, const std::vector<int>& chars,
               const std::string& outPath, int threads) {
    sr::FamilySpec family = build_family(familyName, familyArgs, seed);
    std::vector<int> cs = chars.empty() ? std::vector<int>{0, 2} : chars;
    sr::FuzzLedger ledger = sr::fuzz_search(family, trials, cs, threads);
    write_output(outPath, sr::ledger_to_jsonl(ledger));
    if (!outPath.empty() && outPath != "-")
        std::cerr << "ledger written to " << outPath << " (" << ledger.entries.size()
                  << " records, " << ledger.violations << " violations)\n";
    return ledger.violations == 0 ? kExitOk : kExitVerdictFailure;
}

int cmd_generate(const std::string& familyName, const std::vector<std::string>& familyArgs,
                 std::uint64_t seed, const std::string& format, const std::string& outPath) {
    sr::SimplicialComplex dx = sr::family_complex(build_family(familyName, familyArgs, seed), 0);
    if (format == "doc")
        write_output(outPath, sr::complex_to_json(dx).dump(2) + "\n");
    else
        write_output(outPath, sr::write_complex_text(dx));
    return kExitOk;
}

int cmd_skips(const std::string& mSequence, int n, const std::string& outPath) {
    std::vector<int> m;
    std::istringstream in(mSequence);
    for (int v; in >> v;) m.push_back(v);
    int d = n - static_cast<int>(m.size());
    sr::SkipTable table = sr::skips_from_m_sequence(m, n, d);
    write_output(outPath, sr::skip_table_text(table));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley-Reisner invariants: Betti tables, CM connectivity, multiplicity bounds"};
    app.require_subcommand(1);

    std::vector<int> chars;
    std::string format = "text";
    std::string outPath;
    app.add_option("--field", chars, "field characteristic, 0 or a prime (repeatable)")
        ->expected(-1);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "doc"}));
    app.add_option("--out", outPath, "output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "full invariant report for a complex file");
    analyze->fallthrough();
    std::string analyzeInput;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    analyze->add_option("input", analyzeInput, "facet file (text or structured)")->required();
    analyze->add_option("--threads", threads, "worker threads for the subset scan");

    auto* verify = app.add_subcommand("verify", "run the applicable theorem suite");
    verify->fallthrough();
    std::string verifyInput, verifyFamily;
    std::vector<std::string> verifyArgs;
    verify->add_option("input", verifyInput, "facet file");
    verify->add_option("--family", verifyFamily, "generate the input from a family instead");
    verify->add_option("args", verifyArgs, "family parameters (positional or key=value)");

    auto* search = app.add_subcommand("search", "sample a family and verify the bounds");
    search->fallthrough();
    std::string searchFamily;
    std::vector<std::string> searchArgs;
    int trials = 100;
    std::uint64_t seed = 0;
    search->add_option("family", searchFamily, "family name")->required();
    search->add_option("args", searchArgs, "family parameters (positional or key=value)");
    search->add_option("--trials", trials, "number of sampled complexes");
    search->add_option("--seed", seed, "stream seed");
    int searchThreads = 1;
    search->add_option("--threads", searchThreads, "worker threads over trials");

    auto* generate = app.add_subcommand("generate", "emit a named complex as a facet file");
    generate->fallthrough();
    std::string genFamily;
    std::vector<std::string> genArgs;
    std::uint64_t genSeed = 0;
    generate->add_option("family", genFamily, "family name")->required();
    generate->add_option("args", genArgs, "family parameters (positional or key=value)");
    generate->add_option("--seed", genSeed, "stream seed (random families)");

    auto* skips = app.add_subcommand("skips", "skip table for an m-sequence");
    skips->fallthrough();
    std::string mSequence;
    int skipsN = 0;
    skips->add_option("m", mSequence, "whitespace-separated m-sequence, e.g. \"2 3 5\"")->required();
    skips->add_option("--n", skipsN, "number of vertices")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        // search trials may also arrive as a trials=... token
        for (const auto& arg : searchArgs)
            if (arg.rfind("trials=", 0) == 0) trials = std::stoi(arg.substr(7));
        for (const auto& arg : searchArgs)
            if (arg.rfind("seed=", 0) == 0) seed = std::stoull(arg.substr(5));

        if (analyze->parsed())
            return cmd_analyze(analyzeInput, chars, format, std::max(threads, 1), outPath);
        if (verify->parsed())
            return cmd_verify(verifyInput, verifyFamily, verifyArgs, chars, format, outPath);
        if (search->parsed())
            return cmd_search(searchFamily, searchArgs, trials, seed, chars, outPath,
                              std::max(searchThreads, 1));
        if (generate->parsed()) return cmd_generate(genFamily, genArgs, genSeed, format, outPath);
        if (skips->parsed()) return cmd_skips(mSequence, skipsN, outPath);
    } catch (const sr::Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == sr::errc::parse_error || e.code() == sr::errc::parameter_out_of_range ||
                       e.code() == sr::errc::malformed_sequence
                   ? kExitUsage
                   : kExitVerdictFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
