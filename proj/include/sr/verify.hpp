#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sr/classify.hpp"
#include "sr/cm.hpp"
#include "sr/complex.hpp"
#include "sr/field.hpp"
#include "sr/generators.hpp"
#include "sr/resolution.hpp"

namespace sr {

/// Outcome of one theorem's check on one complex. Inapplicable hypotheses
/// never count as failures.
struct TheoremVerdict {
    std::string name;
    bool applicable = false;
    bool holds = true;  // meaningful only when applicable
    std::string detail;
};

/// How a bound-equality relates to purity of the resolution:
///  - confirmed: within a class where equality provably forces purity
///  - observation: outside the proven classes, purity recorded only
///  - violated: purity failed inside a proven class (a genuine failure)
enum class PurityStatus { not_applicable, confirmed, observation_pure, observation_not_pure, violated };

const char* purity_status_name(PurityStatus s);

struct MultiplicityReport {
    std::string complex_hash;
    int n = 0;
    int dim = -1;
    FieldSpec field;
    bool degenerate = false;  // full simplex: empty products, e = 1 = both bounds

    long long e = 0;
    Rational lower, upper;
    bool upper_holds = false;
    bool upper_tight = false;
    bool lower_applicable = false;  // pass/fail semantics only for CM complexes
    bool lower_holds = false;       // informational when not applicable
    bool lower_tight = false;

    ClassificationFlags flags;
    ShiftSequences shift_seqs;
    bool pure = false;
    bool quasi_pure = false;
    std::optional<ConnectivitySequence> connectivity;

    PurityStatus purity_at_equality = PurityStatus::not_applicable;
    std::vector<TheoremVerdict> verdicts;

    /// True when no applicable verdict failed and no proven-class purity
    /// claim was violated.
    bool all_hold() const;
};

/// Evaluates the conjectured bounds e <= (Π M_i)/c! (always) and
/// e >= (Π m_i)/c! (pass/fail only when CM), classifies the complex and
/// fills in the equality/purity analysis. Throws DegenerateComplex on {∅}.
MultiplicityReport verify_conjecture(const SimplicialComplex& dx, FieldSpec field);

/// Re-runs the equality => purity analysis on a finished report.
PurityStatus equality_purity_check(const MultiplicityReport& report);

// per-class theorem suites; each returns verdicts for the report
TheoremVerdict verify_matroid_theorem(const SimplicialComplex& dx, FieldSpec field);
TheoremVerdict verify_dim12(const SimplicialComplex& dx, FieldSpec field);
std::vector<TheoremVerdict> verify_gorenstein(const SimplicialComplex& dx, FieldSpec field);
TheoremVerdict consistency_euler_ds(const SimplicialComplex& dx);

/// Full per-complex suite: conjecture bounds plus every theorem whose
/// hypotheses the complex satisfies, over one field.
struct SuiteResult {
    MultiplicityReport report;
    bool all_hold = false;
};
SuiteResult run_suite(const SimplicialComplex& dx, FieldSpec field);

/// One fuzz-search trial record.
struct LedgerEntry {
    int trial = 0;
    std::string complex_hash;
    int n = 0;
    int dim = -1;
    bool degenerate = false;
    bool upper_holds = false;
    bool upper_tight = false;
    bool lower_applicable = false;
    bool lower_holds = false;
    bool lower_tight = false;
    PurityStatus purity = PurityStatus::not_applicable;
    bool violation = false;
    std::vector<std::vector<std::string>> witness_facets;  // shrunk, when violated
};

struct FuzzLedger {
    FamilySpec family;
    int trials = 0;
    std::vector<int> characteristics;
    std::vector<LedgerEntry> entries;  // ordered by trial, then characteristic
    int violations = 0;
    int upper_tight_count = 0;
    int lower_tight_count = 0;
};

/// Greedy minimization used on fuzz counterexamples: repeatedly tries
/// single vertex deletions (first, since the conjecture classes are closed
/// under induced subcomplexes) and then single facet removals, keeping any
/// step on which `keep` still holds. Returns a complex where no single
/// step preserves the predicate.
SimplicialComplex shrink_while(SimplicialComplex dx,
                               const std::function<bool(const SimplicialComplex&)>& keep);

/// Runs verify_conjecture on `trials` samples of the family. Violations
/// are shrunk (vertex deletions first, then facet removals) to a minimal
/// witness. Trials fan out across `threads` workers; the ledger is ordered
/// by trial index either way, so identical (family, trials, seed, fields)
/// reproduce it exactly.
FuzzLedger fuzz_search(const FamilySpec& family, int trials,
                       const std::vector<int>& characteristics = {0, 2}, int threads = 1);

} // namespace sr
