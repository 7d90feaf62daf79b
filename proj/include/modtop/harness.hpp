#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "modtop/classes.hpp"
#include "modtop/lattice.hpp"

namespace modtop::harness {

inline constexpr std::string_view kToolVersion = "modtop 0.1.0";

enum class Verdict { pass, fail, hypothesis_not_met, skipped };
std::string_view verdict_name(Verdict v);

/// What a check ran on: a module, usually a class, and for induced-map
/// statements the name of the hom suite entry.
struct Instance {
    unsigned ring = 0;
    std::vector<unsigned> orders;
    std::optional<ClassName> cls;
    std::string hom;
};
std::string module_name(unsigned ring, const std::vector<unsigned>& orders);
std::string instance_name(const Instance& inst);

struct CheckResult {
    std::string statement_id;
    Instance instance;
    Verdict verdict = Verdict::pass;
    std::string witness;  // mandatory on fail; names the hypothesis on hypothesis-not-met
    std::string label;    // e.g. "finite-trivial+witness" or "informational"
};

struct Corpus {
    std::vector<std::pair<unsigned, std::vector<unsigned>>> modules;
    std::uint64_t seed = 0;
    Caps caps{};
    bool include_homs = true;              // append the fixed hom suite
    std::optional<ClassName> only_class;   // restrict to one class's statements
};

/// All cyclic rings 2..24 plus the small product modules.
Corpus default_corpus();

/// A fixed induced-map fixture: explicit generator images, or a quotient
/// projection derived from the listed kernel generators.
struct HomCase {
    std::string name;
    ClassName cls;
    unsigned ring = 0;
    std::vector<unsigned> src_orders;
    std::vector<unsigned> dst_orders;             // ignored for quotients
    std::vector<std::vector<unsigned>> images;    // ignored for quotients
    bool is_quotient = false;
    std::vector<std::vector<unsigned>> kernel_gens;
};
const std::vector<HomCase>& hom_suite();

/// Every statement-instance verdict over the corpus, in deterministic order.
std::vector<CheckResult> run_all(const Corpus& corpus);

/// Re-run a single statement on a given instance (used by minimize and tests).
CheckResult run_statement(const std::string& statement_id, const Instance& inst,
                          const Corpus& corpus);

/// Greedy deterministic shrink of a failing module instance: drop cyclic
/// factors, shrink factor orders and the modulus over divisors, keeping the
/// failure alive. Hom-suite instances are returned unchanged.
CheckResult minimize(const CheckResult& failing, const Corpus& corpus);

nlohmann::ordered_json instance_json(const Instance& inst);
nlohmann::ordered_json result_json(const CheckResult& r);
nlohmann::ordered_json summary_json(const std::vector<CheckResult>& results);
nlohmann::ordered_json report_json(const std::vector<CheckResult>& results, const Corpus& corpus);

}  // namespace modtop::harness
