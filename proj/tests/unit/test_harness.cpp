#include "doctest.h"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "modtop/errors.hpp"
#include "modtop/fault.hpp"
#include "modtop/harness.hpp"

using namespace modtop;
using harness::CheckResult;
using harness::Corpus;
using harness::Instance;
using harness::Verdict;

namespace {

std::vector<CheckResult> run_default() {
    static std::vector<CheckResult> cached = harness::run_all(harness::default_corpus());
    return cached;
}

std::map<Verdict, int> verdict_counts(const std::vector<CheckResult>& rs) {
    std::map<Verdict, int> c;
    for (const auto& r : rs) ++c[r.verdict];
    return c;
}

}  // namespace

TEST_CASE("naming of modules and instances") {
    CHECK(harness::module_name(6, {6}) == "Z/6");
    CHECK(harness::module_name(4, {2, 4}) == "Z/2xZ/4 over Z/4");
    Instance i{6, {6}, ClassName::prime, ""};
    CHECK(harness::instance_name(i) == "Z/6, class prime");
    Instance h{6, {6}, ClassName::prime, "identity Z/6"};
    CHECK(harness::instance_name(h) == "Z/6, class prime, hom identity Z/6");
}

TEST_CASE("the default corpus sweep is clean") {
    auto results = run_default();
    auto counts = verdict_counts(results);
    CHECK(counts[Verdict::fail] == 0);
    CHECK(counts[Verdict::skipped] == 0);
    CHECK(counts[Verdict::pass] + counts[Verdict::hypothesis_not_met] ==
          static_cast<int>(results.size()));
    CHECK(results.size() == 11833);

    // every unmet hypothesis names the hypothesis in its witness
    for (const auto& r : results)
        if (r.verdict == Verdict::hypothesis_not_met) {
            INFO(r.statement_id, " on ", harness::instance_name(r.instance));
            CHECK(r.witness.rfind("hypothesis:", 0) == 0);
        }
}

TEST_CASE("unmet hypotheses land exactly where the theory says they can") {
    auto results = run_default();
    std::map<std::string, int> by_statement;
    for (const auto& r : results)
        if (r.verdict == Verdict::hypothesis_not_met) ++by_statement[r.statement_id];

    std::map<std::string, int> expected{
        {"cor-artinian", 150},
        {"cor-quasicompact-classes", 12},
        {"lemma-strong-disconnect.disconnected", 295},
        {"prop-conmap.continuity", 4},
        {"prop-conmap.dense", 4},
        {"prop-conmap.homeomorphism", 4},
        {"thm-connected-if-zero", 184},
        {"thm-fg-quasicompact.witness", 54},
        {"thm-maximal-quasicompact", 54},
        {"thm-t1.fwd", 19},
    };
    CHECK(by_statement == expected);
}

TEST_CASE("labels mark the finite-trivial statements and the informational probe") {
    auto results = run_default();
    std::set<std::string> finite_trivial;
    int informational = 0;
    for (const auto& r : results) {
        if (r.label == "finite-trivial+witness") finite_trivial.insert(r.statement_id);
        if (r.label == "informational") {
            ++informational;
            CHECK(r.statement_id == "info-top-module");
        }
    }
    CHECK(finite_trivial ==
          std::set<std::string>{"thm-fg-quasicompact.witness", "thm-fg-quasicompact.finite-subfamily",
                                "thm-maximal-quasicompact", "cor-quasicompact-classes",
                                "thm-noetherian-quasicompact", "cor-noetherian-space",
                                "cor-artinian"});
    CHECK(informational == 29 * 14);
}

TEST_CASE("verdict spot checks against hand-worked spaces") {
    Corpus corpus = harness::default_corpus();
    auto one = [&](const char* id, unsigned n, std::vector<unsigned> orders, ClassName c) {
        return harness::run_statement(id, Instance{n, std::move(orders), c, ""}, corpus);
    };
    CHECK(one("thm-t1.bwd", 4, {4}, ClassName::proper).verdict == Verdict::pass);
    CHECK(one("cor-artinian", 6, {6}, ClassName::maximal).verdict == Verdict::pass);
    CHECK(one("cor-artinian", 4, {4}, ClassName::proper).verdict == Verdict::hypothesis_not_met);
    CHECK(one("thm-connected-if-zero", 6, {6}, ClassName::maximal).verdict ==
          Verdict::hypothesis_not_met);
    CHECK(one("lemma-strong-disconnect.disconnected", 6, {6}, ClassName::maximal).verdict ==
          Verdict::pass);
    CHECK(one("info-top-module", 2, {2, 2}, ClassName::prime).witness ==
          "top=false; C(⟨(1,0)⟩) union C(⟨(0,1)⟩) is not a subbasis set");
    CHECK(one("info-top-module", 4, {4}, ClassName::proper).witness == "top=true");
}

TEST_CASE("run_statement reproduces the sweep entry by entry") {
    Corpus corpus = harness::default_corpus();
    auto results = harness::run_all(corpus);
    int checked = 0;
    for (const auto& r : results) {
        // sample a spread of statements, including the seeded-family ones
        if (r.statement_id != "lemma-closure-props.3.families" &&
            r.statement_id != "thm-fg-quasicompact.finite-subfamily" &&
            r.statement_id != "prop-t0" && r.statement_id != "prop-conmap.continuity")
            continue;
        if (++checked > 40) break;
        CheckResult again = harness::run_statement(r.statement_id, r.instance, corpus);
        CHECK(again.verdict == r.verdict);
        CHECK(again.witness == r.witness);
        CHECK(again.label == r.label);
    }
    CHECK(checked > 10);
}

TEST_CASE("reports are deterministic") {
    Corpus corpus = harness::default_corpus();
    auto a = harness::report_json(harness::run_all(corpus), corpus);
    auto b = harness::report_json(harness::run_all(corpus), corpus);
    CHECK(a.dump() == b.dump());

    // schema-stable key order at every level
    std::vector<std::string> top;
    for (auto it = a.begin(); it != a.end(); ++it) top.push_back(it.key());
    CHECK(top == std::vector<std::string>{"tool_version", "corpus", "summary", "results"});
    const auto& first = a["results"][0];
    CHECK(first.contains("statement"));
    CHECK(first.contains("instance"));
    CHECK(first.contains("verdict"));
}

TEST_CASE("every fault channel is caught by the sweep") {
    struct Channel {
        fault::Fault kind;
        std::string expect;  // a statement that must be among the failures
    };
    std::vector<Channel> channels{
        {fault::Fault::prime_drop_ann_disjunct, "class-implications.maximal-implies-prime"},
        {fault::Fault::closure_union, "lemma-irreducible-subbasis"},
        {fault::Fault::subbasis_drop_zero, "lemma-closure-props.2"},
        {fault::Fault::sum_returns_intersection, "lemma-closure-props.3"},
        {fault::Fault::t1_always_true, "thm-t1.fwd"},
        {fault::Fault::omega_returns_argument, "thm-sobriety.fwd"},
    };

    // keep the mutated sweeps small: cyclic moduli up to 12 plus one product
    Corpus corpus;
    for (unsigned n = 2; n <= 12; ++n) corpus.modules.push_back({n, {n}});
    corpus.modules.push_back({2, {2, 2}});
    corpus.include_homs = false;

    for (const auto& ch : channels) {
        fault::Scoped guard(ch.kind);
        auto results = harness::run_all(corpus);
        std::set<std::string> failing;
        for (const auto& r : results)
            if (r.verdict == Verdict::fail) failing.insert(r.statement_id);
        INFO("fault ", fault::name(ch.kind));
        CHECK(!failing.empty());
        CHECK(failing.count(ch.expect) == 1);
    }

    // and with no fault installed the same corpus is clean
    auto clean = harness::run_all(corpus);
    CHECK(verdict_counts(clean)[Verdict::fail] == 0);
}

TEST_CASE("failing instances shrink to a minimal module") {
    Corpus corpus = harness::default_corpus();
    fault::Scoped guard(fault::Fault::prime_drop_ann_disjunct);
    Instance big{12, {2, 6}, std::nullopt, ""};
    CheckResult r =
        harness::run_statement("class-implications.maximal-implies-prime", big, corpus);
    REQUIRE(r.verdict == Verdict::fail);
    CheckResult small = harness::minimize(r, corpus);
    CHECK(small.verdict == Verdict::fail);
    CHECK(small.instance.ring == 2);
    CHECK(small.instance.orders == std::vector<unsigned>{2});
}

TEST_CASE("minimize rejects non-failures") {
    Corpus corpus = harness::default_corpus();
    CheckResult ok = harness::run_statement(
        "prop-t0", Instance{6, {6}, ClassName::proper, ""}, corpus);
    REQUIRE(ok.verdict == Verdict::pass);
    CHECK_THROWS_AS(harness::minimize(ok, corpus), input_error);
}

TEST_CASE("bad requests are rejected before any checking runs") {
    Corpus corpus = harness::default_corpus();
    CHECK_THROWS_AS(harness::run_statement("no-such-statement",
                                           Instance{6, {6}, ClassName::proper, ""}, corpus),
                    input_error);
    // space statements need a class
    CHECK_THROWS_AS(
        harness::run_statement("prop-t0", Instance{6, {6}, std::nullopt, ""}, corpus),
        input_error);
    // cor-sober-classes does not apply to the maximal class
    CHECK_THROWS_AS(harness::run_statement("cor-sober-classes",
                                           Instance{6, {6}, ClassName::maximal, ""}, corpus),
                    input_error);
    // unknown hom fixture name
    Instance hom_inst;
    hom_inst.hom = "no such fixture";
    CHECK_THROWS_AS(harness::run_statement("prop-conmap.continuity", hom_inst, corpus),
                    input_error);
}

TEST_CASE("cap overruns surface as skipped, not failures") {
    Corpus corpus;
    corpus.modules = {{6, {6}}};
    corpus.caps = Caps{4, 512};  // Z/6 has 6 elements
    corpus.include_homs = false;
    auto results = harness::run_all(corpus);
    REQUIRE(results.size() == 1);
    CHECK(results[0].verdict == Verdict::skipped);
    CHECK(results[0].statement_id == "corpus-instance");
}

TEST_CASE("restricting to one class trims the sweep") {
    Corpus corpus;
    corpus.modules = {{6, {6}}};
    corpus.include_homs = false;
    corpus.only_class = ClassName::maximal;
    auto results = harness::run_all(corpus);
    for (const auto& r : results) {
        REQUIRE(r.instance.cls.has_value());
        CHECK(*r.instance.cls == ClassName::maximal);
    }
    CHECK(verdict_counts(results)[Verdict::fail] == 0);
}
