#include "doctest.h"

#include <map>
#include <set>
#include <string>
#include <vector>

#include "modtop/classes.hpp"
#include "modtop/errors.hpp"
#include "modtop/lattice.hpp"

using namespace modtop;

namespace {

int id_of_gens(const Lattice& lat, const std::vector<Element>& gens) {
    std::vector<unsigned> idx;
    for (const Element& e : gens) idx.push_back(lat.mod.index_of(e));
    return lat.id_of(generate(lat.mod, idx));
}

std::set<std::string> classes_of(const Lattice& lat, int id) {
    std::set<std::string> out;
    for (ClassName c : all_classes())
        if (is_in_class(lat, id, c)) out.insert(to_string(c));
    return out;
}

const std::set<std::string> kAll14 = {
    "proper",      "maximal",       "prime",
    "semiprime",   "extraordinary", "primary",
    "radical",     "strongly-irreducible", "irreducible",
    "completely-irreducible", "minimal", "minimal-prime",
    "cyclic",      "finitely-generated"};

}  // namespace

TEST_CASE("class name vocabulary and parsing") {
    std::set<std::string> names;
    for (ClassName c : all_classes()) {
        names.insert(to_string(c));
        CHECK(parse_class(to_string(c)) == c);
    }
    CHECK(names == kAll14);
    CHECK_FALSE(parse_class("Prime").has_value());
    CHECK_FALSE(parse_class("").has_value());
}

// Hand-worked memberships from the definitions, for three small modules.

TEST_CASE("membership table for Z/6") {
    LatticePtr lat = enumerate_submodules(make_module(make_ring(6), {6}));
    REQUIRE(lat->size() == 4);
    int zero = lat->zero_id;
    int two = id_of_gens(*lat, {{2}});
    int three = id_of_gens(*lat, {{3}});

    CHECK(classes_of(*lat, zero) ==
          std::set<std::string>{"proper", "semiprime", "radical", "cyclic",
                                "finitely-generated"});
    CHECK(classes_of(*lat, two) == kAll14);
    CHECK(classes_of(*lat, three) == kAll14);
    CHECK(classes_of(*lat, lat->full_id).empty());
}

TEST_CASE("membership table for Z/4") {
    LatticePtr lat = enumerate_submodules(make_module(make_ring(4), {4}));
    REQUIRE(lat->size() == 3);
    int zero = lat->zero_id;
    int two = id_of_gens(*lat, {{2}});

    // 0 is not semiprime here: the only prime is <2>, so rad(0) = <2> != 0.
    // It is extraordinary vacuously, and (strongly) irreducible in the chain.
    CHECK(classes_of(*lat, zero) ==
          std::set<std::string>{"proper", "extraordinary", "primary", "strongly-irreducible",
                                "irreducible", "completely-irreducible", "cyclic",
                                "finitely-generated"});
    CHECK(classes_of(*lat, two) == kAll14);
    CHECK(classes_of(*lat, lat->full_id).empty());
}

TEST_CASE("membership table for the plane over Z/2") {
    LatticePtr lat = enumerate_submodules(make_module(make_ring(2), {2, 2}));
    REQUIRE(lat->size() == 5);
    int zero = lat->zero_id;

    // 0 = intersection of two distinct lines: semiprime but not irreducible.
    CHECK(classes_of(*lat, zero) ==
          std::set<std::string>{"proper", "prime", "semiprime", "primary", "radical", "cyclic",
                                "finitely-generated"});

    // lines meet pairwise in 0, so no line is strongly irreducible or
    // extraordinary, yet each is maximal, hence prime and (completely)
    // irreducible.
    std::set<std::string> line_classes = kAll14;
    line_classes.erase("extraordinary");
    line_classes.erase("strongly-irreducible");
    for (Element g : std::vector<Element>{{1, 0}, {0, 1}, {1, 1}}) {
        int line = id_of_gens(*lat, {g});
        CHECK(classes_of(*lat, line) == line_classes);
    }
    CHECK(classes_of(*lat, lat->full_id).empty());
}

TEST_CASE("implications between classes hold on every corpus-shaped module") {
    for (auto [n, orders] : std::vector<std::pair<unsigned, std::vector<unsigned>>>{
             {12, {12}}, {16, {16}}, {18, {18}}, {2, {2, 2, 2}}, {4, {2, 4}}, {4, {4, 4}},
             {12, {2, 6}}}) {
        LatticePtr lat = enumerate_submodules(make_module(make_ring(n), orders));
        for (int i = 0; i < lat->size(); ++i) {
            if (i == lat->full_id) continue;
            auto has = [&](ClassName c) { return is_in_class(*lat, i, c); };
            if (has(ClassName::maximal)) {
                CHECK(has(ClassName::prime));
                CHECK(has(ClassName::completely_irreducible));
            }
            if (has(ClassName::prime)) {
                CHECK(has(ClassName::semiprime));
                CHECK(has(ClassName::primary));
                CHECK(has(ClassName::radical));
            }
            if (has(ClassName::semiprime)) CHECK(has(ClassName::radical));
            if (has(ClassName::strongly_irreducible)) CHECK(has(ClassName::irreducible));
            CHECK(has(ClassName::irreducible) == has(ClassName::completely_irreducible));
            CHECK(has(ClassName::minimal_prime) ==
                  (has(ClassName::minimal) && has(ClassName::prime)));
            if (has(ClassName::cyclic)) CHECK(has(ClassName::finitely_generated));
            CHECK(has(ClassName::proper));
            CHECK(has(ClassName::finitely_generated));
        }
    }
}

TEST_CASE("primes of cyclic modules are generated by prime divisors") {
    for (unsigned n : {4u, 6u, 12u, 18u, 24u}) {
        LatticePtr lat = enumerate_submodules(make_module(make_ring(n), {n}));
        std::set<int> expected;
        for (unsigned p = 2; p <= n; ++p) {
            bool is_p = p > 1;
            for (unsigned d = 2; d * d <= p; ++d)
                if (p % d == 0) { is_p = false; break; }
            if (is_p && n % p == 0) expected.insert(lat->id_of(cyclic_submodule(lat->mod, p)));
        }
        std::vector<int> got = prime_ids(*lat);
        CHECK(std::set<int>(got.begin(), got.end()) == expected);
    }
    // a simple module: 0 is prime
    LatticePtr l7 = enumerate_submodules(make_module(make_ring(7), {7}));
    CHECK(prime_ids(*l7) == std::vector<int>{l7->zero_id});
}

TEST_CASE("radical computation") {
    LatticePtr lat = enumerate_submodules(make_module(make_ring(12), {12}));
    int zero = lat->zero_id;
    int two = lat->id_of(cyclic_submodule(lat->mod, 2));
    int three = lat->id_of(cyclic_submodule(lat->mod, 3));
    int four = lat->id_of(cyclic_submodule(lat->mod, 4));
    int six = lat->id_of(cyclic_submodule(lat->mod, 6));

    CHECK(radical_id(*lat, zero) == six);   // <2> meet <3> = <6>
    CHECK(radical_id(*lat, four) == two);   // only <2> contains <4>
    CHECK(radical_id(*lat, six) == six);    // already an intersection of primes
    CHECK(radical_id(*lat, two) == two);
    CHECK(radical_id(*lat, three) == three);
    // nothing above the full module: empty intersection convention
    CHECK(radical_id(*lat, lat->full_id) == lat->full_id);
}

TEST_CASE("vector spaces: every proper subspace is prime") {
    for (auto [n, orders] : std::vector<std::pair<unsigned, std::vector<unsigned>>>{
             {2, {2, 2}}, {2, {2, 2, 2}}, {3, {3, 3}}, {5, {5}}}) {
        LatticePtr lat = enumerate_submodules(make_module(make_ring(n), orders));
        for (int i = 0; i < lat->size(); ++i) {
            if (i == lat->full_id) continue;
            CHECK(is_in_class(*lat, i, ClassName::prime));
        }
    }
}

TEST_CASE("class membership rejects out-of-range ids") {
    LatticePtr lat = enumerate_submodules(make_module(make_ring(4), {4}));
    CHECK_THROWS_AS(is_in_class(*lat, -1, ClassName::proper), input_error);
    CHECK_THROWS_AS(is_in_class(*lat, lat->size(), ClassName::proper), input_error);
}
