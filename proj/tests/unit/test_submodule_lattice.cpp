#include "doctest.h"

#include <set>
#include <vector>

#include "modtop/errors.hpp"
#include "modtop/lattice.hpp"

using namespace modtop;

namespace {

// Test-local oracles, independent of the enumeration under test.

unsigned divisor_count(unsigned n) {
    unsigned c = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

bool closed_under_add(const Module& m, unsigned mask) {
    if (!(mask & 1u)) return false;  // zero element has index 0
    for (unsigned a = 0; a < m.order; ++a) {
        if (!(mask >> a & 1u)) continue;
        for (unsigned b = a; b < m.order; ++b) {
            if (!(mask >> b & 1u)) continue;
            if (!(mask >> m.add(a, b) & 1u)) return false;
        }
    }
    return true;
}

// Every additive-closed subset containing 0 is scalar-closed too (the scalar
// action is iterated addition), so this enumerates exactly the submodules.
std::set<unsigned> brute_force_submodules(const Module& m) {
    REQUIRE(m.order <= 16);
    std::set<unsigned> found;
    for (unsigned mask = 1; mask < (1u << m.order); ++mask)
        if (closed_under_add(m, mask)) found.insert(mask);
    return found;
}

unsigned mask_of(const Bitset& b) {
    unsigned mask = 0;
    for (std::size_t i : b.bits()) mask |= 1u << i;
    return mask;
}

std::set<unsigned> closure_oracle(const Module& m, std::vector<unsigned> gens) {
    std::set<unsigned> s{0};
    s.insert(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<unsigned> cur(s.begin(), s.end());
        for (unsigned a : cur)
            for (unsigned b : cur)
                if (s.insert(m.add(a, b)).second) grew = true;
    }
    return s;
}

}  // namespace

TEST_CASE("cyclic module lattices match the divisor count") {
    for (unsigned n = 2; n <= 24; ++n) {
        LatticePtr lat = enumerate_submodules(make_module(make_ring(n), {n}));
        CHECK(lat->size() == static_cast<int>(divisor_count(n)));
    }
}

TEST_CASE("lattice agrees with brute-force subset enumeration") {
    for (auto [n, orders] : std::vector<std::pair<unsigned, std::vector<unsigned>>>{
             {12, {12}}, {2, {2, 2}}, {2, {2, 2, 2}}, {3, {3, 3}}, {4, {2, 4}}, {16, {16}}}) {
        Module m = make_module(make_ring(n), orders);
        std::set<unsigned> expected = brute_force_submodules(m);
        LatticePtr lat = enumerate_submodules(m);
        std::set<unsigned> got;
        for (int i = 0; i < lat->size(); ++i) got.insert(mask_of(lat->subs[i]));
        CHECK(got == expected);
    }
}

TEST_CASE("known subgroup counts for the product modules") {
    auto count = [](unsigned n, std::vector<unsigned> orders) {
        return enumerate_submodules(make_module(make_ring(n), orders))->size();
    };
    CHECK(count(2, {2, 2}) == 5);      // 0, three lines, plane
    CHECK(count(2, {2, 2, 2}) == 16);  // 1 + 7 + 7 + 1
    CHECK(count(3, {3, 3}) == 6);      // 0, four lines, plane
    CHECK(count(4, {2, 4}) == 8);
    CHECK(count(12, {2, 6}) == 10);
    CHECK(count(4, {4, 4}) == 15);
}

TEST_CASE("canonical order, ids, and order relation") {
    LatticePtr lat = enumerate_submodules(make_module(make_ring(12), {12}));
    CHECK(lat->zero_id == 0);
    CHECK(lat->full_id == lat->size() - 1);
    CHECK(lat->subs[lat->zero_id].count() == 1);
    CHECK(lat->subs[lat->full_id].count() == 12);
    for (int i = 0; i + 1 < lat->size(); ++i)
        CHECK(lat->subs[i].count() <= lat->subs[i + 1].count());
    for (int a = 0; a < lat->size(); ++a)
        for (int b = 0; b < lat->size(); ++b) {
            CHECK(lat->leq(a, b) == lat->subs[a].subset_of(lat->subs[b]));
            CHECK(lat->above[a].test(b) == lat->leq(a, b));
            CHECK(lat->below[b].test(a) == lat->leq(a, b));
        }
}

TEST_CASE("sum and intersection against the closure oracle") {
    for (auto [n, orders] : std::vector<std::pair<unsigned, std::vector<unsigned>>>{
             {12, {12}}, {4, {2, 4}}, {2, {2, 2, 2}}}) {
        Module m = make_module(make_ring(n), orders);
        LatticePtr lat = enumerate_submodules(m);
        for (int a = 0; a < lat->size(); ++a)
            for (int b = 0; b < lat->size(); ++b) {
                std::vector<unsigned> gens;
                for (std::size_t x : lat->subs[a].bits()) gens.push_back(unsigned(x));
                for (std::size_t x : lat->subs[b].bits()) gens.push_back(unsigned(x));
                std::set<unsigned> want = closure_oracle(m, gens);
                const Bitset& got = lat->subs[lat->sum_id(a, b)];
                REQUIRE(got.count() == want.size());
                for (unsigned x : want) CHECK(got.test(x));
                const Bitset& meet = lat->subs[lat->intersect_id(a, b)];
                CHECK(meet == (lat->subs[a] & lat->subs[b]));
            }
    }
}

TEST_CASE("maximal submodules") {
    {
        LatticePtr lat = enumerate_submodules(make_module(make_ring(12), {12}));
        std::set<unsigned> want;  // <2> and <3> as element masks
        want.insert(mask_of(generate(lat->mod, {2})));
        want.insert(mask_of(generate(lat->mod, {3})));
        std::set<unsigned> got;
        for (int m : lat->maximal_ids()) got.insert(mask_of(lat->subs[m]));
        CHECK(got == want);
    }
    {
        LatticePtr lat = enumerate_submodules(make_module(make_ring(2), {2, 2}));
        auto maxes = lat->maximal_ids();
        CHECK(maxes.size() == 3);
        for (int m : maxes) CHECK(lat->subs[m].count() == 2);
    }
}

TEST_CASE("generators and cyclic submodules") {
    Module m = make_module(make_ring(12), {12});
    Bitset two = cyclic_submodule(m, 2);
    CHECK(two.count() == 6);
    for (unsigned x : {0u, 2u, 4u, 6u, 8u, 10u}) CHECK(two.test(x));

    Module p = make_module(make_ring(4), {2, 4});
    Bitset diag = cyclic_submodule(p, p.index_of({1, 1}));
    CHECK(diag.count() == 4);
    CHECK(diag.test(p.index_of({0, 0})));
    CHECK(diag.test(p.index_of({1, 1})));
    CHECK(diag.test(p.index_of({0, 2})));
    CHECK(diag.test(p.index_of({1, 3})));

    std::set<unsigned> want = closure_oracle(p, {p.index_of({1, 0}), p.index_of({0, 2})});
    Bitset got = generate(p, {p.index_of({1, 0}), p.index_of({0, 2})});
    CHECK(got.count() == want.size());
    for (unsigned x : want) CHECK(got.test(x));
}

TEST_CASE("resource caps throw cap_error") {
    CHECK_THROWS_AS(enumerate_submodules(make_module(make_ring(17), {17}), Caps{16, 512}),
                    cap_error);
    CHECK_THROWS_AS(
        enumerate_submodules(make_module(make_ring(2), {2, 2, 2, 2, 2, 2}), Caps{256, 512}),
        cap_error);
    // the default caps admit every corpus module
    CHECK_NOTHROW(enumerate_submodules(make_module(make_ring(4), {4, 4})));
}
