#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "modtop/classes.hpp"
#include "modtop/errors.hpp"
#include "modtop/space.hpp"

using namespace modtop;

namespace {

StructureSpace space_of(unsigned n, std::vector<unsigned> orders, ClassName c) {
    return build_space(enumerate_submodules(make_module(make_ring(n), orders)), c);
}

PointSet points_from(const StructureSpace& sp, std::initializer_list<int> idx) {
    PointSet s = sp.empty_set();
    for (int p : idx) s.set(static_cast<std::size_t>(p));
    return s;
}

}  // namespace

TEST_CASE("prime space of the plane over Z/2") {
    StructureSpace sp = space_of(2, {2, 2}, ClassName::prime);
    REQUIRE(sp.point_count() == 4);  // 0 and the three lines
    int zero_pt = sp.point_of_sub[sp.lat->zero_id];
    REQUIRE(zero_pt >= 0);

    // distinct subbasis sets: D(M) itself, three singleton lines, empty
    CHECK(sp.subbasis.size() == 5);

    // closure of {0} is everything; each line is closed
    for (int p = 0; p < 4; ++p) {
        if (p == zero_pt)
            CHECK(sp.point_closure[p] == sp.full_set());
        else
            CHECK(sp.point_closure[p].count() == 1);
    }

    SeparationReport sep = separation_report(sp);
    CHECK(sep.t0);
    CHECK_FALSE(sep.t1);
    CHECK(sep.sober);
    CHECK(is_spectral(sp));
    CHECK(is_connected(sp));
    CHECK_FALSE(strongly_disconnects(sp).has_value());

    // closed sets: all 8 sets of lines, plus the whole space
    CHECK(all_closed_sets(sp).size() == 9);

    // whole space is irreducible with 0 as its unique generic point
    IrreducibleReport rep = irreducible_and_generics(sp, sp.full_set());
    CHECK(rep.irreducible);
    CHECK(rep.generic_points == std::vector<int>{zero_pt});

    // two lines form a reducible closed set
    std::vector<int> lines;
    for (int p = 0; p < 4; ++p)
        if (p != zero_pt) lines.push_back(p);
    IrreducibleReport two = irreducible_and_generics(sp, points_from(sp, {lines[0], lines[1]}));
    CHECK_FALSE(two.irreducible);
    CHECK(two.generic_points.empty());
    CHECK(two.decomposition.has_value());

    TopReport top = is_top_module(sp);
    CHECK_FALSE(top.is_top);
    REQUIRE(top.witness.has_value());
    // the witness pair must be two distinct lines (maximal submodules)
    CHECK(top.witness->first != top.witness->second);
    CHECK(sp.lat->above[top.witness->first].count() == 2);
    CHECK(sp.lat->above[top.witness->second].count() == 2);
}

TEST_CASE("proper space of Z/4 is a two-point chain") {
    StructureSpace sp = space_of(4, {4}, ClassName::proper);
    REQUIRE(sp.point_count() == 2);
    const Lattice& lat = *sp.lat;
    int zero_pt = sp.point_of_sub[lat.zero_id];
    int two_pt = 1 - zero_pt;

    CHECK(sp.subbasis.size() == 3);  // full, singleton, empty
    CHECK(sp.point_closure[zero_pt] == sp.full_set());
    CHECK(sp.point_closure[two_pt].count() == 1);

    SeparationReport sep = separation_report(sp);
    CHECK(sep.t0);
    CHECK_FALSE(sep.t1);
    CHECK(sep.sober);
    CHECK(is_spectral(sp));
    CHECK(is_connected(sp));
    CHECK(is_top_module(sp).is_top);
    CHECK(all_closed_sets(sp).size() == 3);

    // strict specialization: exactly 0 -> <2>
    std::set<std::pair<int, int>> strict;
    for (auto [p, q] : specialization_preorder(sp))
        if (p != q) strict.insert({p, q});
    CHECK(strict == std::set<std::pair<int, int>>{{zero_pt, two_pt}});

    // omega: N^omega = N on D(M); empty C(M) gives the full module
    CHECK(omega_id(sp, lat.zero_id) == lat.zero_id);
    CHECK(omega_id(sp, lat.full_id) == lat.full_id);
}

TEST_CASE("maximal space of Z/6 is discrete and strongly disconnected") {
    StructureSpace sp = space_of(6, {6}, ClassName::maximal);
    REQUIRE(sp.point_count() == 2);

    SeparationReport sep = separation_report(sp);
    CHECK(sep.t0);
    CHECK(sep.t1);
    CHECK(sep.sober);
    CHECK_FALSE(is_connected(sp));

    auto sd = strongly_disconnects(sp);
    REQUIRE(sd.has_value());
    CHECK(sd->first.count() == 1);
    CHECK(sd->second.count() == 1);
    CHECK_FALSE(sd->first.intersects(sd->second));
    CHECK((sd->first | sd->second) == sp.full_set());

    CHECK(is_top_module(sp).is_top);  // the union of the two singletons is C(0)
}

TEST_CASE("minimal space of Z/8: T1 with a non-maximal point, and an empty C(N)") {
    // the smallest witnesses that the blanket forms of two statements fail:
    // D_minimal(Z/8) = {<4>} is discrete (hence T1) but <4> is not maximal,
    // and C(<2>) is empty although <2> is a proper submodule.
    StructureSpace sp = space_of(8, {8}, ClassName::minimal);
    const Lattice& lat = *sp.lat;
    REQUIRE(sp.point_count() == 1);
    int four = lat.id_of(cyclic_submodule(lat.mod, 4));
    int two = lat.id_of(cyclic_submodule(lat.mod, 2));
    CHECK(sp.point_of_sub[four] == 0);

    CHECK(separation_report(sp).t1);
    CHECK_FALSE(is_in_class(lat, four, ClassName::maximal));

    CHECK(sp.csub(two).none());
    CHECK(two != lat.full_id);
}

TEST_CASE("empty structure space") {
    StructureSpace sp = space_of(2, {2}, ClassName::minimal);  // Z/2 has no minimal submodule
    CHECK(sp.point_count() == 0);
    SeparationReport sep = separation_report(sp);
    CHECK(sep.t0);
    CHECK(sep.t1);
    CHECK(sep.sober);
    CHECK(all_closed_sets(sp).size() == 1);  // just the empty set
}

TEST_CASE("closure is a closure operator and closed sets match brute force") {
    StructureSpace sp = space_of(12, {12}, ClassName::proper);
    REQUIRE(sp.point_count() == 5);
    std::size_t count_closed = 0;
    for (unsigned mask = 0; mask < (1u << 5); ++mask) {
        PointSet a = sp.empty_set();
        for (int p = 0; p < 5; ++p)
            if (mask >> p & 1u) a.set(static_cast<std::size_t>(p));
        PointSet ca = closure(sp, a);
        CHECK(a.subset_of(ca));
        CHECK(closure(sp, ca) == ca);
        CHECK(is_closed(sp, a) == (ca == a));
        if (ca == a) ++count_closed;
        for (unsigned mask2 = 0; mask2 < (1u << 5); ++mask2) {
            if (mask2 == 0 || mask2 == mask) continue;
            PointSet b = sp.empty_set();
            for (int p = 0; p < 5; ++p)
                if (mask2 >> p & 1u) b.set(static_cast<std::size_t>(p));
            CHECK(closure(sp, a | b) == (ca | closure(sp, b)));
        }
    }
    CHECK(all_closed_sets(sp).size() == count_closed);
}

TEST_CASE("closed-set enumeration matches brute force on a bigger lattice") {
    StructureSpace sp = space_of(2, {2, 2, 2}, ClassName::proper);
    REQUIRE(sp.point_count() == 15);
    std::size_t count_closed = 0;
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        PointSet a = sp.empty_set();
        for (int p = 0; p < 15; ++p)
            if (mask >> p & 1u) a.set(static_cast<std::size_t>(p));
        if (is_closed(sp, a)) ++count_closed;
    }
    CHECK(all_closed_sets(sp).size() == count_closed);
    CHECK_THROWS_AS(all_closed_sets(sp, 4), cap_error);
}

TEST_CASE("omega fixes every member of the class") {
    for (ClassName c : {ClassName::proper, ClassName::prime, ClassName::semiprime}) {
        StructureSpace sp = space_of(12, {12}, c);
        for (int n = 0; n < sp.lat->size(); ++n)
            if (sp.point_of_sub[n] >= 0) CHECK(omega_id(sp, n) == n);
    }
    // omega can move a non-member: in D_prime(Z/4), C(0) = {<2>} so 0^omega = <2>
    StructureSpace sp = space_of(4, {4}, ClassName::prime);
    int two = sp.lat->id_of(cyclic_submodule(sp.lat->mod, 2));
    CHECK(omega_id(sp, sp.lat->zero_id) == two);
}

TEST_CASE("irreducibility requires a nonempty closed set") {
    StructureSpace sp = space_of(4, {4}, ClassName::proper);
    CHECK_THROWS_AS(irreducible_and_generics(sp, sp.empty_set()), input_error);
    int zero_pt = sp.point_of_sub[sp.lat->zero_id];
    PointSet just_zero = sp.empty_set();
    just_zero.set(static_cast<std::size_t>(zero_pt));
    CHECK_FALSE(is_closed(sp, just_zero));  // its closure adds <2>
    CHECK_THROWS_AS(irreducible_and_generics(sp, just_zero), input_error);
}

TEST_CASE("every subbasis set is the closure of its witness point") {
    for (auto [n, orders, c] :
         std::vector<std::tuple<unsigned, std::vector<unsigned>, ClassName>>{
             {12, {12}, ClassName::proper},
             {2, {2, 2}, ClassName::prime},
             {4, {2, 4}, ClassName::proper}}) {
        StructureSpace sp = space_of(n, orders, c);
        for (int i = 0; i < sp.lat->size(); ++i) {
            int p = sp.point_of_sub[i];
            if (p < 0) continue;
            PointSet single = sp.empty_set();
            single.set(static_cast<std::size_t>(p));
            CHECK(closure(sp, single) == sp.csub(i));
        }
    }
}
