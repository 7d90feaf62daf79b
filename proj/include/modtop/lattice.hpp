#pragma once

#include <map>
#include <memory>
#include <vector>

#include "modtop/ring.hpp"

namespace modtop {

/// Resource caps for lattice enumeration; both can be raised from the CLI.
struct Caps {
    unsigned max_elements = 256;
    unsigned max_submodules = 512;
};

/// The submodule generated by a set of elements (worklist saturation under
/// addition and scalar action). Elements are given as indices.
Bitset generate(const Module& m, const std::vector<unsigned>& gens);

/// The cyclic submodule <g> = Rg.
Bitset cyclic_submodule(const Module& m, unsigned g);

/// The complete submodule lattice of a module. Submodules are identified by
/// their index in `subs`, which is sorted by (cardinality, lexicographic
/// bitset); id 0 is the zero submodule and the last id is M itself.
struct Lattice {
    Module mod;
    Caps caps;
    std::vector<Bitset> subs;
    std::vector<Bitset> below;  // below[i]: ids j with subs[j] subset of subs[i]
    std::vector<Bitset> above;  // above[i]: ids j with subs[i] subset of subs[j]
    int zero_id = 0;
    int full_id = 0;

    // Dense add/scalar tables for the hot loops.
    std::vector<std::uint16_t> add_tab;   // order*order
    std::vector<std::uint16_t> smul_tab;  // modulus*order

    unsigned add(unsigned a, unsigned b) const { return add_tab[a * mod.order + b]; }
    unsigned smul(unsigned r, unsigned a) const { return smul_tab[r * mod.order + a]; }

    int size() const { return static_cast<int>(subs.size()); }
    bool leq(int a, int b) const { return above[a].test(b); }

    /// Id lookup of an element bitset; throws input_error if absent.
    int id_of(const Bitset& elems) const;

    /// Join N + N' and meet N ∩ N' by id.
    int sum_id(int a, int b) const;
    int intersect_id(int a, int b) const;

    /// Ids of the maximal (resp. minimal nonzero) proper submodules.
    std::vector<int> maximal_ids() const;

private:
    std::map<Bitset, int> index_;
    friend std::shared_ptr<const Lattice> enumerate_submodules(const Module&, const Caps&);
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Enumerate every submodule: all cyclic submodules, then closure under
/// pairwise joins. Throws cap_error when a cap is exceeded.
LatticePtr enumerate_submodules(const Module& m, const Caps& caps = {});

/// Sum of two submodules given as element bitsets (elementwise sums; both
/// arguments must be subgroups for this to be the join).
Bitset subgroup_sum(const Module& m, const Bitset& a, const Bitset& b);

}  // namespace modtop
