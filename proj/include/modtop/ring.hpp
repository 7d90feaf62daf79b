#pragma once

#include <vector>

#include "modtop/bitset.hpp"

namespace modtop {

/// The coefficient ring Z/nZ, n >= 1. Scalars are residues 0..n-1.
struct Ring {
    unsigned modulus = 1;
    bool operator==(const Ring& o) const { return modulus == o.modulus; }
};

Ring make_ring(unsigned n);

/// Elements are coordinate tuples; each coordinate i lives in Z/orders[i].
using Element = std::vector<unsigned>;

/// A finite module Z/d1 x ... x Z/dk over Z/nZ with every di | n.
/// Elements are addressed by a mixed-radix index (first coordinate fastest).
struct Module {
    Ring ring;
    std::vector<unsigned> orders;
    unsigned order = 1;             // |M| = product of orders
    std::vector<unsigned> strides;  // strides[i] = product of orders[0..i)

    unsigned index_of(const Element& e) const;
    Element element_at(unsigned idx) const;

    unsigned add(unsigned a, unsigned b) const;
    unsigned scalar(unsigned r, unsigned a) const;  // r is reduced mod n
    bool operator==(const Module& o) const { return ring == o.ring && orders == o.orders; }
};

/// Throws input_error unless every order divides the ring modulus.
/// An empty order list yields the zero module.
Module make_module(Ring ring, std::vector<unsigned> orders);

/// R-scalar action on coordinate tuples; r may exceed n and is reduced first.
Element scalar_mul(const Module& m, unsigned r, const Element& e);

/// An ideal of Z/nZ in canonical divisor form: the ideal gZ/nZ with g | n.
/// g = n is the zero ideal, g = 1 the whole ring.
struct Ideal {
    unsigned modulus = 1;
    unsigned generator = 1;
    bool operator==(const Ideal& o) const = default;
    unsigned size() const { return modulus / generator; }
    bool contains(unsigned r) const { return r % generator == 0; }
};

/// (N : M) = { r in Z/nZ : r*M subset of N } for a subset N given as an
/// element bitset. The result is always an ideal; N need not be proper.
Ideal annihilator(const Module& m, const Bitset& n_elems);

/// Membership bitset of an ideal inside Z/nZ (for exhaustive checks).
Bitset ideal_elements(const Ideal& ideal);

}  // namespace modtop
