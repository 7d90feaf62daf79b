#include "modtop/ring.hpp"

#include <numeric>
#include <string>

#include "modtop/errors.hpp"

namespace modtop {

Ring make_ring(unsigned n) {
    if (n == 0) throw input_error("ring modulus must be >= 1");
    return Ring{n};
}

unsigned Module::index_of(const Element& e) const {
    if (e.size() != orders.size()) throw input_error("element arity mismatch");
    unsigned idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (e[i] >= orders[i]) throw input_error("coordinate out of range");
        idx += e[i] * strides[i];
    }
    return idx;
}

Element Module::element_at(unsigned idx) const {
    Element e(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        e[i] = (idx / strides[i]) % orders[i];
    }
    return e;
}

unsigned Module::add(unsigned a, unsigned b) const {
    unsigned idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        unsigned xa = (a / strides[i]) % orders[i];
        unsigned xb = (b / strides[i]) % orders[i];
        idx += ((xa + xb) % orders[i]) * strides[i];
    }
    return idx;
}

unsigned Module::scalar(unsigned r, unsigned a) const {
    r %= ring.modulus;
    unsigned idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        unsigned xa = (a / strides[i]) % orders[i];
        idx += static_cast<unsigned>((static_cast<unsigned long long>(r) * xa) % orders[i]) *
               strides[i];
    }
    return idx;
}

Module make_module(Ring ring, std::vector<unsigned> orders) {
    Module m;
    m.ring = ring;
    m.orders = std::move(orders);
    m.strides.resize(m.orders.size());
    unsigned long long prod = 1;
    for (std::size_t i = 0; i < m.orders.size(); ++i) {
        unsigned d = m.orders[i];
        if (d == 0) throw input_error("cyclic order must be >= 1");
        if (ring.modulus % d != 0)
            throw input_error("cyclic order " + std::to_string(d) +
                              " does not divide ring modulus " + std::to_string(ring.modulus));
        m.strides[i] = static_cast<unsigned>(prod);
        prod *= d;
        if (prod > (1u << 30)) throw input_error("module order overflow");
    }
    m.order = static_cast<unsigned>(prod);
    return m;
}

Element scalar_mul(const Module& m, unsigned r, const Element& e) {
    return m.element_at(m.scalar(r % m.ring.modulus, m.index_of(e)));
}

Ideal annihilator(const Module& m, const Bitset& n_elems) {
    unsigned n = m.ring.modulus;
    unsigned g = n;  // gcd of all annihilating scalars together with n
    for (unsigned r = 0; r < n; ++r) {
        bool kills = true;
        for (unsigned a = 0; a < m.order && kills; ++a) {
            if (!n_elems.test(m.scalar(r, a))) kills = false;
        }
        if (kills && r != 0) g = std::gcd(g, r);
    }
    return Ideal{n, g};
}

Bitset ideal_elements(const Ideal& ideal) {
    Bitset b(ideal.modulus);
    for (unsigned r = 0; r < ideal.modulus; r += ideal.generator) b.set(r);
    return b;
}

}  // namespace modtop
