#include "modtop/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "modtop/errors.hpp"
#include "modtop/fault.hpp"

namespace modtop {

Bitset cyclic_submodule(const Module& m, unsigned g) {
    Bitset s(m.order);
    for (unsigned r = 0; r < m.ring.modulus; ++r) s.set(m.scalar(r, g));
    return s;
}

Bitset generate(const Module& m, const std::vector<unsigned>& gens) {
    Bitset s(m.order);
    s.set(0);
    std::vector<unsigned> work;
    for (unsigned g : gens) {
        if (g >= m.order) throw input_error("generator index out of range");
        if (!s.test(g)) { s.set(g); work.push_back(g); }
    }
    while (!work.empty()) {
        unsigned x = work.back();
        work.pop_back();
        for (unsigned r = 0; r < m.ring.modulus; ++r) {
            unsigned y = m.scalar(r, x);
            if (!s.test(y)) { s.set(y); work.push_back(y); }
        }
        for (unsigned a : s.bits()) {
            unsigned y = m.add(static_cast<unsigned>(a), x);
            if (!s.test(y)) { s.set(y); work.push_back(y); }
        }
    }
    return s;
}

Bitset subgroup_sum(const Module& m, const Bitset& a, const Bitset& b) {
    Bitset s(m.order);
    for (unsigned x : a.bits())
        for (unsigned y : b.bits()) s.set(m.add(x, y));
    return s;
}

LatticePtr enumerate_submodules(const Module& m, const Caps& caps) {
    if (m.order > caps.max_elements)
        throw cap_error("module has " + std::to_string(m.order) +
                        " elements, exceeding max-elements cap " +
                        std::to_string(caps.max_elements));

    auto lat = std::make_shared<Lattice>();
    lat->mod = m;
    lat->caps = caps;

    lat->add_tab.resize(std::size_t{m.order} * m.order);
    for (unsigned a = 0; a < m.order; ++a)
        for (unsigned b = 0; b < m.order; ++b)
            lat->add_tab[a * m.order + b] = static_cast<std::uint16_t>(m.add(a, b));
    lat->smul_tab.resize(std::size_t{m.ring.modulus} * m.order);
    for (unsigned r = 0; r < m.ring.modulus; ++r)
        for (unsigned a = 0; a < m.order; ++a)
            lat->smul_tab[r * m.order + a] = static_cast<std::uint16_t>(m.scalar(r, a));

    // All cyclic submodules, then closure under pairwise joins.
    std::set<Bitset> seen;
    std::vector<Bitset> cyclics;
    for (unsigned g = 0; g < m.order; ++g) {
        Bitset c = cyclic_submodule(m, g);
        if (seen.insert(c).second) cyclics.push_back(c);
    }
    std::vector<Bitset> work(cyclics);
    while (!work.empty()) {
        Bitset s = std::move(work.back());
        work.pop_back();
        for (const Bitset& c : cyclics) {
            if (c.subset_of(s)) continue;
            Bitset j = subgroup_sum(m, s, c);
            if (seen.insert(j).second) {
                if (seen.size() > caps.max_submodules)
                    throw cap_error("submodule count exceeds max-submodules cap " +
                                    std::to_string(caps.max_submodules));
                work.push_back(std::move(j));
            }
        }
    }

    lat->subs.assign(seen.begin(), seen.end());
    std::sort(lat->subs.begin(), lat->subs.end());
    int n = lat->size();
    for (int i = 0; i < n; ++i) lat->index_[lat->subs[i]] = i;
    lat->zero_id = 0;
    lat->full_id = n - 1;

    lat->below.assign(n, Bitset(n));
    lat->above.assign(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (lat->subs[i].subset_of(lat->subs[j])) {
                lat->below[j].set(i);
                lat->above[i].set(j);
            }
    return lat;
}

int Lattice::id_of(const Bitset& elems) const {
    auto it = index_.find(elems);
    if (it == index_.end()) throw input_error("element set is not a submodule of this lattice");
    return it->second;
}

int Lattice::sum_id(int a, int b) const {
    if (fault::active() == fault::Fault::sum_returns_intersection) return intersect_id(a, b);
    // ids are sorted by cardinality, so the least common upper bound is the join
    Bitset ub = above[a] & above[b];
    auto bitsv = ub.bits();
    return static_cast<int>(bitsv.front());
}

int Lattice::intersect_id(int a, int b) const {
    Bitset lb = below[a] & below[b];
    auto bitsv = lb.bits();
    return static_cast<int>(bitsv.back());
}

std::vector<int> Lattice::maximal_ids() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (i == full_id) continue;
        // covered only by M itself
        if (above[i].count() == 2) out.push_back(i);
    }
    return out;
}

}  // namespace modtop
