#include "modtop/classes.hpp"

#include <algorithm>

#include "modtop/errors.hpp"
#include "modtop/fault.hpp"

namespace modtop {

const std::vector<ClassName>& all_classes() {
    static const std::vector<ClassName> cs = {
        ClassName::proper,        ClassName::maximal,
        ClassName::prime,         ClassName::semiprime,
        ClassName::extraordinary, ClassName::primary,
        ClassName::radical,       ClassName::strongly_irreducible,
        ClassName::irreducible,   ClassName::completely_irreducible,
        ClassName::minimal,       ClassName::minimal_prime,
        ClassName::cyclic,        ClassName::finitely_generated,
    };
    return cs;
}

std::string to_string(ClassName c) {
    switch (c) {
        case ClassName::proper: return "proper";
        case ClassName::maximal: return "maximal";
        case ClassName::prime: return "prime";
        case ClassName::semiprime: return "semiprime";
        case ClassName::extraordinary: return "extraordinary";
        case ClassName::primary: return "primary";
        case ClassName::radical: return "radical";
        case ClassName::strongly_irreducible: return "strongly-irreducible";
        case ClassName::irreducible: return "irreducible";
        case ClassName::completely_irreducible: return "completely-irreducible";
        case ClassName::minimal: return "minimal";
        case ClassName::minimal_prime: return "minimal-prime";
        case ClassName::cyclic: return "cyclic";
        case ClassName::finitely_generated: return "finitely-generated";
    }
    return "?";
}

std::optional<ClassName> parse_class(const std::string& s) {
    for (ClassName c : all_classes())
        if (to_string(c) == s) return c;
    return std::nullopt;
}

namespace {

/// Scalars annihilating M/N, as a bool table over the ring.
std::vector<char> ann_table(const Lattice& lat, const Bitset& n) {
    unsigned nn = lat.mod.ring.modulus;
    std::vector<char> ann(nn, 0);
    for (unsigned r = 0; r < nn; ++r) {
        bool kills = true;
        for (unsigned a = 0; a < lat.mod.order && kills; ++a)
            if (!n.test(lat.smul(r, a))) kills = false;
        ann[r] = kills ? 1 : 0;
    }
    return ann;
}

bool prime_pred(const Lattice& lat, const Bitset& n) {
    auto ann = ann_table(lat, n);
    bool drop_ann = fault::active() == fault::Fault::prime_drop_ann_disjunct;
    for (unsigned r = 0; r < lat.mod.ring.modulus; ++r) {
        if (ann[r] && !drop_ann) continue;
        for (unsigned a = 0; a < lat.mod.order; ++a) {
            if (n.test(a)) continue;
            if (n.test(lat.smul(r, a))) return false;  // r*a in N, a not, r not in (N:M)
        }
    }
    return true;
}

bool primary_pred(const Lattice& lat, const Bitset& n) {
    unsigned nn = lat.mod.ring.modulus;
    auto ann = ann_table(lat, n);
    // nilpotent_mod_ann[r]: some power r^k (k <= n) lies in (N:M)
    std::vector<char> escapes(nn, 0);
    for (unsigned r = 0; r < nn; ++r) {
        unsigned long long p = 1;
        for (unsigned k = 1; k <= nn; ++k) {
            p = (p * r) % nn;
            if (ann[static_cast<unsigned>(p)]) { escapes[r] = 1; break; }
        }
    }
    for (unsigned r = 0; r < nn; ++r) {
        if (escapes[r]) continue;
        for (unsigned a = 0; a < lat.mod.order; ++a) {
            if (n.test(a)) continue;
            if (n.test(lat.smul(r, a))) return false;
        }
    }
    return true;
}

std::vector<int> semiprime_ids(const Lattice& lat) {
    // N semiprime iff N is an intersection of a nonempty family of primes,
    // i.e. some prime contains N and rad(N) = N.
    std::vector<int> out;
    for (int i = 0; i < lat.size(); ++i) {
        if (i == lat.full_id) continue;
        if (is_in_class(lat, i, ClassName::semiprime)) out.push_back(i);
    }
    return out;
}

}  // namespace

std::vector<int> prime_ids(const Lattice& lat) {
    std::vector<int> out;
    for (int i = 0; i < lat.size(); ++i) {
        if (i == lat.full_id) continue;
        if (prime_pred(lat, lat.subs[i])) out.push_back(i);
    }
    return out;
}

int radical_id(const Lattice& lat, int id) {
    Bitset acc(lat.mod.order);
    bool found = false;
    for (int p : prime_ids(lat)) {
        if (!lat.leq(id, p)) continue;
        if (!found) { acc = lat.subs[p]; found = true; }
        else acc &= lat.subs[p];
    }
    if (!found) return lat.full_id;  // empty intersection convention
    return lat.id_of(acc);
}

bool is_in_class(const Lattice& lat, int id, ClassName c) {
    if (id < 0 || id >= lat.size()) throw input_error("submodule id out of range");
    if (id == lat.full_id) return false;  // classes contain proper submodules only
    const Bitset& N = lat.subs[id];
    switch (c) {
        case ClassName::proper:
            return true;
        case ClassName::maximal:
            return lat.above[id].count() == 2;
        case ClassName::prime:
            return prime_pred(lat, N);
        case ClassName::semiprime: {
            bool any_prime_above = false;
            for (int p : prime_ids(lat))
                if (lat.leq(id, p)) { any_prime_above = true; break; }
            return any_prime_above && radical_id(lat, id) == id;
        }
        case ClassName::extraordinary: {
            auto sp = semiprime_ids(lat);
            for (int l : sp)
                for (int k : sp) {
                    if ((lat.subs[l] & lat.subs[k]).subset_of(N) &&
                        !lat.subs[l].subset_of(N) && !lat.subs[k].subset_of(N))
                        return false;
                }
            return true;
        }
        case ClassName::primary:
            return primary_pred(lat, N);
        case ClassName::radical:
            return radical_id(lat, id) == id;
        case ClassName::strongly_irreducible: {
            for (int l = 0; l < lat.size(); ++l)
                for (int k = 0; k < lat.size(); ++k) {
                    if ((lat.subs[l] & lat.subs[k]).subset_of(N) &&
                        !lat.subs[l].subset_of(N) && !lat.subs[k].subset_of(N))
                        return false;
                }
            return true;
        }
        case ClassName::irreducible: {
            for (int l : lat.above[id].bits())
                for (int k : lat.above[id].bits()) {
                    if (static_cast<int>(l) == id || static_cast<int>(k) == id) continue;
                    if (lat.intersect_id(static_cast<int>(l), static_cast<int>(k)) == id)
                        return false;
                }
            return true;
        }
        case ClassName::completely_irreducible: {
            // N must differ from the intersection of all strictly larger submodules
            Bitset acc(lat.mod.order);
            bool found = false;
            for (int j : lat.above[id].bits()) {
                if (static_cast<int>(j) == id) continue;
                if (!found) { acc = lat.subs[j]; found = true; }
                else acc &= lat.subs[j];
            }
            return !found || acc != N;
        }
        case ClassName::minimal:
            return id != lat.zero_id && lat.below[id].count() == 2;
        case ClassName::minimal_prime:
            return is_in_class(lat, id, ClassName::minimal) && prime_pred(lat, N);
        case ClassName::cyclic: {
            for (unsigned g : N.bits())
                if (cyclic_submodule(lat.mod, g) == N) return true;
            return false;
        }
        case ClassName::finitely_generated:
            return true;  // finite modules: every submodule is its own finite generating set
    }
    return false;
}

std::vector<int> members_of_class(const Lattice& lat, ClassName c) {
    std::vector<int> out;
    for (int i = 0; i < lat.size(); ++i) {
        if (i == lat.full_id) continue;
        if (is_in_class(lat, i, c)) out.push_back(i);
    }
    return out;
}

}  // namespace modtop
