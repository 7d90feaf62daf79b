#include "modtop/labels.hpp"

#include <optional>

namespace modtop {

namespace {

/// Lexicographically-first combination of `size` candidates generating `target`,
/// extending `chosen` with candidates from index `from` on.
bool search(const Lattice& lat, const std::vector<unsigned>& cands, const Bitset& target,
            std::size_t size, std::size_t from, Bitset span, std::vector<unsigned>& chosen) {
    if (chosen.size() == size) return span == target;
    for (std::size_t i = from; i < cands.size(); ++i) {
        Bitset next = subgroup_sum(lat.mod, span, cyclic_submodule(lat.mod, cands[i]));
        if (!next.subset_of(target)) continue;
        chosen.push_back(cands[i]);
        if (search(lat, cands, target, size, i + 1, next, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::string element_label(const Module& m, unsigned idx) {
    Element e = m.element_at(idx);
    if (e.size() == 1) return std::to_string(e[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

std::vector<unsigned> smallest_generating_set(const Lattice& lat, int id) {
    const Bitset& target = lat.subs[id];
    if (id == lat.zero_id) return {};
    std::vector<unsigned> cands;
    for (std::size_t b : target.bits())
        if (b != 0) cands.push_back(static_cast<unsigned>(b));
    for (std::size_t size = 1; size <= cands.size(); ++size) {
        std::vector<unsigned> chosen;
        Bitset span = lat.subs[lat.zero_id];
        if (search(lat, cands, target, size, 0, span, chosen)) return chosen;
    }
    return cands;  // unreachable: the full candidate list always generates
}

std::string submodule_label(const Lattice& lat, int id) {
    if (id == lat.zero_id) return "0";
    std::string out = "⟨";
    std::vector<unsigned> gens = smallest_generating_set(lat, id);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",";
        out += element_label(lat.mod, gens[i]);
    }
    return out + "⟩";
}

}  // namespace modtop
