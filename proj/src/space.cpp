#include "modtop/space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "modtop/errors.hpp"
#include "modtop/fault.hpp"

namespace modtop {

PointSet StructureSpace::full_set() const {
    PointSet s(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) s.set(i);
    return s;
}

const PointSet& StructureSpace::csub(int sub_id) const {
    int ix = csub_of.at(static_cast<std::size_t>(sub_id));
    if (ix < 0) throw std::logic_error("subbasis entry missing for submodule");
    return subbasis[static_cast<std::size_t>(ix)];
}

StructureSpace build_space(LatticePtr lat, ClassName cls) {
    StructureSpace sp;
    sp.lat = std::move(lat);
    sp.cls = cls;
    const Lattice& L = *sp.lat;

    sp.points = members_of_class(L, cls);
    sp.point_of_sub.assign(L.size(), -1);
    for (std::size_t p = 0; p < sp.points.size(); ++p)
        sp.point_of_sub[sp.points[p]] = static_cast<int>(p);

    // C(N) per submodule, deduplicated with witness lists.
    std::map<PointSet, std::vector<int>> dedup;
    for (int n = 0; n < L.size(); ++n) {
        if (fault::active() == fault::Fault::subbasis_drop_zero && n == L.zero_id) continue;
        PointSet c(sp.points.size());
        for (std::size_t p = 0; p < sp.points.size(); ++p)
            if (L.leq(n, sp.points[p])) c.set(p);
        dedup[c].push_back(n);
    }
    sp.csub_of.assign(L.size(), -1);
    for (auto& [set, wit] : dedup) {
        int ix = static_cast<int>(sp.subbasis.size());
        sp.subbasis.push_back(set);
        sp.witnesses.push_back(wit);
        for (int n : wit) sp.csub_of[n] = ix;
    }

    // closure{p} = intersection of the subbasis sets containing p
    sp.point_closure.assign(sp.points.size(), PointSet(sp.points.size()));
    bool use_union = fault::active() == fault::Fault::closure_union;
    for (std::size_t p = 0; p < sp.points.size(); ++p) {
        PointSet acc = use_union ? PointSet(sp.points.size()) : sp.full_set();
        for (const PointSet& s : sp.subbasis) {
            if (!s.test(p)) continue;
            if (use_union) acc |= s;
            else acc &= s;
        }
        sp.point_closure[p] = acc;
    }
    return sp;
}

PointSet closure(const StructureSpace& sp, const PointSet& a) {
    PointSet acc(sp.points.size());
    for (std::size_t p : a.bits()) acc |= sp.point_closure[p];
    return acc;
}

bool is_closed(const StructureSpace& sp, const PointSet& a) { return closure(sp, a) == a; }

int omega_id(const StructureSpace& sp, int sub_id) {
    if (fault::active() == fault::Fault::omega_returns_argument) return sub_id;
    const Lattice& L = *sp.lat;
    const PointSet& c = sp.csub(sub_id);
    Bitset acc(L.mod.order);
    bool found = false;
    for (std::size_t p : c.bits()) {
        const Bitset& elems = L.subs[sp.points[p]];
        if (!found) { acc = elems; found = true; }
        else acc &= elems;
    }
    if (!found) return L.full_id;  // empty intersection convention
    return L.id_of(acc);
}

std::vector<PointSet> all_closed_sets(const StructureSpace& sp, std::size_t cap) {
    // every closed set is a union of point closures and vice versa
    std::set<PointSet> seen;
    seen.insert(sp.empty_set());
    std::vector<PointSet> gens;
    {
        std::set<PointSet> distinct(sp.point_closure.begin(), sp.point_closure.end());
        gens.assign(distinct.begin(), distinct.end());
    }
    std::vector<PointSet> work(seen.begin(), seen.end());
    while (!work.empty()) {
        PointSet s = std::move(work.back());
        work.pop_back();
        for (const PointSet& g : gens) {
            if (g.subset_of(s)) continue;
            PointSet u = s | g;
            if (seen.insert(u).second) {
                if (seen.size() > cap)
                    throw cap_error("closed-set lattice exceeds enumeration cap " +
                                    std::to_string(cap));
                work.push_back(std::move(u));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

IrreducibleReport irreducible_and_generics(const StructureSpace& sp, const PointSet& f) {
    if (f.none()) throw input_error("irreducibility is undefined for the empty set");
    if (!is_closed(sp, f)) throw input_error("irreducibility requires a closed set");

    IrreducibleReport rep;
    for (std::size_t p : f.bits())
        if (sp.point_closure[p] == f) rep.generic_points.push_back(static_cast<int>(p));

    // Independent decomposition search: F reducible iff some point closure
    // cl(x) ⊊ F has union of { cl(y) : y in F \ cl(x) } also ⊊ F.
    for (std::size_t x : f.bits()) {
        const PointSet& a = sp.point_closure[x];
        if (a == f) continue;
        PointSet b = closure(sp, f.minus(a));
        if (b != f) {
            rep.decomposition = std::make_pair(a, b);
            break;
        }
    }
    rep.irreducible = !rep.decomposition.has_value();

    if (rep.irreducible != !rep.generic_points.empty())
        throw std::logic_error("irreducibility criteria disagree (decomposition vs generic point)");
    return rep;
}

SeparationReport separation_report(const StructureSpace& sp) {
    SeparationReport rep;
    rep.t0 = true;
    rep.t1 = true;
    int n = sp.point_count();
    for (int p = 0; p < n; ++p) {
        if (sp.point_closure[p].count() != 1) rep.t1 = false;
        for (int q = p + 1; q < n; ++q)
            if (sp.point_closure[p] == sp.point_closure[q]) rep.t0 = false;
    }
    if (fault::active() == fault::Fault::t1_always_true) rep.t1 = true;

    rep.sober = true;
    for (const PointSet& f : all_closed_sets(sp)) {
        if (f.none()) continue;
        IrreducibleReport ir = irreducible_and_generics(sp, f);
        if (ir.irreducible && ir.generic_points.size() != 1) rep.sober = false;
    }
    return rep;
}

bool is_connected(const StructureSpace& sp) {
    if (sp.point_count() == 0) return true;
    auto closed = all_closed_sets(sp);
    std::set<PointSet> family(closed.begin(), closed.end());
    PointSet full = sp.full_set();
    for (const PointSet& a : closed) {
        if (a.none() || a == full) continue;
        if (family.count(full.minus(a))) return false;  // proper nonempty clopen subset
    }
    return true;
}

namespace {
/// A part qualifies iff it equals the union of the subbasis sets it contains.
bool subbasis_expressible(const StructureSpace& sp, const PointSet& f) {
    PointSet acc(sp.points.size());
    for (const PointSet& s : sp.subbasis)
        if (s.subset_of(f)) acc |= s;
    return acc == f;
}
}  // namespace

std::optional<std::pair<PointSet, PointSet>> strongly_disconnects(const StructureSpace& sp) {
    if (sp.point_count() == 0) return std::nullopt;
    PointSet full = sp.full_set();
    for (const PointSet& a : all_closed_sets(sp)) {
        if (a.none() || a == full) continue;
        PointSet b = full.minus(a);
        if (subbasis_expressible(sp, a) && subbasis_expressible(sp, b))
            return std::make_pair(a, b);
    }
    return std::nullopt;
}

TopReport is_top_module(const StructureSpace& sp) {
    TopReport rep;
    std::set<PointSet> family(sp.subbasis.begin(), sp.subbasis.end());
    for (std::size_t i = 0; i < sp.subbasis.size(); ++i)
        for (std::size_t j = i; j < sp.subbasis.size(); ++j) {
            if (!family.count(sp.subbasis[i] | sp.subbasis[j])) {
                rep.is_top = false;
                rep.witness = std::make_pair(sp.witnesses[i].front(), sp.witnesses[j].front());
                return rep;
            }
        }
    rep.is_top = true;
    return rep;
}

bool is_spectral(const StructureSpace& sp) {
    SeparationReport sep = separation_report(sp);
    bool quasi_compact = true;  // finite space
    bool qc_open_basis = true;  // every subset of a finite space is quasi-compact
    bool spectral = quasi_compact && sep.sober && qc_open_basis;
    if (spectral != sep.t0)
        throw std::logic_error("spectral check disagrees with the finite-space fact spectral == t0");
    return spectral;
}

std::vector<std::pair<int, int>> specialization_preorder(const StructureSpace& sp) {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < sp.point_count(); ++p)
        for (std::size_t q : sp.point_closure[p].bits())
            out.emplace_back(p, static_cast<int>(q));
    return out;
}

}  // namespace modtop
