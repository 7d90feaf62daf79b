#pragma once

#include <optional>
#include <utility>

#include "modtop/classes.hpp"

namespace modtop {

/// Point sets are bitsets over point indices (not submodule ids).
using PointSet = Bitset;

/// The structure space of a class: points are the members of the class, the
/// topology is generated by the closed subbasis { C(N) : N in S(M) } where
/// C(N) = { L in D(M) : N subset of L }.
struct StructureSpace {
    LatticePtr lat;
    ClassName cls;
    std::vector<int> points;          // submodule ids in enumeration order
    std::vector<int> point_of_sub;    // sub id -> point index, or -1
    std::vector<PointSet> subbasis;   // deduplicated, sorted by (cardinality, lex)
    std::vector<std::vector<int>> witnesses;  // submodule ids N per subbasis set
    std::vector<int> csub_of;         // sub id -> index of C(N) in subbasis (-1 if dropped)
    std::vector<PointSet> point_closure;

    int point_count() const { return static_cast<int>(points.size()); }
    PointSet empty_set() const { return PointSet(points.size()); }
    PointSet full_set() const;

    /// C(N) for a submodule id, as stored in the subbasis.
    const PointSet& csub(int sub_id) const;
};

StructureSpace build_space(LatticePtr lat, ClassName cls);

/// Topological closure: union of the point closures of the members.
PointSet closure(const StructureSpace& sp, const PointSet& a);
bool is_closed(const StructureSpace& sp, const PointSet& a);

/// omega(N): intersection of all members of C(N); M if C(N) is empty.
/// Returns a submodule id.
int omega_id(const StructureSpace& sp, int sub_id);

/// Every closed set of the finite space, i.e. every union of point closures,
/// sorted canonically. Throws cap_error beyond `cap` distinct sets.
std::vector<PointSet> all_closed_sets(const StructureSpace& sp, std::size_t cap = 1u << 16);

struct IrreducibleReport {
    bool irreducible = false;
    std::vector<int> generic_points;  // point indices p with closure{p} = F
    /// Witness decomposition into two strictly smaller closed sets when reducible.
    std::optional<std::pair<PointSet, PointSet>> decomposition;
};

/// Pre: F closed and nonempty. Decides irreducibility two independent ways
/// (no decomposition into two smaller closed sets / existence of a generic
/// point) and throws logic_error if they ever disagree.
IrreducibleReport irreducible_and_generics(const StructureSpace& sp, const PointSet& f);

struct SeparationReport {
    bool t0 = false;
    bool t1 = false;
    bool sober = false;
};

/// T0/T1 from point closures; sober by enumerating every closed set and
/// checking each irreducible one has exactly one generic point.
/// Empty space: all three true.
SeparationReport separation_report(const StructureSpace& sp);

/// No proper nonempty clopen subset (searched over the closed-set lattice).
bool is_connected(const StructureSpace& sp);

/// A partition X = A ∪ B, A ∩ B = ∅, both nonempty and both unions of
/// subbasis sets; nullopt if none exists.
std::optional<std::pair<PointSet, PointSet>> strongly_disconnects(const StructureSpace& sp);

struct TopReport {
    bool is_top = false;
    /// On failure: submodule ids (N, N') with C(N) ∪ C(N') not a subbasis set.
    std::optional<std::pair<int, int>> witness;
};

/// Whether every union of two subbasis sets is again a subbasis set.
TopReport is_top_module(const StructureSpace& sp);

/// Direct spectral check: quasi-compact + sober + basis of quasi-compact
/// opens closed under finite intersection (the last two are automatic for
/// finite spaces). Cross-checked against the finite-space fact
/// spectral ⟺ t0; disagreement throws logic_error.
bool is_spectral(const StructureSpace& sp);

/// Pairs (p, q) with q in closure{p} (the specialization preorder).
std::vector<std::pair<int, int>> specialization_preorder(const StructureSpace& sp);

}  // namespace modtop
