#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modtop/space.hpp"

namespace modtop {

/// An R-module homomorphism between modules over the same ring, defined by
/// the images of the standard generators e_i and materialized as a total map.
struct Hom {
    Module src;
    Module dst;
    std::vector<unsigned> gen_images;  // dst element indices
    std::vector<unsigned> map;         // src element index -> dst element index

    unsigned apply(unsigned a) const { return map[a]; }
    bool is_surjective() const;
    bool is_injective() const;
};

/// Validates well-definedness: orders[i] * images[i] must vanish in dst.
Hom make_hom(const Module& src, const Module& dst, const std::vector<Element>& images);

Bitset kernel(const Hom& h);                        // submodule of src
Bitset image(const Hom& h);                         // submodule of dst
Bitset preimage(const Hom& h, const Bitset& dst_set);
Bitset image_of(const Hom& h, const Bitset& src_set);

struct ContractionReport {
    bool holds = false;
    /// dst submodule id whose preimage leaves the class, when violated.
    std::optional<int> witness;
};

/// Whether phi^{-1}(N') lies in D_c(src) for every N' in D_c(dst).
/// Vacuously true when D_c(dst) is empty.
ContractionReport has_contraction_property(const Hom& h, ClassName c,
                                           const Lattice& src_lat, const Lattice& dst_lat);

/// The induced map phi_! : D_c(dst) -> D_c(src), N' -> phi^{-1}(N'),
/// together with its continuity verification.
struct InducedMap {
    StructureSpace src_space;  // D_c(src), the codomain of phi_!
    StructureSpace dst_space;  // D_c(dst), the domain of phi_!
    std::vector<int> point_map;  // dst point index -> src point index

    bool structural_continuity = false;  // phi_!^{-1}(C(N)) = C(<phi(N)>) for all N
    bool extensional_continuity = false; // preimages of closed sets are closed
    std::string witness;                 // first violation, if any
};

/// Requires the contraction property (throws input_error otherwise).
InducedMap phi_shriek(const Hom& h, ClassName c, LatticePtr src_lat, LatticePtr dst_lat);

/// One named checked identity inside a conmap report.
struct IdentityCheck {
    std::string name;
    bool holds = false;
    bool applicable = true;  // e.g. surjectivity-only identities
    std::string witness;
};

struct ConmapReport {
    bool well_defined = true;
    bool surjective = false;
    ContractionReport contraction;
    std::vector<IdentityCheck> identities;
    bool dense = false;   // closure(im phi_!) = D_c(src)
    bool all_hold() const {
        for (auto& i : identities)
            if (i.applicable && !i.holds) return false;
        return true;
    }
};

/// Checks the proof identities behind the continuity results:
///   monotone:   N' ⊆ N'' ⇒ phi^{-1}(N') ⊆ phi^{-1}(N'')
///   subbasis:   phi_!^{-1}(C(N)) = C(<phi(N)>) for every N in S(src)
///   surjective: phi(phi^{-1}(N')) = N' for every N' in D_c(dst)
///   closure:    closure(im phi_!) = C(ker phi)
/// plus, for surjective h, the homeomorphism D_c(dst) ≅ C(ker phi)
/// (bijectivity and closed-set transport both ways), and the density
/// biconditional dense ⟺ ker phi ⊆ ∩ { L in D_c(src) }.
ConmapReport verify_conmap(const Hom& h, ClassName c, LatticePtr src_lat, LatticePtr dst_lat);

/// The quotient M/N as a concrete module: coset enumeration, invariant
/// factors from order statistics, then an exhaustive generator search to
/// realize the isomorphism. Returns the quotient and the projection hom.
struct Quotient {
    Module quotient;
    Hom projection;
};
Quotient quotient_module(const Module& m, const Bitset& n_elems);

}  // namespace modtop
