#pragma once

#include <string>
#include <vector>

#include "modtop/lattice.hpp"

namespace modtop {

/// Renders one element of `m`: bare coordinate for rank-one modules,
/// a parenthesized tuple otherwise.
std::string element_label(const Module& m, unsigned idx);

/// Smallest generating set of submodule `id`, ordered by (size, lexicographic
/// on element indices). The zero submodule yields the empty set.
std::vector<unsigned> smallest_generating_set(const Lattice& lat, int id);

/// Canonical display label for submodule `id`: "0" for the zero submodule,
/// otherwise the generators of the smallest generating set, angle-bracketed.
std::string submodule_label(const Lattice& lat, int id);

}  // namespace modtop
