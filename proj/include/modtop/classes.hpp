#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modtop/lattice.hpp"

namespace modtop {

/// The distinguished submodule classes. Every predicate applies to proper
/// submodules only; N = M is never a member of any class.
enum class ClassName {
    proper,
    maximal,
    prime,
    semiprime,
    extraordinary,
    primary,
    radical,
    strongly_irreducible,
    irreducible,
    completely_irreducible,
    minimal,
    minimal_prime,
    cyclic,
    finitely_generated,
};

inline constexpr int kClassCount = 14;
const std::vector<ClassName>& all_classes();

std::string to_string(ClassName c);                    // kebab-case, shared with the CLI
std::optional<ClassName> parse_class(const std::string& s);

/// Decide membership of the submodule with this id in a class.
bool is_in_class(const Lattice& lat, int id, ClassName c);

/// All proper submodules satisfying is_in_class, in enumeration order.
std::vector<int> members_of_class(const Lattice& lat, ClassName c);

/// rad(N): intersection of all prime submodules containing N; M if none.
int radical_id(const Lattice& lat, int id);

/// Ids of all prime submodules (the most reused intermediate).
std::vector<int> prime_ids(const Lattice& lat);

}  // namespace modtop
