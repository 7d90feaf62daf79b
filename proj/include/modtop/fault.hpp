#pragma once

#include <array>
#include <atomic>
#include <string_view>

namespace modtop::fault {

/// Seeded single-point faults used by the verification harness to prove its
/// own checks are not vacuous: activating any of these must flip at least one
/// verdict to fail. Production builds leave the fault at none.
enum class Fault {
    none = 0,
    prime_drop_ann_disjunct,   // prime predicate loses the "r in (N:M)" escape
    closure_union,             // point closures use union instead of intersection
    subbasis_drop_zero,        // C(0) is omitted from the subbasis
    sum_returns_intersection,  // lattice join returns the meet
    t1_always_true,            // separation report claims t1 unconditionally
    omega_returns_argument,    // omega(N) returns N instead of the intersection
};

inline constexpr std::array<Fault, 6> all_faults = {
    Fault::prime_drop_ann_disjunct, Fault::closure_union,
    Fault::subbasis_drop_zero,      Fault::sum_returns_intersection,
    Fault::t1_always_true,          Fault::omega_returns_argument,
};

std::string_view name(Fault f);

inline std::atomic<Fault>& slot() {
    static std::atomic<Fault> f{Fault::none};
    return f;
}
inline Fault active() { return slot().load(std::memory_order_relaxed); }
inline void set_active(Fault f) { slot().store(f, std::memory_order_relaxed); }

/// RAII guard so tests cannot leak an active fault.
struct Scoped {
    explicit Scoped(Fault f) { set_active(f); }
    ~Scoped() { set_active(Fault::none); }
};

}  // namespace modtop::fault
