#include "modtop/fault.hpp"

namespace modtop::fault {

std::string_view name(Fault f) {
    switch (f) {
        case Fault::none: return "none";
        case Fault::prime_drop_ann_disjunct: return "prime_drop_ann_disjunct";
        case Fault::closure_union: return "closure_union";
        case Fault::subbasis_drop_zero: return "subbasis_drop_zero";
        case Fault::sum_returns_intersection: return "sum_returns_intersection";
        case Fault::t1_always_true: return "t1_always_true";
        case Fault::omega_returns_argument: return "omega_returns_argument";
    }
    return "unknown";
}

}  // namespace modtop::fault
