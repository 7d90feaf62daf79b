#pragma once

#include <stdexcept>
#include <string>

namespace modtop {

/// Malformed input: bad modulus, order not dividing the modulus, parent
/// mismatch, ill-defined homomorphism, unknown class name, ...
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented resource cap was exceeded. The message names the cap.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace modtop
