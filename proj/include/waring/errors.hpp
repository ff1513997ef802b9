#pragma once

#include <stdexcept>
#include <string>

namespace waring {

// Input rejected before any computation: wrong degree, zero form, degenerate
// parameters, malformed text, mixed quadratic fields.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Computation started but could not produce its result (numeric
// non-convergence, ill-conditioning, certified absence of a witness).
class computation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class field_mismatch : public validation_error {
public:
    using validation_error::validation_error;
};

class parse_error : public validation_error {
public:
    parse_error(std::string const& what, std::size_t position)
        : validation_error(what + " at position " + std::to_string(position)),
          reason_(what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }
    /// Message without the position suffix.
    std::string const& reason() const noexcept { return reason_; }

private:
    std::string reason_;
    std::size_t position_;
};

}  // namespace waring
