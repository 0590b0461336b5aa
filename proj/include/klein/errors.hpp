#pragma once

#include <stdexcept>
#include <string>

namespace klein {

enum class errc {
    invalid_point,        // zero vector / code out of range
    equal_points,         // degenerate span
    invalid_form,         // lower-triangular or out-of-range coefficient
    invalid_arity,        // k < 1 or k > N
    invalid_structure,    // malformed incidence structure / line
    not_a_configuration,  // non-uniform degrees or line sizes
    domain_mismatch,      // certificate keys != point set
    unknown_point,        // label not present in the structure
    limit_exceeded,       // automorphism count passed the given bound
    inconsistent_input,   // e.g. a line mentioning a point outside the vertex set
    property_violated,    // a verified combinatorial property failed
    no_common_mark,       // heptad image shares no mark
    unknown_selector,     // CLI: unknown structure selector
    unsupported_format,   // CLI: selector/format combination not supported
    io_failure,           // file or JSON parse problem
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace klein
