#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace shuffles {

enum class Errc {
    // expression language
    syntax_error,
    undeclared_variable,
    negative_exponent,
    arithmetic_overflow,
    // presentation validation
    empty_domain,
    mixed_orientation,
    omega_family_not_last,
    domain_violation,
    // order queries
    not_found_within_budget,
    // algebra
    sign_mismatch,
    bench_present,
    multi_component_unsupported,
    not_a_permutation,
    not_verified,
    generalized_shape_unsupported,
    omega_family_unsupported,
    // canonical
    no_such_pair,
    // order types
    tail_not_trailing,
    // serialization / documents
    document_error,
    not_serializable,
};

const char* errc_name(Errc c);

/// Library-wide error. `budget_used` is meaningful for
/// not_found_within_budget so callers can retry with a larger budget.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(msg), code(code) {}
    Error(Errc code, const std::string& msg, std::int64_t budget_used)
        : std::runtime_error(msg), code(code), budget_used(budget_used) {}

    Errc code;
    std::int64_t budget_used = -1;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace shuffles
