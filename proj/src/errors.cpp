#include "shuffles/errors.hpp"

namespace shuffles {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::syntax_error: return "SyntaxError";
    case Errc::undeclared_variable: return "UndeclaredVariable";
    case Errc::negative_exponent: return "NegativeExponent";
    case Errc::arithmetic_overflow: return "ArithmeticOverflow";
    case Errc::empty_domain: return "EmptyDomain";
    case Errc::mixed_orientation: return "MixedOrientation";
    case Errc::omega_family_not_last: return "OmegaFamilyNotLast";
    case Errc::domain_violation: return "DomainViolation";
    case Errc::not_found_within_budget: return "NotFoundWithinBudget";
    case Errc::sign_mismatch: return "SignMismatch";
    case Errc::bench_present: return "BenchPresent";
    case Errc::multi_component_unsupported: return "MultiComponentUnsupported";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::not_verified: return "NotVerified";
    case Errc::generalized_shape_unsupported: return "GeneralizedShapeUnsupported";
    case Errc::omega_family_unsupported: return "OmegaFamilyUnsupported";
    case Errc::no_such_pair: return "NoSuchPair";
    case Errc::tail_not_trailing: return "TailNotTrailing";
    case Errc::document_error: return "DocumentError";
    case Errc::not_serializable: return "NotSerializable";
    }
    return "Error";
}

} // namespace shuffles
