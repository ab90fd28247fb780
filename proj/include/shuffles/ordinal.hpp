#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shuffles::ordinal {

enum class Sign : int { minus = -1, plus = +1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// One block of an order type: a finite chain, or `coeff` concatenated
/// copies of w^power / w*^power.
struct Atom {
    enum class Kind { fin, omega, omega_star };

    Kind kind = Kind::fin;
    std::int64_t coeff = 1; // omega/omega_star: number of copies, >= 1
    std::int64_t power = 1; // omega/omega_star: exponent, >= 1
    std::int64_t size = 1;  // fin: chain length, >= 1

    static Atom fin(std::int64_t n);
    static Atom omega(std::int64_t coeff = 1, std::int64_t power = 1);
    static Atom omega_star(std::int64_t coeff = 1, std::int64_t power = 1);

    bool operator==(const Atom&) const = default;
};

/// Normal-form order type: atoms concatenated left to right. When
/// `repeats_omega` is set the final atom stands for omega-many copies of
/// itself (only omega_star atoms survive normalization in that position).
struct OrderType {
    std::vector<Atom> atoms;
    bool repeats_omega = false;

    bool operator==(const OrderType&) const = default;
    bool empty() const { return atoms.empty() && !repeats_omega; }
};

/// Rewrite an atom list to normal form. Leftmost-first, to fixpoint:
///   fin(n) fin(m)        -> fin(n+m)
///   fin(n) a*w^p         -> a*w^p
///   a*w*^p fin(n)        -> a*w*^p
///   a*w^p b*w^p          -> (a+b)*w^p
///   a*w*^p b*w*^p        -> (a+b)*w*^p
OrderType normalize(std::vector<Atom> raw);

/// Concatenation sum. Only the final part may carry a repeats_omega tail.
OrderType sum(const std::vector<OrderType>& parts);

/// m concatenated copies of tau (m >= 1).
OrderType mul_finite(const OrderType& tau, std::int64_t m);

/// omega-many (eps = plus) or omega*-many (eps = minus) copies of tau.
/// tau must be nonempty, tail-free, and single-signed w.r.t. eps.
OrderType mul_omega(const OrderType& tau, Sign eps);

/// Canonical rendering, e.g. "w*2", "w^2 + w*", "3", "0" (empty),
/// "w* + (...)·w" (repeating tail). Exact inverse of parse().
std::string to_string(const OrderType& tau);
OrderType parse(std::string_view text);

} // namespace shuffles::ordinal
