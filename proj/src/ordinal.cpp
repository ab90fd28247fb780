#include "shuffles/ordinal.hpp"

#include <cctype>
#include <cstdlib>

#include "shuffles/errors.hpp"
#include "shuffles/ints.hpp"

namespace shuffles::ordinal {

Atom Atom::fin(std::int64_t n) {
    if (n < 1) raise(Errc::domain_violation, "fin atom needs size >= 1");
    Atom a;
    a.kind = Kind::fin;
    a.size = n;
    return a;
}

Atom Atom::omega(std::int64_t coeff, std::int64_t power) {
    if (coeff < 1 || power < 1)
        raise(Errc::domain_violation, "omega atom needs coeff, power >= 1");
    Atom a;
    a.kind = Kind::omega;
    a.coeff = coeff;
    a.power = power;
    a.size = 0;
    return a;
}

Atom Atom::omega_star(std::int64_t coeff, std::int64_t power) {
    Atom a = omega(coeff, power);
    a.kind = Kind::omega_star;
    return a;
}

namespace {

// Tries the single rewrite (l, r) -> out. Returns 0: no rule, 1: replace
// both by out, 2: keep l only, 3: keep r only.
int rewrite_pair(const Atom& l, const Atom& r, Atom& out) {
    using K = Atom::Kind;
    if (l.kind == K::fin && r.kind == K::fin) {
        out = Atom::fin(checked_add(l.size, r.size));
        return 1;
    }
    if (l.kind == K::fin && r.kind == K::omega) return 3;      // n + w^p = w^p
    if (l.kind == K::omega_star && r.kind == K::fin) return 2; // w*^p + n = w*^p
    if (l.kind == r.kind && l.kind != K::fin && l.power == r.power) {
        out = l;
        out.coeff = checked_add(l.coeff, r.coeff);
        return 1;
    }
    return 0;
}

// Leftmost-first fixpoint over atoms[0, limit).
void run_rewrites(std::vector<Atom>& atoms, size_t limit) {
    size_t i = 0;
    while (i + 1 < limit) {
        Atom out;
        switch (rewrite_pair(atoms[i], atoms[i + 1], out)) {
        case 1:
            atoms[i] = out;
            atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            --limit;
            if (i > 0) --i;
            break;
        case 2:
            atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            --limit;
            if (i > 0) --i;
            break;
        case 3:
            atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i));
            --limit;
            if (i > 0) --i;
            break;
        default:
            ++i;
        }
    }
}

OrderType normalize_tailed(std::vector<Atom> atoms, bool tail) {
    if (tail) {
        if (atoms.empty())
            raise(Errc::domain_violation, "repeating tail without a repeated atom");
        // A repeated finite block is an omega chain; a repeated omega block
        // climbs one power ((w^p)*w = w^(p+1)). Only omega* survives as a tail.
        Atom& rep = atoms.back();
        switch (rep.kind) {
        case Atom::Kind::fin:
            rep = Atom::omega(1, 1);
            tail = false;
            break;
        case Atom::Kind::omega:
            rep = Atom::omega(1, checked_add(rep.power, 1));
            tail = false;
            break;
        case Atom::Kind::omega_star:
            break;
        }
    }
    // The repeated atom, when present, is opaque to the pair rules.
    run_rewrites(atoms, tail ? atoms.size() - 1 : atoms.size());
    OrderType out;
    out.atoms = std::move(atoms);
    out.repeats_omega = tail;
    return out;
}

} // namespace

OrderType normalize(std::vector<Atom> raw) {
    return normalize_tailed(std::move(raw), false);
}

OrderType sum(const std::vector<OrderType>& parts) {
    std::vector<Atom> atoms;
    bool tail = false;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].repeats_omega && i + 1 != parts.size())
            raise(Errc::tail_not_trailing,
                  "a repeating order type may only be the final summand");
        atoms.insert(atoms.end(), parts[i].atoms.begin(), parts[i].atoms.end());
        tail = parts[i].repeats_omega;
    }
    return normalize_tailed(std::move(atoms), tail);
}

OrderType mul_finite(const OrderType& tau, std::int64_t m) {
    if (m < 1) raise(Errc::domain_violation, "mul_finite needs m >= 1");
    if (tau.repeats_omega)
        raise(Errc::tail_not_trailing, "mul_finite on a repeating order type");
    std::vector<Atom> atoms;
    atoms.reserve(tau.atoms.size() * static_cast<size_t>(m));
    for (std::int64_t i = 0; i < m; ++i)
        atoms.insert(atoms.end(), tau.atoms.begin(), tau.atoms.end());
    return normalize(std::move(atoms));
}

OrderType mul_omega(const OrderType& tau, Sign eps) {
    if (tau.atoms.empty())
        raise(Errc::domain_violation, "mul_omega of the empty order type");
    if (tau.repeats_omega)
        raise(Errc::tail_not_trailing, "mul_omega on a repeating order type");
    const auto good = eps == Sign::plus ? Atom::Kind::omega : Atom::Kind::omega_star;
    std::int64_t highest = 0;
    for (const Atom& a : tau.atoms) {
        if (a.kind == Atom::Kind::fin) continue;
        if (a.kind != good)
            raise(Errc::mixed_orientation,
                  "mul_omega needs a single-signed order type");
        if (a.power > highest) highest = a.power;
    }
    OrderType out;
    out.atoms.push_back(good == Atom::Kind::omega
                            ? Atom::omega(1, highest + 1)
                            : Atom::omega_star(1, highest + 1));
    return out;
}

std::string to_string(const OrderType& tau) {
    if (tau.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < tau.atoms.size(); ++i) {
        if (i) out += " + ";
        const Atom& a = tau.atoms[i];
        if (a.kind == Atom::Kind::fin) {
            out += std::to_string(a.size);
            continue;
        }
        out += a.kind == Atom::Kind::omega ? "w" : "w*";
        if (a.power > 1) out += "^" + std::to_string(a.power);
        if (a.coeff > 1) out += "*" + std::to_string(a.coeff);
    }
    if (tau.repeats_omega) out += " + (...)·w";
    return out;
}

namespace {

std::int64_t parse_int(std::string_view text, size_t& pos) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        raise(Errc::syntax_error, "expected a number in order type at position " +
                                      std::to_string(start));
    return std::strtoll(std::string(text.substr(start, pos - start)).c_str(),
                        nullptr, 10);
}

Atom parse_atom(std::string_view tok) {
    size_t pos = 0;
    if (!tok.empty() && std::isdigit(static_cast<unsigned char>(tok[0]))) {
        std::int64_t n = parse_int(tok, pos);
        if (pos != tok.size() || n < 1)
            raise(Errc::syntax_error, "bad finite atom '" + std::string(tok) + "'");
        return Atom::fin(n);
    }
    if (tok.empty() || tok[0] != 'w')
        raise(Errc::syntax_error, "bad order type atom '" + std::string(tok) + "'");
    pos = 1;
    bool star = false;
    if (pos < tok.size() && tok[pos] == '*') {
        // "w*" is omega-star unless the '*' introduces a coefficient digit.
        bool coeff_sep = pos + 1 < tok.size() &&
                         std::isdigit(static_cast<unsigned char>(tok[pos + 1]));
        if (!coeff_sep) {
            star = true;
            ++pos;
        }
    }
    std::int64_t power = 1;
    std::int64_t coeff = 1;
    if (pos < tok.size() && tok[pos] == '^') {
        ++pos;
        power = parse_int(tok, pos);
    }
    if (pos < tok.size() && tok[pos] == '*') {
        ++pos;
        coeff = parse_int(tok, pos);
    }
    if (pos != tok.size())
        raise(Errc::syntax_error, "trailing characters in atom '" + std::string(tok) + "'");
    return star ? Atom::omega_star(coeff, power) : Atom::omega(coeff, power);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

} // namespace

OrderType parse(std::string_view text) {
    text = trim(text);
    if (text == "0") return OrderType{};
    if (text.empty()) raise(Errc::syntax_error, "empty order type");
    std::vector<Atom> atoms;
    bool tail = false;
    size_t start = 0;
    while (start <= text.size()) {
        size_t plus = text.find('+', start);
        std::string_view tok = trim(text.substr(
            start, plus == std::string_view::npos ? plus : plus - start));
        if (tok == "(...)·w") {
            if (plus != std::string_view::npos)
                raise(Errc::tail_not_trailing, "repeating marker must be last");
            tail = true;
        } else {
            atoms.push_back(parse_atom(tok));
        }
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    return normalize_tailed(std::move(atoms), tail);
}

} // namespace shuffles::ordinal
