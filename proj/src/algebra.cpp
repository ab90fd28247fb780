#include "shuffles/algebra.hpp"

#include <algorithm>
#include <unordered_set>

#include "shuffles/address.hpp"
#include "shuffles/errors.hpp"

namespace shuffles::algebra {

using ordinal::Sign;

namespace {

// Collapses -(-x) so repeated involutions keep readable closed forms.
expr::NodePtr strip_double_neg(const expr::NodePtr& e) {
    using expr::Node;
    switch (e->kind) {
    case Node::Kind::int_lit:
    case Node::Kind::var:
        return e;
    case Node::Kind::neg:
        if (e->lhs->kind == Node::Kind::neg) return strip_double_neg(e->lhs->lhs);
        return Node::make(Node::Kind::neg, strip_double_neg(e->lhs));
    default:
        return Node::make(e->kind, strip_double_neg(e->lhs), strip_double_neg(e->rhs));
    }
}

ValueMapPtr negate_map(const ValueMapPtr& v) {
    switch (v->kind()) {
    case ValueMap::Kind::expression: {
        const auto& em = static_cast<const ExprMap&>(*v);
        std::vector<expr::NodePtr> neg;
        neg.reserve(em.vars().size());
        for (size_t j = 0; j < em.vars().size(); ++j)
            neg.push_back(expr::Node::make(expr::Node::Kind::neg,
                                           expr::Node::var(j, em.vars()[j])));
        return std::make_shared<ExprMap>(
            strip_double_neg(expr::substitute(em.tree(), neg)), em.vars());
    }
    case ValueMap::Kind::table: {
        const auto& tm = static_cast<const TableMap&>(*v);
        return std::make_shared<TableMap>(tm.head(), tm.identity_tail(), -tm.sign());
    }
    case ValueMap::Kind::negated:
        return static_cast<const NegatedMap&>(*v).inner();
    default:
        return std::make_shared<NegatedMap>(v);
    }
}

} // namespace

MixedShuffle involution(const MixedShuffle& s) {
    if (s.has_family())
        raise(Errc::omega_family_unsupported,
              "cannot involute an omega-family presentation (the reversed "
              "component list would have no first element)");
    MixedShuffle out;
    out.label = s.label.empty() ? "involution" : s.label + "*";
    out.components.reserve(s.components.size());
    for (auto it = s.components.rbegin(); it != s.components.rend(); ++it) {
        UniformComponent c;
        c.domains.reserve(it->domains.size());
        for (const IndexDomain& d : it->domains) c.domains.push_back(d.negated());
        c.value = negate_map(it->value);
        out.components.push_back(std::move(c));
    }
    validate(out);
    return out;
}

namespace {

void require_single_bench_free(const MixedShuffle& s, const char* role) {
    if (s.components.size() != 1 || s.has_family())
        raise(Errc::multi_component_unsupported,
              std::string(role) + " must be a single uniform component");
    const UniformComponent& c = s.components[0];
    if (c.infinite_count() == 0)
        raise(Errc::bench_present, std::string(role) + " is a bench");
}

} // namespace

MixedShuffle compose(const MixedShuffle& S, const MixedShuffle& U) {
    require_single_bench_free(S, "the left factor of a composition");
    require_single_bench_free(U, "the right factor of a composition");
    const UniformComponent& sc = S.components[0];
    const UniformComponent& uc = U.components[0];
    if (sc.orientation != uc.orientation)
        raise(Errc::sign_mismatch, "composition needs factors of equal sign");
    int eps = sc.orientation;
    const IndexDomain& last = sc.domains.back();
    if (!last.is_infinite())
        raise(Errc::bench_present,
              "the left factor's innermost parts are benches");
    if ((last.kind == IndexDomain::Kind::plus_inf && last.n != 0) ||
        (last.kind == IndexDomain::Kind::minus_inf && last.m != 0))
        raise(Errc::domain_violation,
              "the replaced segment must be indexed by the full half-line");

    size_t k = sc.domains.size();
    UniformComponent out;
    out.domains.assign(sc.domains.begin(), sc.domains.end() - 1);
    out.domains.insert(out.domains.end(), uc.domains.begin(), uc.domains.end());

    if (sc.value->kind() == ValueMap::Kind::expression &&
        uc.value->kind() == ValueMap::Kind::expression) {
        const auto& se = static_cast<const ExprMap&>(*sc.value);
        const auto& ue = static_cast<const ExprMap&>(*uc.value);
        std::vector<std::string> vars;
        for (size_t j = 0; j < out.domains.size(); ++j)
            vars.push_back("i" + std::to_string(j));
        expr::NodePtr inner = expr::rename_vars(ue.tree(), k - 1, vars);
        if (eps < 0) inner = expr::Node::make(expr::Node::Kind::neg, inner);
        std::vector<expr::NodePtr> repl;
        for (size_t j = 0; j + 1 < k; ++j) repl.push_back(expr::Node::var(j, vars[j]));
        repl.push_back(inner);
        out.value = std::make_shared<ExprMap>(expr::substitute(se.tree(), repl), vars);
    } else {
        out.value = std::make_shared<ComposedMap>(sc.value, uc.value, k - 1, eps);
    }

    MixedShuffle r;
    r.label = (S.label.empty() ? "S" : S.label) + " o " + (U.label.empty() ? "U" : U.label);
    r.components.push_back(std::move(out));
    validate(r);
    return r;
}

MixedShuffle identity_element(Sign eps) {
    MixedShuffle s;
    UniformComponent c;
    std::vector<std::string> vars{"i0"};
    if (eps == Sign::plus) {
        s.label = "identity+";
        c.domains.push_back(IndexDomain::plus_inf());
        c.value = std::make_shared<ExprMap>(expr::parse("i0", vars), vars);
    } else {
        s.label = "identity-";
        c.domains.push_back(IndexDomain::minus_inf());
        c.value = std::make_shared<ExprMap>(expr::parse("-i0", vars), vars);
    }
    s.components.push_back(std::move(c));
    validate(s);
    return s;
}

I1Element I1Element::wrap(MixedShuffle s) {
    validate(s);
    if (s.components.size() != 1 || s.has_family())
        raise(Errc::multi_component_unsupported,
              "a group element is a single uniform component");
    const UniformComponent& c = s.components[0];
    if (c.domains.size() != 1 || !c.domains[0].is_infinite())
        raise(Errc::bench_present, "a group element is a single segment");
    const IndexDomain& d = c.domains[0];
    if ((d.kind == IndexDomain::Kind::plus_inf && d.n != 0) ||
        (d.kind == IndexDomain::Kind::minus_inf && d.m != 0))
        raise(Errc::domain_violation,
              "a group element must be indexed by the full half-line");
    Sign eps = c.orientation > 0 ? Sign::plus : Sign::minus;
    return {std::move(s), eps};
}

Int I1Element::apply(Int x) const {
    Int idx = sign == Sign::plus ? x : -x;
    return shuffle.components[0].value->eval(std::span<const Int>(&idx, 1));
}

I1Element from_finite_permutation(std::span<const Int> perm, Sign eps) {
    std::vector<bool> seen(perm.size(), false);
    for (Int v : perm) {
        if (v < 0 || v >= static_cast<Int>(perm.size()) || seen[static_cast<size_t>(v)])
            raise(Errc::not_a_permutation,
                  "images must be a permutation of 0..n-1");
        seen[static_cast<size_t>(v)] = true;
    }
    MixedShuffle s;
    s.label = "perm";
    UniformComponent c;
    c.domains.push_back(eps == Sign::plus ? IndexDomain::plus_inf()
                                          : IndexDomain::minus_inf());
    c.value = std::make_shared<TableMap>(std::vector<Int>(perm.begin(), perm.end()),
                                         /*identity_tail=*/true,
                                         eps == Sign::plus ? +1 : -1);
    s.components.push_back(std::move(c));
    return I1Element::wrap(std::move(s));
}

I1Element invert_i1(const I1Element& s, Int upto, Int budget) {
    VerificationReport rep = verify(s.shuffle, upto, budget);
    if (!rep.ok()) {
        std::string why = !rep.duplicates.empty()
                              ? "value " + std::to_string(rep.duplicates[0].value) +
                                    " has two addresses"
                              : std::to_string(rep.missing[0]) + " is not covered";
        raise(Errc::not_verified,
              "cannot invert an unverified element (" + why + ")");
    }
    int sign = s.sign == Sign::plus ? +1 : -1;
    const ValueMapPtr& v = s.shuffle.components[0].value;
    std::vector<Int> head;
    bool identity_tail = false;

    if (v->kind() == ValueMap::Kind::table) {
        const auto& tm = static_cast<const TableMap&>(*v);
        bool head_is_perm = tm.identity_tail();
        std::vector<bool> seen(tm.head().size(), false);
        for (Int x : tm.head()) {
            if (x < 0 || x >= static_cast<Int>(tm.head().size()) ||
                seen[static_cast<size_t>(x)]) {
                head_is_perm = false;
                break;
            }
            seen[static_cast<size_t>(x)] = true;
        }
        if (head_is_perm) {
            // exact inverse: invert the head, keep the identity tail
            head.assign(tm.head().size(), 0);
            for (size_t i = 0; i < tm.head().size(); ++i)
                head[static_cast<size_t>(tm.head()[i])] = static_cast<Int>(i);
            identity_tail = true;
        }
    }
    if (head.empty() && upto >= 0) {
        AddressIndex index(s.shuffle);
        head.assign(static_cast<size_t>(upto) + 1, 0);
        for (Int x = 0; x <= upto; ++x) {
            Address a = index.address_of(x, budget);
            head[static_cast<size_t>(x)] = sign > 0 ? a.indices[0] : -a.indices[0];
        }
    }

    MixedShuffle out;
    out.label = s.shuffle.label.empty() ? "inverse" : s.shuffle.label + "^-1";
    UniformComponent c;
    c.domains.push_back(s.sign == Sign::plus ? IndexDomain::plus_inf()
                                             : IndexDomain::minus_inf());
    c.value = std::make_shared<TableMap>(std::move(head), identity_tail, sign);
    out.components.push_back(std::move(c));
    return I1Element::wrap(std::move(out));
}

namespace {

std::string describe(const I1Element& e, size_t i) {
    return "#" + std::to_string(i) +
           (e.shuffle.label.empty() ? "" : " (" + e.shuffle.label + ")");
}

} // namespace

GroupReport group_check(const std::vector<I1Element>& elements, Int upto,
                        Int budget) {
    GroupReport rep;
    if (elements.empty()) return rep;
    auto fail = [&](bool& flag, std::string msg) {
        flag = false;
        if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
    };

    Sign eps = elements[0].sign;
    MixedShuffle ident = identity_element(eps);
    I1Element e = I1Element::wrap(ident);

    for (size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].sign != eps)
            fail(rep.closure_ok, "element " + describe(elements[i], i) +
                                     " has a different sign");
        VerificationReport v = verify(elements[i].shuffle, upto, budget);
        if (!v.ok())
            fail(rep.closure_ok, "element " + describe(elements[i], i) +
                                     " is not a verified bijection up to " +
                                     std::to_string(upto));
    }
    if (!rep.closure_ok) return rep;

    auto apply2 = [](const I1Element& a, const I1Element& b, Int x) {
        return a.apply(b.apply(x));
    };

    // closure: sign is preserved by construction; check injectivity on 0..N
    for (size_t i = 0; i < elements.size() && rep.closure_ok; ++i) {
        for (size_t j = 0; j < elements.size() && rep.closure_ok; ++j) {
            MixedShuffle comp = compose(elements[i].shuffle, elements[j].shuffle);
            I1Element ce = I1Element::wrap(comp);
            std::unordered_set<Int> image;
            for (Int x = 0; x <= upto; ++x) {
                Int y;
                try {
                    y = ce.apply(x);
                } catch (const Error& err) {
                    if (err.code != Errc::not_found_within_budget) throw;
                    continue; // a table head ended; data limit, not failure
                }
                if (!image.insert(y).second) {
                    fail(rep.closure_ok,
                         "composition of " + describe(elements[i], i) + " and " +
                             describe(elements[j], j) + " repeats the value " +
                             std::to_string(y));
                    break;
                }
            }
        }
    }

    // associativity on all triples, pointwise through the composed objects
    for (size_t i = 0; i < elements.size() && rep.associativity_ok; ++i)
        for (size_t j = 0; j < elements.size() && rep.associativity_ok; ++j)
            for (size_t l = 0; l < elements.size() && rep.associativity_ok; ++l) {
                I1Element ab_c = I1Element::wrap(compose(
                    compose(elements[i].shuffle, elements[j].shuffle),
                    elements[l].shuffle));
                I1Element a_bc = I1Element::wrap(compose(
                    elements[i].shuffle,
                    compose(elements[j].shuffle, elements[l].shuffle)));
                for (Int x = 0; x <= upto; ++x) {
                    try {
                        if (ab_c.apply(x) != a_bc.apply(x)) {
                            fail(rep.associativity_ok,
                                 "associativity fails on (" + describe(elements[i], i) +
                                     ", " + describe(elements[j], j) + ", " +
                                     describe(elements[l], l) + ") at " +
                                     std::to_string(x));
                            break;
                        }
                    } catch (const Error& err) {
                        if (err.code != Errc::not_found_within_budget) throw;
                    }
                }
            }

    // identity laws
    for (size_t i = 0; i < elements.size() && rep.identity_ok; ++i) {
        I1Element le = I1Element::wrap(compose(e.shuffle, elements[i].shuffle));
        I1Element rg = I1Element::wrap(compose(elements[i].shuffle, e.shuffle));
        for (Int x = 0; x <= upto; ++x) {
            try {
                Int want = elements[i].apply(x);
                if (le.apply(x) != want || rg.apply(x) != want) {
                    fail(rep.identity_ok,
                         "identity law fails for " + describe(elements[i], i) +
                             " at " + std::to_string(x));
                    break;
                }
            } catch (const Error& err) {
                if (err.code != Errc::not_found_within_budget) throw;
            }
        }
    }

    // Inverse laws. A table-backed inverse is only valid through `upto`, so
    // a lookup past its head is a data limit, not a counterexample.
    for (size_t i = 0; i < elements.size() && rep.inverses_ok; ++i) {
        I1Element inv = e;
        try {
            inv = invert_i1(elements[i], upto, budget);
        } catch (const Error& err) {
            fail(rep.inverses_ok, "cannot invert " + describe(elements[i], i) +
                                      ": " + err.what());
            continue;
        }
        for (Int x = 0; x <= upto; ++x) {
            try {
                if (apply2(elements[i], inv, x) != x ||
                    apply2(inv, elements[i], x) != x) {
                    fail(rep.inverses_ok,
                         "inverse law fails for " + describe(elements[i], i) +
                             " at " + std::to_string(x));
                    break;
                }
            } catch (const Error& err) {
                if (err.code != Errc::not_found_within_budget) throw;
            }
        }
    }
    return rep;
}

} // namespace shuffles::algebra
