#include "shuffles/shuffle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <unordered_map>

#include "shuffles/errors.hpp"

namespace shuffles {

size_t UniformComponent::infinite_count() const {
    size_t n = 0;
    for (const auto& d : domains) n += d.is_infinite();
    return n;
}

Int UniformComponent::strict_degree() const {
    if (shape != Shape::strict_uniform)
        raise(Errc::generalized_shape_unsupported,
              "generalized component has no parity degree");
    size_t k = domains.size();
    size_t inf = infinite_count();
    if (inf == k) return 2 * static_cast<Int>(k) - 1; // all infinite
    if (inf == 0) return 0;                           // bench
    return 2 * static_cast<Int>(k - 1);               // finite head
}

const UniformComponent& MixedShuffle::component_at(Int t) const {
    if (t >= 0 && t < static_cast<Int>(fixed_count()))
        return components[static_cast<size_t>(t)];
    if (has_family() && t >= static_cast<Int>(fixed_count()))
        return components.back();
    raise(Errc::domain_violation,
          "no component " + std::to_string(t) + " in '" + label + "'");
}

void validate(MixedShuffle& s) {
    for (size_t ci = 0; ci < s.components.size(); ++ci) {
        UniformComponent& c = s.components[ci];
        if (c.is_family && ci + 1 != s.components.size())
            raise(Errc::omega_family_not_last,
                  "an omega-family must be the final component");
        if (c.domains.empty())
            raise(Errc::empty_domain, "component needs at least one index domain");
        int orient = 0;
        size_t inf = 0;
        for (const IndexDomain& d : c.domains) {
            if (d.kind == IndexDomain::Kind::finite_prefix && d.m < 1)
                raise(Errc::empty_domain, "finite prefix needs m >= 1");
            if (d.kind == IndexDomain::Kind::finite_range && d.n > d.m)
                raise(Errc::empty_domain, "finite range needs n <= m");
            if (!d.is_infinite()) continue;
            ++inf;
            if (orient == 0)
                orient = d.orientation();
            else if (orient != d.orientation())
                raise(Errc::mixed_orientation,
                      "infinite domains of one component must share an orientation");
        }
        c.orientation = orient;
        size_t k = c.domains.size();
        bool strict = (inf == k) || (inf == 0 && k == 1) ||
                      (inf == k - 1 && !c.domains[0].is_infinite());
        c.shape = strict ? Shape::strict_uniform : Shape::generalized;
        if (!c.value)
            raise(Errc::document_error, "component has no value map");
        size_t want = k + (c.is_family ? 1 : 0);
        if (c.value->arity() != want)
            raise(Errc::domain_violation, "value map arity mismatch");
    }
}

std::string to_string(const Address& a) {
    std::string out = "(" + std::to_string(a.t);
    for (Int i : a.indices) out += "," + std::to_string(i);
    return out + ")";
}

Address parse_address(std::string_view text) {
    auto bad = [&] {
        raise(Errc::syntax_error, "bad address '" + std::string(text) + "'");
    };
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') bad();
    ++pos;
    std::vector<Int> parts;
    for (;;) {
        skip_ws();
        Int v = 0;
        auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc()) bad();
        pos = static_cast<size_t>(p - text.data());
        parts.push_back(v);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos >= text.size() || text[pos] != ')') bad();
    ++pos;
    skip_ws();
    if (pos != text.size()) bad();
    if (parts.empty()) bad();
    Address a;
    a.t = parts[0];
    a.indices.assign(parts.begin() + 1, parts.end());
    return a;
}

// ---- descriptors ----------------------------------------------------------

namespace {

std::string domain_token(const IndexDomain& d) {
    switch (d.kind) {
    case IndexDomain::Kind::plus_inf: return "+inf";
    case IndexDomain::Kind::minus_inf: return "-inf";
    default: return std::to_string(d.finite_size());
    }
}

} // namespace

std::string component_degree_string(const UniformComponent& c) {
    if (c.shape == Shape::strict_uniform) return std::to_string(c.strict_degree());
    std::string out = "(";
    for (size_t i = 0; i < c.domains.size(); ++i) {
        if (i) out += ",";
        out += domain_token(c.domains[i]);
    }
    return out + ")";
}

int component_sign(const UniformComponent& c) { return c.orientation; }

namespace {

std::string descriptor(const MixedShuffle& s, bool degree) {
    std::string out = "(";
    out += s.has_family() ? (degree ? "w" : "+") : (degree ? std::to_string(s.fixed_count()) : "0");
    out += ", [";
    for (size_t i = 0; i < s.components.size(); ++i) {
        if (i) out += ", ";
        const UniformComponent& c = s.components[i];
        if (degree)
            out += component_degree_string(c);
        else
            out += c.orientation > 0 ? "+" : c.orientation < 0 ? "-" : "0";
        if (c.is_family) out += ", ...";
    }
    return out + "])";
}

} // namespace

std::string degree_string(const MixedShuffle& s) { return descriptor(s, true); }
std::string sign_string(const MixedShuffle& s) { return descriptor(s, false); }

// ---- enumeration ----------------------------------------------------------

Dovetail::Dovetail(const MixedShuffle& s) : s_(&s) {
    if (!s.has_family()) {
        Int last = 0;
        bool finite = true;
        for (size_t t = 0; t < s.components.size(); ++t) {
            Int extent = static_cast<Int>(t);
            for (const IndexDomain& d : s.components[t].domains) {
                if (d.is_infinite()) {
                    finite = false;
                    break;
                }
                Int lo = d.kind == IndexDomain::Kind::finite_prefix ? 0 : d.n;
                Int hi = d.kind == IndexDomain::Kind::finite_prefix ? d.m - 1 : d.m;
                extent = std::max({extent, std::abs(lo), std::abs(hi)});
            }
            if (!finite) break;
            last = std::max(last, extent);
        }
        if (finite) last_round_ = last;
    }
}

// All new tuples of component t_ at round round_, ascending lexicographic.
// On the component's first eligible round (fresh) that is its whole ball;
// afterwards only the shell max|i_j| == round_, generated without scanning
// the ball's interior.
void Dovetail::generate(const UniformComponent& c, bool fresh) {
    size_t k = c.domains.size();
    std::vector<std::pair<Int, Int>> box(k);
    for (size_t j = 0; j < k; ++j) {
        box[j] = c.domains[j].ball_bounds(round_);
        if (box[j].first > box[j].second) return; // empty this round
    }
    Int r = round_;
    // can_bound[j]: some domain at position >= j reaches -r or r
    std::vector<char> can_bound(k + 1, 0);
    for (size_t j = k; j-- > 0;) {
        bool here = (box[j].first <= -r && -r <= box[j].second) ||
                    (box[j].first <= r && r <= box[j].second);
        can_bound[j] = can_bound[j + 1] || here;
    }
    if (!fresh && !can_bound[0]) return; // no shell tuple exists

    std::vector<Int> idx(k);
    auto emit = [&] { batch_.push_back(idx); };
    auto gen = [&](auto&& self, size_t j, bool bounded) -> void {
        if (j == k) {
            emit();
            return;
        }
        auto [lo, hi] = box[j];
        if (fresh || bounded || can_bound[j + 1]) {
            for (Int v = lo; v <= hi; ++v) {
                idx[j] = v;
                self(self, j + 1, bounded || v == -r || v == r);
            }
        } else {
            // the boundary must appear here: only -r and r are viable
            for (Int v : {-r, r}) {
                if (v < lo || v > hi) continue;
                idx[j] = v;
                self(self, j + 1, true);
            }
        }
    };
    // avoid emitting -r == r twice when r == 0
    if (r == 0) {
        auto gen0 = [&](auto&& self, size_t j) -> void {
            if (j == k) {
                emit();
                return;
            }
            auto [lo, hi] = box[j];
            for (Int v = lo; v <= hi; ++v) {
                idx[j] = v;
                self(self, j + 1);
            }
        };
        gen0(gen0, 0);
        return;
    }
    gen(gen, 0, false);
}

// Advances (t_, round_) until a nonempty batch is produced.
bool Dovetail::refill() {
    batch_.clear();
    batch_pos_ = 0;
    for (;;) {
        if (steps_ >= step_limit_) return false;
        ++t_;
        if (!(s_->component_exists(t_) && t_ <= round_)) {
            if (last_round_ && round_ >= *last_round_) {
                exhausted_ = true;
                return false;
            }
            if (round_ >= round_limit_) return false;
            ++round_;
            t_ = -1;
            ++steps_; // opening a round costs one step, so budgets always bind
            continue;
        }
        generate(s_->component_at(t_), /*fresh=*/t_ == round_);
        if (!batch_.empty()) return true;
    }
}

bool Dovetail::next(Visit& out) {
    if (batch_pos_ >= batch_.size() && !refill()) return false;
    const UniformComponent& c = s_->component_at(t_);
    std::vector<Int>& current = batch_[batch_pos_++];
    out.address.t = t_;
    out.address.indices = current;
    if (c.is_family) current.push_back(t_);
    ++steps_;
    Int value;
    if (c.value->try_eval(current, value))
        out.value = value;
    else
        out.value.reset(); // tuple maps outside the representable range
    return true;
}

std::vector<std::pair<Int, Address>> enumerate_support(const MixedShuffle& s,
                                                       Int budget) {
    std::vector<std::pair<Int, Address>> out;
    Dovetail dt(s);
    dt.set_step_limit(budget);
    Dovetail::Visit v;
    while (dt.steps() < budget && dt.next(v))
        if (v.value) out.emplace_back(*v.value, v.address);
    return out;
}

VerificationReport verify(const MixedShuffle& s, Int upto, Int budget) {
    VerificationReport rep;
    rep.checked_up_to = upto;
    rep.covered.assign(static_cast<size_t>(upto) + 1, false);
    std::unordered_map<Int, Address> first;
    Dovetail dt(s);
    dt.set_step_limit(budget);
    Dovetail::Visit v;
    while (dt.steps() < budget && dt.next(v)) {
        if (!v.value || *v.value < 0 || *v.value > upto) continue;
        auto [it, inserted] = first.try_emplace(*v.value, v.address);
        if (inserted)
            rep.covered[static_cast<size_t>(*v.value)] = true;
        else
            rep.duplicates.push_back({*v.value, it->second, v.address});
    }
    rep.exhausted = dt.exhausted();
    rep.budget_used = dt.steps();
    for (Int x = 0; x <= upto; ++x)
        if (!rep.covered[static_cast<size_t>(x)]) rep.missing.push_back(x);
    return rep;
}

// ---- order types ----------------------------------------------------------

ordinal::OrderType component_order_type(const UniformComponent& c) {
    ordinal::OrderType tau = ordinal::normalize({ordinal::Atom::fin(1)});
    for (size_t j = c.domains.size(); j-- > 0;) {
        const IndexDomain& d = c.domains[j];
        if (d.is_infinite())
            tau = ordinal::mul_omega(tau, d.orientation() > 0 ? ordinal::Sign::plus
                                                              : ordinal::Sign::minus);
        else
            tau = ordinal::mul_finite(tau, d.finite_size());
    }
    if (c.is_family) {
        tau.repeats_omega = true;
        tau = ordinal::sum({tau});
    }
    return tau;
}

ordinal::OrderType order_type(const MixedShuffle& s) {
    std::vector<ordinal::OrderType> parts;
    parts.reserve(s.components.size());
    for (const UniformComponent& c : s.components)
        parts.push_back(component_order_type(c));
    return ordinal::sum(parts);
}

// ---- order equivalence ----------------------------------------------------

std::string equivalence_signature(const MixedShuffle& s) {
    std::string out;
    for (const UniformComponent& c : s.components) {
        if (c.shape != Shape::strict_uniform)
            raise(Errc::generalized_shape_unsupported,
                  "order equivalence is defined for strict presentations only");
        out += "(";
        for (size_t i = 0; i < c.domains.size(); ++i) {
            if (i) out += ",";
            const IndexDomain& d = c.domains[i];
            out += d.is_infinite() ? (d.orientation() > 0 ? "+" : "-")
                                   : std::to_string(d.finite_size());
        }
        out += ")";
        if (c.is_family) out += "*w";
        out += " ";
    }
    return out;
}

bool order_equivalent(const MixedShuffle& a, const MixedShuffle& b) {
    return equivalence_signature(a) == equivalence_signature(b);
}

} // namespace shuffles
