#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "shuffles/domain.hpp"
#include "shuffles/ints.hpp"
#include "shuffles/ordinal.hpp"
#include "shuffles/value_map.hpp"

namespace shuffles {

enum class Shape { strict_uniform, generalized };

/// One uniform block of a presentation: an index-domain tuple (outermost
/// first) plus a value map. All infinite domains share one orientation.
struct UniformComponent {
    std::vector<IndexDomain> domains;
    ValueMapPtr value;
    bool is_family = false; // template over the trailing component index

    // filled in by validate()
    Shape shape = Shape::strict_uniform;
    int orientation = 0; // of the infinite domains; 0 when none (bench)

    bool is_bench() const { return orientation == 0; }
    size_t infinite_count() const;
    /// 2t / 2t+1 per the uniform-set parity; 0 for a bench. Generalized
    /// components have no single degree (raises).
    Int strict_degree() const;
};

/// Ordered presentation of a shuffle: a finite component list, optionally
/// closed by one omega-family template (component index t, t >= fixed count,
/// enters the template's value map as the extra variable).
struct MixedShuffle {
    std::string label;
    std::vector<UniformComponent> components; // family, when present, last

    bool has_family() const {
        return !components.empty() && components.back().is_family;
    }
    size_t fixed_count() const {
        return components.size() - (has_family() ? 1 : 0);
    }
    bool component_exists(Int t) const {
        return t >= 0 && (has_family() || t < static_cast<Int>(fixed_count()));
    }
    const UniformComponent& component_at(Int t) const;
};

/// Checks domains, orientation and parity; assigns shape and orientation.
void validate(MixedShuffle& s);

/// Index tuple locating a natural inside a presentation: component index t
/// followed by the component's indices. Compared lexicographically as the
/// flat integer tuple (t, i_1, ..., i_k).
struct Address {
    Int t = 0;
    std::vector<Int> indices;

    bool operator==(const Address&) const = default;
};

std::string to_string(const Address& a); // "(1,-3,-4)"
Address parse_address(std::string_view text);

// ---- degree / sign descriptors ------------------------------------------

/// Per-component entry of the degree descriptor: the parity degree for
/// strict components, the literal domain-tuple signature otherwise.
std::string component_degree_string(const UniformComponent& c);
int component_sign(const UniformComponent& c);

/// "(2, [1, 3])"; the count renders as "w" for an omega-family, whose
/// template entry is followed by "...".
std::string degree_string(const MixedShuffle& s);
/// "(0, [+, -])"; the count sign is "+" for an omega-family.
std::string sign_string(const MixedShuffle& s);

// ---- enumeration ----------------------------------------------------------

/// Fair deterministic dovetail over all (t, I) tuples: round r visits, in
/// ascending (t, lexicographic I) order, the tuples with t <= r and every
/// |index| <= r that no earlier round visited.
class Dovetail {
public:
    explicit Dovetail(const MixedShuffle& s);

    struct Visit {
        Address address;
        std::optional<Int> value; // empty: evaluation failed (overflow,
                                  // negative exponent, table miss)
    };

    /// False when the presentation is exhausted or a limit was reached;
    /// exhausted() tells the two apart. Raising a limit resumes the walk.
    bool next(Visit& out);
    /// Steps charged so far: one per visited tuple plus one per round opened.
    Int steps() const { return steps_; }
    Int round() const { return round_; }
    bool exhausted() const { return exhausted_; }
    void set_step_limit(Int limit) { step_limit_ = limit; }
    void set_round_limit(Int limit) { round_limit_ = limit; }

private:
    bool refill();
    void generate(const UniformComponent& c, bool fresh);

    const MixedShuffle* s_;
    Int round_ = 0;
    Int t_ = -1;
    std::vector<std::vector<Int>> batch_; // current (t, round) tuples, lex order
    size_t batch_pos_ = 0;
    Int steps_ = 0;
    Int step_limit_ = std::numeric_limits<Int>::max();
    Int round_limit_ = std::numeric_limits<Int>::max();
    bool exhausted_ = false;
    std::optional<Int> last_round_; // all-finite presentations exhaust
};

std::vector<std::pair<Int, Address>> enumerate_support(const MixedShuffle& s,
                                                       Int budget);

struct VerificationReport {
    Int checked_up_to = 0;
    std::vector<bool> covered; // index 0..checked_up_to
    struct Duplicate {
        Int value;
        Address first;
        Address second;
    };
    std::vector<Duplicate> duplicates;
    std::vector<Int> missing;
    Int budget_used = 0;
    bool exhausted = false; // enumeration ran out of tuples, not budget

    /// Membership claim "S in S_infinity up to N".
    bool ok() const { return duplicates.empty() && missing.empty(); }
};

/// Semi-decision of S_infinity membership up to `upto`: coverage gaps are
/// definite only when the report is exhausted.
VerificationReport verify(const MixedShuffle& s, Int upto, Int budget);

/// Domain-tuple fold, innermost to outermost: finite domain of size m
/// multiplies by m, an infinite domain wraps in omega of its orientation.
/// Components are summed in order; a family contributes a repeating tail.
ordinal::OrderType order_type(const MixedShuffle& s);
ordinal::OrderType component_order_type(const UniformComponent& c);

// ---- order equivalence ----------------------------------------------------

/// Structural signature deciding order isomorphism of strict presentations:
/// per component, finite domain sizes and infinite orientations in order.
/// Raises generalized_shape_unsupported for generalized components.
std::string equivalence_signature(const MixedShuffle& s);
bool order_equivalent(const MixedShuffle& a, const MixedShuffle& b);

} // namespace shuffles
