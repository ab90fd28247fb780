#include "shuffles/canonical.hpp"

#include <algorithm>

#include "shuffles/errors.hpp"

namespace shuffles::canonical {

namespace {

// A block's first/last part is reachable for merging: an omega run has a
// first part but no last, an omega* run the opposite.
bool has_first(const PartBlock& b) { return !b.omega_star; }
bool has_last(const PartBlock& b) { return !b.omega; }
bool single(const PartBlock& b) { return !b.omega && !b.omega_star && b.count == 1; }

std::optional<Int> add_lengths(std::optional<Int> a, std::optional<Int> b) {
    if (!a || !b) return std::nullopt;
    return checked_add(*a, *b);
}

std::string part_name(const PartType& t) {
    switch (t.kind) {
    case PartKind::ladder: return "ladder";
    case PartKind::snake: return "snake";
    case PartKind::bench:
        return t.length ? "bench(" + std::to_string(*t.length) + ")" : "bench(?)";
    }
    return "?";
}

} // namespace

std::string to_string(const PartSequence& ps) {
    std::string out;
    for (size_t i = 0; i < ps.blocks.size(); ++i) {
        if (i) out += ", ";
        const PartBlock& b = ps.blocks[i];
        out += part_name(b.type);
        if (b.omega)
            out += " x w";
        else if (b.omega_star)
            out += " x w*";
        else if (b.count != 1)
            out += " x " + std::to_string(b.count);
    }
    return out;
}

PartSequence part_type_sequence(const MixedShuffle& s) {
    PartSequence ps;
    for (const UniformComponent& c : s.components) {
        const IndexDomain& inner = c.domains.back();
        PartBlock b;
        b.type = inner.is_infinite()
                     ? (inner.orientation() > 0 ? PartType::ladder() : PartType::snake())
                     : PartType::bench(inner.finite_size());
        int outer_orient = 0;
        Int copies = 1;
        for (size_t j = 0; j + 1 < c.domains.size(); ++j) {
            const IndexDomain& d = c.domains[j];
            if (d.is_infinite())
                outer_orient = d.orientation();
            else
                copies = checked_mul(copies, d.finite_size());
        }
        if (c.is_family) outer_orient = +1; // omega-many template instances
        if (outer_orient > 0)
            b.omega = true;
        else if (outer_orient < 0)
            b.omega_star = true;
        else
            b.count = copies;
        ps.blocks.push_back(b);
    }
    return ps;
}

CanonicalResult canonicalize(PartSequence ps) {
    auto& blocks = ps.blocks;
    // Infinite runs of benches are segments in disguise.
    for (PartBlock& b : blocks) {
        if (b.type.kind != PartKind::bench) continue;
        if (b.omega) {
            b = {PartType::ladder(), 1, false, false};
        } else if (b.omega_star) {
            b = {PartType::snake(), 1, false, false};
        } else if (b.count != 1) {
            b.type.length = b.type.length
                                ? std::optional<Int>(checked_mul(*b.type.length, b.count))
                                : std::nullopt;
            b.count = 1;
        }
    }
    // Leftmost-first fixpoint of the bench rewrites.
    size_t i = 0;
    while (i + 1 < blocks.size()) {
        PartBlock& l = blocks[i];
        PartBlock& r = blocks[i + 1];
        bool l_bench = l.type.kind == PartKind::bench;
        bool r_bench = r.type.kind == PartKind::bench;
        if (l_bench && r_bench) {
            l.type.length = add_lengths(l.type.length, r.type.length);
            blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            if (i > 0) --i;
            continue;
        }
        if (l.type.kind == PartKind::snake && r_bench && has_last(l)) {
            blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            if (i > 0) --i;
            continue;
        }
        if (l_bench && r.type.kind == PartKind::ladder && has_first(r)) {
            blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
            if (i > 0) --i;
            continue;
        }
        ++i;
    }
    bool unique = true;
    for (size_t j = 0; j + 1 < blocks.size(); ++j) {
        if (blocks[j].type.kind == PartKind::snake && has_last(blocks[j]) &&
            blocks[j + 1].type.kind == PartKind::ladder && has_first(blocks[j + 1])) {
            unique = false;
            break;
        }
    }
    return {std::move(ps), unique};
}

ordinal::OrderType order_type(const PartSequence& ps) {
    using ordinal::Atom;
    using ordinal::OrderType;
    std::vector<OrderType> parts;
    for (const PartBlock& b : ps.blocks) {
        OrderType base;
        switch (b.type.kind) {
        case PartKind::ladder: base.atoms.push_back(Atom::omega()); break;
        case PartKind::snake: base.atoms.push_back(Atom::omega_star()); break;
        case PartKind::bench:
            if (!b.type.length)
                raise(Errc::domain_violation, "bench of unknown length has no order type");
            base.atoms.push_back(Atom::fin(*b.type.length));
            break;
        }
        if (b.omega) {
            base.repeats_omega = true;
            parts.push_back(ordinal::sum({base}));
        } else if (b.omega_star) {
            parts.push_back(ordinal::mul_omega(base, ordinal::Sign::minus));
        } else {
            parts.push_back(ordinal::mul_finite(base, b.count));
        }
    }
    return ordinal::sum(parts);
}

MixedShuffle transfer(const MixedShuffle& s, size_t pair_index, Int n, Int budget) {
    if (n < 1) raise(Errc::domain_violation, "transfer needs n >= 1");
    (void)budget;
    PartSequence ps = part_type_sequence(s);
    if (pair_index + 1 >= ps.blocks.size() ||
        !(single(ps.blocks[pair_index]) &&
          ps.blocks[pair_index].type.kind == PartKind::snake) ||
        !(single(ps.blocks[pair_index + 1]) &&
          ps.blocks[pair_index + 1].type.kind == PartKind::ladder))
        raise(Errc::no_such_pair,
              "no adjacent snake-ladder pair of whole components at index " +
                  std::to_string(pair_index));
    // Blocks map 1:1 onto components; both parts must be single-segment
    // components (one infinite domain each).
    const UniformComponent& snake = s.components[pair_index];
    const UniformComponent& ladder = s.components[pair_index + 1];
    if (snake.domains.size() != 1 || ladder.domains.size() != 1)
        raise(Errc::no_such_pair,
              "transfer needs the snake and ladder to be whole components");

    Int ladder_from = ladder.domains[0].n;
    Int snake_top = snake.domains[0].m;
    std::map<Int, Int> moved;
    for (Int j = 0; j < n; ++j) {
        Int idx = checked_add(ladder_from, j);
        Int value = ladder.value->eval(std::span<const Int>(&idx, 1));
        // j-th transferred element lands n-1-j below the snake's top
        moved[snake_top - (n - 1 - j)] = value;
    }

    MixedShuffle out = s;
    out.label = s.label.empty() ? "transfer" : s.label + "/transfer";
    UniformComponent& new_snake = out.components[pair_index];
    new_snake.value = std::make_shared<OverrideMap>(
        std::make_shared<ShiftedMap>(snake.value, n), std::move(moved));
    UniformComponent& new_ladder = out.components[pair_index + 1];
    new_ladder.value = std::make_shared<ShiftedMap>(ladder.value, n);
    validate(out);
    return out;
}

namespace {

const char* glyph(const PartType& t) {
    switch (t.kind) {
    case PartKind::ladder: return "•-o";
    case PartKind::snake: return "o-•";
    case PartKind::bench: return "•-•";
    }
    return "?";
}

// Canonical blocks flattened to drawable tokens. Finite counts repeat the
// glyph; infinite runs interleave "..." (two shown then one for omega, the
// mirror image for omega*) and never merge with their neighbours.
std::vector<std::string> diagram_tokens(const MixedShuffle& s) {
    PartSequence ps = canonicalize(part_type_sequence(s)).sequence;
    std::vector<std::string> tokens;
    size_t i = 0;
    auto singles_run_end = [&](size_t from) {
        size_t j = from;
        while (j < ps.blocks.size() && single(ps.blocks[j])) ++j;
        return j;
    };
    while (i < ps.blocks.size()) {
        const PartBlock& b = ps.blocks[i];
        if (b.omega) {
            const char* g = glyph(b.type);
            tokens.insert(tokens.end(), {g, g, "...", g, "..."});
            ++i;
            continue;
        }
        if (b.omega_star) {
            const char* g = glyph(b.type);
            tokens.insert(tokens.end(), {"...", g, "...", g, g});
            ++i;
            continue;
        }
        if (!single(b)) {
            for (Int c = 0; c < b.count; ++c) tokens.push_back(glyph(b.type));
            ++i;
            continue;
        }
        // greedy pairwise merges within a run of single parts
        size_t end = singles_run_end(i);
        while (i < end) {
            const PartType& cur = ps.blocks[i].type;
            if (i + 1 < end) {
                const PartType& nxt = ps.blocks[i + 1].type;
                if (cur.kind == PartKind::ladder && nxt.kind == PartKind::snake) {
                    tokens.push_back("•-o-•");
                    i += 2;
                    continue;
                }
                if (cur.kind == PartKind::snake && nxt.kind == PartKind::ladder) {
                    tokens.push_back("o-o");
                    i += 2;
                    continue;
                }
            }
            tokens.push_back(glyph(cur));
            ++i;
        }
    }
    return tokens;
}

} // namespace

std::string diagram(const MixedShuffle& s) {
    std::string out;
    for (const std::string& tok : diagram_tokens(s)) {
        if (!out.empty()) out += " ";
        out += tok;
    }
    return out;
}

std::string diagram_dot(const MixedShuffle& s) {
    std::vector<std::string> tokens = diagram_tokens(s);
    std::string out = "digraph shuffle {\n  rankdir=LR;\n";
    for (size_t i = 0; i < tokens.size(); ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + tokens[i] + "\"];\n";
    for (size_t i = 0; i + 1 < tokens.size(); ++i)
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(i + 1) + ";\n";
    out += "}\n";
    return out;
}

} // namespace shuffles::canonical
