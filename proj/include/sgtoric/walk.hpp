#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgtoric/binomial.hpp"
#include "sgtoric/sgraph.hpp"

namespace sgtoric {

/// Alternating vertex/edge sequence v1 e1 v2 ... et v(t+1).
struct Walk {
    std::vector<int> verts;  // t+1 entries (>= 1)
    std::vector<int> edges;  // t entries

    int length() const { return static_cast<int>(edges.size()); }
    bool closed() const { return !verts.empty() && verts.front() == verts.back(); }
    bool trivial() const { return edges.empty(); }

    bool operator==(const Walk&) const = default;
    auto operator<=>(const Walk&) const = default;
};

void validate_walk(const Walk& w, const SignedGraph& g);

Walk reverse_walk(const Walk& w);
/// Walk going through w and then w2 (endpoints must match).
Walk concat_walks(const Walk& w, const Walk& w2);
/// Rotation of a closed walk so it starts at vertex position `pos` (0-based).
Walk rotate_walk(const Walk& w, int pos);

/// Lexicographically least (vertex id, edge id) token stream over all
/// rotations (closed walks) and the two directions.
Walk canonical_form(const Walk& w);

/// Positions (0-based, into verts[0..t-1]) of unbalanced vertex terms.
/// For open walks only internal terms are considered; for closed walks the
/// wrap-around term at position 0 is included.
std::vector<int> unbalanced_positions(const Walk& w, const SignedGraph& g);

/// mu(w) = (-1)^(number of unbalanced vertex terms).
int mu(const Walk& w, const SignedGraph& g);

struct BalancedDecomposition {
    std::vector<Walk> sections;  // section i has parity class i % 2
    int anchor_pos = 0;          // vertex position of the chosen first unbalanced term
};

/// Maximal balanced sections. Closed walks are anchored at the unbalanced
/// vertex term with least (vertex id, position); with no unbalanced term the
/// single section is the walk itself. Open walks split at internal
/// unbalanced terms.
BalancedDecomposition balanced_decomposition(const Walk& w, const SignedGraph& g);

/// B_w for an even closed walk; raw exponents (no reduction), deterministic
/// sign from the decomposition anchor. A walk with no unbalanced vertex term
/// yields B+ = prod E(w), B- = 1.
Binomial binomial_of_walk(const Walk& w, const SignedGraph& g);

/// The multigraph [w]: V(w) with the edge multiset E(w).
SignedMultigraph walk_multigraph(const Walk& w, const SignedGraph& g);

/// Serialize/parse "v1 e1 v2 e2 ... v1" token lines.
std::string format_walk(const Walk& w);
Walk parse_walk(std::string_view text);

}  // namespace sgtoric
