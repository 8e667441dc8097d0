#pragma once

#include "superwig/algebra.hpp"

#include <cstddef>
#include <vector>

namespace sw {

// generic: two-case rule on even labels, interlacing on odd labels, dominance.
// covariant / contravariant: generic plus the conditions of the tensor-power families.
// automatic: covariant if the top weight is covariant, else contravariant if it is
// contravariant, else generic.
enum class BranchRule { generic, covariant, contravariant, automatic };

bool covariant_admissible(const Weight& w);
bool contravariant_admissible(const Weight& w);
BranchRule resolve_rule(const Weight& top, BranchRule rule);

// Generic edge test; also checks shapes.
bool valid_branch(const Weight& parent, const Weight& child);
bool branch_allowed(const Weight& parent, const Weight& child, BranchRule rule);

// Children in lexicographic order.
std::vector<Weight> branch(const Weight& parent, BranchRule rule = BranchRule::automatic);

struct GTPattern {
    std::vector<Weight> rows;  // top row first

    const Weight& top() const { return rows.front(); }
    // Row of the level-K algebra (length K).
    const Weight& level(int K) const { return rows[rows.size() - K]; }
    Weight& level(int K) { return rows[rows.size() - K]; }
    int size() const { return static_cast<int>(rows.size()); }

    friend bool operator==(const GTPattern&, const GTPattern&) = default;
    friend auto operator<=>(const GTPattern&, const GTPattern&) = default;
};

std::vector<GTPattern> enumerate_patterns(const Weight& top, BranchRule rule = BranchRule::automatic);
std::size_t pattern_count(const Weight& top, BranchRule rule = BranchRule::automatic);
bool valid_pattern(const GTPattern& p, BranchRule rule = BranchRule::automatic);

int pattern_parity(const GTPattern& p);
// Weyl dimension of the gl(m) + gl(n) module with highest weight w.
Rational even_dimension(const Weight& w);

// Young diagram of a covariant weight, and back.
std::vector<long> covariant_partition(const Weight& w);
bool covariant_from_partition(const std::vector<long>& rows, const Shape& s, Weight& out);
// Diagram whose dual module has highest weight w (w contravariant).
std::vector<long> contravariant_partition(const Weight& w);

} // namespace sw
