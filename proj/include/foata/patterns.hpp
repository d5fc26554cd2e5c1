#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foata/perm.hpp"

namespace foata {

/// A dashed pattern: blocks of letters that must sit adjacently, with
/// arbitrary gaps between blocks.  All letters together form a
/// permutation of {1..k}.
struct DashedPattern {
    std::vector<std::vector<int>> blocks;

    int letter_count() const;
    /// e.g. "(1-2-4,3)".
    std::string str() const;

    friend bool operator==(const DashedPattern&, const DashedPattern&) = default;
};

/// The q! patterns (pi_1 - pi_2 - ... - pi_q - (q+2),(q+1)), pi in S_q.
std::vector<DashedPattern> pat(int q);

/// Positions (1-indexed, flattened block by block) of an occurrence:
/// consecutive within each block, increasing across blocks, values
/// order-isomorphic to the pattern.  This generic matcher is the oracle
/// path; avoids_pat_q below is the production path.
std::optional<std::vector<int>> find_occurrence(const DashedPattern& p, const Perm& w);

bool occurs(const DashedPattern& p, const Perm& w);

/// True iff no member of pat(q) occurs in w.  Uses the adjacent-descent
/// criterion: w contains some member iff some descent w(j) > w(j+1) has
/// at least q smaller letters strictly to its left (below w(j+1)).
bool avoids_pat_q(int q, const Perm& w);

/// All avoiders in S_m, lexicographic one-line order.  Throws when m
/// exceeds the cap.
std::vector<Perm> enumerate_avoiders(int q, int m, int degree_cap = 9);

}  // namespace foata
