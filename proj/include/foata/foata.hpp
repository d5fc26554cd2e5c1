#pragma once

#include <vector>

#include "foata/perm.hpp"

namespace foata {

/// An injective word: a finite sequence of pairwise distinct integers.
/// Permutations embed as their one-line words.
using Word = std::vector<int>;

/// The cut-and-rotate map gamma_x.  The comparison case is chosen from
/// the last letter of r; blocks are cut after every letter on the case
/// side and the last letter of each block moves to its front.
/// Requires r nonempty and x not a letter of r.
Word gamma(int x, const Word& r);

/// Inverse of gamma(x, .) on its image: case chosen from the first
/// letter, blocks cut before each letter on the case side, first letter
/// of each block moves to its end.
Word gamma_inverse(int x, const Word& c);

/// The second fundamental transformation, computed by the step-wise
/// algorithm (the recursion Phi(r x) = gamma_x(Phi(r)) x gives the same
/// map and serves as the test oracle).
Word phi_word(const Word& r);
Word phi_word_inverse(const Word& r);

Perm phi(const Perm& w);
Perm phi_inverse(const Perm& w);

/// Right-to-left variant rev . phi . rev, computed directly by the
/// mirrored algorithm: letters are consumed right to left, blocks are
/// cut before case-side letters, block heads move to the end.
Perm rtl_phi(const Perm& w);
Perm rtl_phi_inverse(const Perm& w);

/// One intermediate row of the step-wise algorithm together with the
/// cuts applied when the row is consumed (empty for the final row).
/// Cuts index the letter they attach to, 0-based; they sit after that
/// letter for phi and before it for rtl_phi.
struct TraceRow {
    Word letters;
    std::vector<int> cuts;
};

struct FoataTrace {
    std::vector<TraceRow> rows;
    bool cuts_before = false;
};

FoataTrace phi_trace(const Perm& w);
FoataTrace rtl_phi_trace(const Perm& w);

}  // namespace foata
