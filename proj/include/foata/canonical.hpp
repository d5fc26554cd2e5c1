#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "foata/perm.hpp"

namespace foata {

/// One factor of an S-canonical presentation: an element of
/// R^S_j = { 1, s_j, s_j s_{j-1}, ..., s_j ... s_1 }.
/// ell == 0 encodes the identity; otherwise the factor is the run
/// s_j s_{j-1} ... s_ell with 1 <= ell <= j.
struct SFactor {
    int j = 0;
    int ell = 0;

    bool is_identity() const { return ell == 0; }
    /// The factor s_j ... s_1 (the longest element of R^S_j).
    bool is_full() const { return ell == 1; }
    int gen_count() const { return is_identity() ? 0 : j - ell + 1; }
    /// Generator indices of the word, in word order (descending).
    std::vector<int> letters() const;

    friend bool operator==(const SFactor&, const SFactor&) = default;
};

/// The unique factorization w = w_1 ... w_{n-1}, w_j in R^S_j.
/// Identity factors are stored explicitly so factors[j-1] is always w_j.
struct SCanonical {
    int n = 0;
    std::vector<SFactor> factors;

    /// Total number of generators; equals the inversion number of the
    /// expanded permutation.
    long long gen_count() const;
    std::string str(bool omit_identity = false) const;

    friend bool operator==(const SCanonical&, const SCanonical&) = default;
};

enum class AKind { identity, run, tail };

/// One factor of an A-canonical presentation: an element of
/// R^A_j = { 1, a_j, ..., a_j...a_2, a_j...a_2 a_1, a_j...a_2 a_1^{-1} }.
/// run: a_j ... a_ell with 2 <= ell <= j.  tail: a_j ... a_2 a_1^{sign}.
struct AFactor {
    int j = 0;
    AKind kind = AKind::identity;
    int ell = 0;
    int sign = 0;

    bool is_tail() const { return kind == AKind::tail; }
    int gen_count() const;
    /// Letters of the word as (index, inverted) pairs, in word order.
    std::vector<std::pair<int, bool>> letters() const;

    friend bool operator==(const AFactor&, const AFactor&) = default;
};

/// The unique factorization v = v_1 ... v_{n-1}, v_j in R^A_j, of an
/// element of A_{n+1} (ambient degree n+1).
struct ACanonical {
    int n = 0;
    std::vector<AFactor> factors;

    int degree() const { return n + 1; }
    /// Number of a_i generators; a_1^{-1} counts as one.
    long long gen_count() const;
    std::string str(bool omit_identity = false) const;

    friend bool operator==(const ACanonical&, const ACanonical&) = default;
};

/// S-procedure: repeatedly pull the largest unplaced value to its
/// position on the right.  Factor j is the run starting at the position
/// value j+1 is pulled from.
SCanonical s_canonical(const Perm& w);
Perm expand_s(const SCanonical& p);

/// Factor peeling for A_{n+1}: for j = n-1 down to 1 select the unique
/// candidate u in R^A_j such that the residue v u^{-1} fixes the point
/// j+2.  Throws std::invalid_argument on odd input.
ACanonical a_canonical(const Perm& v);
Perm expand_a(const ACanonical& p);

/// The full sets R^S_j (j+1 elements) and R^A_j (j+2 elements).
std::vector<SFactor> enumerate_r_s(int j);
std::vector<AFactor> enumerate_r_a(int j);

/// A generator token: s_k, a_k, a_k^{-1} or the empty word "e".
struct GenLetter {
    char family = 'e';  // 's', 'a' or 'e'
    int index = 0;
    bool inverted = false;

    friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

/// Tokens of the form s<k>, a<k>, a<k>^-1 or e; "_" after the family
/// letter is accepted ("s_3" == "s3").
std::vector<GenLetter> parse_word(std::string_view text);

/// Left-to-right product of the letters inside S_degree
/// (a_k expands to s_1 s_{k+1}).
Perm word_to_perm(const std::vector<GenLetter>& word, int degree);

}  // namespace foata
