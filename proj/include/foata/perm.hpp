#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace foata {

enum class Parity { even, odd };

/// A permutation of {1..n} in one-line notation.
///
/// Positions and values are 1-indexed on the whole public surface:
/// images()[i-1] == sigma(i).  Values are immutable after construction.
class Perm {
public:
    /// Validates that `images` is a bijection of {1..n}; throws
    /// std::invalid_argument otherwise (duplicate, out of range, empty).
    explicit Perm(std::vector<int> images);

    static Perm identity(int n);
    /// rho = [n, n-1, ..., 1].
    static Perm rho(int n);

    /// Accepts whitespace- or comma-separated integers with optional
    /// surrounding brackets, e.g. "6 4 3 7 5 2 1" or "[5,6,3,2,1,4]".
    static Perm parse(std::string_view text);

    /// Wraps a vector already known to be a valid one-line word.
    static Perm unchecked(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool is_even() const;
    long long inversions() const;

    Perm inverse() const;
    /// rev(sigma) = [sigma_n, ..., sigma_1] = sigma * rho.
    Perm reversed() const;
    /// com(sigma) = [n+1-sigma_1, ..., n+1-sigma_n] = rho * sigma.
    Perm complemented() const;

    std::string str(bool bracketed = false) const;

    /// Index of this permutation in the lexicographic order of S_n.
    long long lex_rank() const;
    static Perm from_lex_rank(int n, long long rank);

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    Perm() = default;
    std::vector<int> images_;
};

/// Composition with (a*b)(i) = a(b(i)).  Under this convention
/// right-multiplying by s_i swaps the entries at positions i, i+1 of the
/// one-line notation.  Throws std::invalid_argument on degree mismatch.
Perm compose(const Perm& a, const Perm& b);

Parity parity(const Perm& a);

long long factorial(int n);

/// Visit all of S_n in lexicographic one-line order.
template <typename F>
void for_each_permutation(int n, F&& visit) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    do {
        visit(Perm::unchecked(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

/// Visit all even permutations of degree n in lexicographic order.
template <typename F>
void for_each_even_permutation(int n, F&& visit) {
    for_each_permutation(n, [&](const Perm& p) {
        if (p.is_even()) visit(p);
    });
}

}  // namespace foata
