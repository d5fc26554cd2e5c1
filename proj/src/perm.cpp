#include "foata/perm.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace foata {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n == 0) throw std::invalid_argument("permutation must have degree >= 1");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : images_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " out of range for degree " + std::to_string(n));
        if (seen[static_cast<size_t>(v) - 1])
            throw std::invalid_argument("duplicate value " + std::to_string(v));
        seen[static_cast<size_t>(v) - 1] = 1;
    }
}

Perm Perm::identity(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return unchecked(std::move(v));
}

Perm Perm::rho(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return unchecked(std::move(v));
}

Perm Perm::unchecked(std::vector<int> images) {
    Perm p;
    p.images_ = std::move(images);
    return p;
}

Perm Perm::parse(std::string_view text) {
    std::vector<int> values;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' ||
                text[i] == '[' || text[i] == ']' || text[i] == '(' || text[i] == ')'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i)
            throw std::invalid_argument("malformed token at '" +
                                        std::string(text.substr(i, 8)) + "'");
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc{} || ptr != text.data() + j)
            throw std::invalid_argument("malformed token in permutation text");
        values.push_back(value);
        i = j;
        skip();
    }
    if (values.empty()) throw std::invalid_argument("empty permutation text");
    return Perm(std::move(values));
}

bool Perm::is_even() const { return inversions() % 2 == 0; }

long long Perm::inversions() const {
    long long count = 0;
    const int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (images_[static_cast<size_t>(i)] > images_[static_cast<size_t>(j)]) ++count;
    return count;
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= degree(); ++i)
        inv[static_cast<size_t>((*this)(i)) - 1] = i;
    return unchecked(std::move(inv));
}

Perm Perm::reversed() const {
    return unchecked(std::vector<int>(images_.rbegin(), images_.rend()));
}

Perm Perm::complemented() const {
    const int n = degree();
    std::vector<int> out(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) out[i] = n + 1 - images_[i];
    return unchecked(std::move(out));
}

std::string Perm::str(bool bracketed) const {
    std::ostringstream os;
    if (bracketed) os << '[';
    for (size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) os << (bracketed ? "," : " ");
        os << images_[i];
    }
    if (bracketed) os << ']';
    return os.str();
}

long long Perm::lex_rank() const {
    const int n = degree();
    long long rank = 0;
    long long f = factorial(n - 1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int v = images_[static_cast<size_t>(i)];
        int smaller = 0;
        for (int u = 1; u < v; ++u)
            if (!used[static_cast<size_t>(u) - 1]) ++smaller;
        rank += smaller * f;
        used[static_cast<size_t>(v) - 1] = 1;
        if (n - 1 - i > 0) f /= (n - 1 - i);
    }
    return rank;
}

Perm Perm::from_lex_rank(int n, long long rank) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (rank < 0 || rank >= factorial(n)) throw std::invalid_argument("rank out of range");
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    long long f = factorial(n);
    for (int i = n; i >= 1; --i) {
        f /= i;
        auto idx = static_cast<size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return unchecked(std::move(out));
}

Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: degree mismatch (" +
                                    std::to_string(a.degree()) + " vs " +
                                    std::to_string(b.degree()) + ")");
    std::vector<int> out(a.images().size());
    for (int i = 1; i <= a.degree(); ++i)
        out[static_cast<size_t>(i) - 1] = a(b(i));
    return Perm::unchecked(std::move(out));
}

Parity parity(const Perm& a) { return a.is_even() ? Parity::even : Parity::odd; }

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace foata
