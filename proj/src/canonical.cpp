#include "foata/canonical.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace foata {

namespace {

// Right-multiply a one-line word by s_i (1-indexed): swap positions i, i+1.
void rmul_s(std::vector<int>& one_line, int i) {
    std::swap(one_line[static_cast<size_t>(i) - 1], one_line[static_cast<size_t>(i)]);
}

// Right-multiply by a_k = s_1 s_{k+1}, or by a_k^{-1} = s_{k+1} s_1.
void rmul_a(std::vector<int>& one_line, int k, bool inverted) {
    if (!inverted) {
        rmul_s(one_line, 1);
        rmul_s(one_line, k + 1);
    } else {
        rmul_s(one_line, k + 1);
        rmul_s(one_line, 1);
    }
}

void check_s_factor(const SFactor& f) {
    if (f.j < 1 || (f.ell != 0 && (f.ell < 1 || f.ell > f.j)))
        throw std::invalid_argument("malformed S-factor at j=" + std::to_string(f.j));
}

void check_a_factor(const AFactor& f) {
    bool ok = f.j >= 1;
    switch (f.kind) {
        case AKind::identity: break;
        case AKind::run: ok = ok && f.ell >= 2 && f.ell <= f.j; break;
        case AKind::tail: ok = ok && (f.sign == 1 || f.sign == -1); break;
    }
    if (!ok) throw std::invalid_argument("malformed A-factor at j=" + std::to_string(f.j));
}

}  // namespace

std::vector<int> SFactor::letters() const {
    std::vector<int> out;
    if (!is_identity())
        for (int t = j; t >= ell; --t) out.push_back(t);
    return out;
}

long long SCanonical::gen_count() const {
    long long total = 0;
    for (const auto& f : factors) total += f.gen_count();
    return total;
}

std::string SCanonical::str(bool omit_identity) const {
    std::ostringstream os;
    bool printed = false;
    for (const auto& f : factors) {
        if (f.is_identity() && omit_identity) continue;
        os << '(';
        if (f.is_identity()) {
            os << '1';
        } else {
            for (int t = f.j; t >= f.ell; --t) {
                if (t != f.j) os << ' ';
                os << "s_" << t;
            }
        }
        os << ')';
        printed = true;
    }
    if (!printed) os << "(1)";
    return os.str();
}

int AFactor::gen_count() const {
    switch (kind) {
        case AKind::identity: return 0;
        case AKind::run: return j - ell + 1;
        case AKind::tail: return j;
    }
    return 0;
}

std::vector<std::pair<int, bool>> AFactor::letters() const {
    std::vector<std::pair<int, bool>> out;
    if (kind == AKind::run) {
        for (int t = j; t >= ell; --t) out.emplace_back(t, false);
    } else if (kind == AKind::tail) {
        for (int t = j; t >= 2; --t) out.emplace_back(t, false);
        out.emplace_back(1, sign < 0);
    }
    return out;
}

long long ACanonical::gen_count() const {
    long long total = 0;
    for (const auto& f : factors) total += f.gen_count();
    return total;
}

std::string ACanonical::str(bool omit_identity) const {
    std::ostringstream os;
    bool printed = false;
    for (const auto& f : factors) {
        if (f.kind == AKind::identity && omit_identity) continue;
        os << '(';
        if (f.kind == AKind::identity) {
            os << '1';
        } else {
            bool first = true;
            for (auto [t, inv] : f.letters()) {
                if (!first) os << ' ';
                os << "a_" << t;
                if (inv) os << "^-1";
                first = false;
            }
        }
        os << ')';
        printed = true;
    }
    if (!printed) os << "(1)";
    return os.str();
}

SCanonical s_canonical(const Perm& w) {
    const int n = w.degree();
    SCanonical out;
    out.n = n;
    out.factors.assign(n > 1 ? static_cast<size_t>(n - 1) : 0, SFactor{});
    std::vector<int> cur = w.images();
    for (int j = n - 1; j >= 1; --j) {
        const int target = j + 1;
        int pos = 0;
        for (int i = 1; i <= j + 1; ++i)
            if (cur[static_cast<size_t>(i) - 1] == target) {
                pos = i;
                break;
            }
        if (pos == 0) throw std::logic_error("s_canonical: value not found");
        SFactor f{j, pos == j + 1 ? 0 : pos};
        // pull target to position j+1: right-multiply by s_pos ... s_j
        for (int t = pos; t <= j; ++t) rmul_s(cur, t);
        out.factors[static_cast<size_t>(j) - 1] = f;
    }
    return out;
}

Perm expand_s(const SCanonical& p) {
    if (p.n < 1) throw std::invalid_argument("expand_s: degree must be >= 1");
    if (p.factors.size() != static_cast<size_t>(p.n > 1 ? p.n - 1 : 0))
        throw std::invalid_argument("expand_s: wrong number of factors");
    std::vector<int> cur(static_cast<size_t>(p.n));
    for (int i = 0; i < p.n; ++i) cur[static_cast<size_t>(i)] = i + 1;
    for (size_t k = 0; k < p.factors.size(); ++k) {
        const SFactor& f = p.factors[k];
        check_s_factor(f);
        if (f.j != static_cast<int>(k) + 1)
            throw std::invalid_argument("expand_s: factor index out of order");
        for (int t = f.j; t >= f.ell && !f.is_identity(); --t) rmul_s(cur, t);
    }
    return Perm::unchecked(std::move(cur));
}

ACanonical a_canonical(const Perm& v) {
    if (!v.is_even()) throw std::invalid_argument("a_canonical: permutation must be even");
    const int d = v.degree();
    const int n = d - 1;
    ACanonical out;
    out.n = n;
    out.factors.assign(n > 1 ? static_cast<size_t>(n - 1) : 0, AFactor{});
    std::vector<int> cur = v.images();
    for (int j = n - 1; j >= 1; --j) {
        const int target = j + 2;
        int pos = 0;
        for (int i = 1; i <= target; ++i)
            if (cur[static_cast<size_t>(i) - 1] == target) {
                pos = i;
                break;
            }
        if (pos == 0) throw std::logic_error("a_canonical: residue leaves A_{j+2}");
        // the residue r u^{-1} fixes j+2 iff u places value j+2 where r does
        AFactor chosen;
        int matches = 0;
        for (const AFactor& cand : enumerate_r_a(j)) {
            std::vector<int> expanded(static_cast<size_t>(target));
            for (int i = 0; i < target; ++i) expanded[static_cast<size_t>(i)] = i + 1;
            for (auto [k, inv] : cand.letters()) rmul_a(expanded, k, inv);
            if (expanded[static_cast<size_t>(pos) - 1] == target) {
                chosen = cand;
                ++matches;
            }
        }
        if (matches != 1)
            throw std::logic_error("a_canonical: candidate in R^A_j not unique");
        auto word = chosen.letters();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            rmul_a(cur, it->first, !it->second);
        out.factors[static_cast<size_t>(j) - 1] = chosen;
    }
    for (int i = 1; i <= d; ++i)
        if (cur[static_cast<size_t>(i) - 1] != i)
            throw std::logic_error("a_canonical: nonidentity residue");
    return out;
}

Perm expand_a(const ACanonical& p) {
    const int d = p.n + 1;
    if (d < 1) throw std::invalid_argument("expand_a: degree must be >= 1");
    if (p.factors.size() != static_cast<size_t>(p.n > 1 ? p.n - 1 : 0))
        throw std::invalid_argument("expand_a: wrong number of factors");
    std::vector<int> cur(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<size_t>(i)] = i + 1;
    for (size_t k = 0; k < p.factors.size(); ++k) {
        const AFactor& f = p.factors[k];
        check_a_factor(f);
        if (f.j != static_cast<int>(k) + 1)
            throw std::invalid_argument("expand_a: factor index out of order");
        for (auto [t, inv] : f.letters()) rmul_a(cur, t, inv);
    }
    return Perm::unchecked(std::move(cur));
}

std::vector<SFactor> enumerate_r_s(int j) {
    if (j < 1) throw std::invalid_argument("enumerate_r_s: j must be >= 1");
    std::vector<SFactor> out;
    out.push_back({j, 0});
    for (int ell = j; ell >= 1; --ell) out.push_back({j, ell});
    return out;
}

std::vector<AFactor> enumerate_r_a(int j) {
    if (j < 1) throw std::invalid_argument("enumerate_r_a: j must be >= 1");
    std::vector<AFactor> out;
    out.push_back({j, AKind::identity, 0, 0});
    for (int ell = j; ell >= 2; --ell) out.push_back({j, AKind::run, ell, 0});
    out.push_back({j, AKind::tail, 0, 1});
    out.push_back({j, AKind::tail, 0, -1});
    return out;
}

std::vector<GenLetter> parse_word(std::string_view text) {
    std::vector<GenLetter> out;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        char fam = text[i];
        if (fam == 'e') {
            out.push_back(GenLetter{});
            ++i;
            continue;
        }
        if (fam != 's' && fam != 'a')
            throw std::invalid_argument(std::string("bad generator token at '") + fam + "'");
        ++i;
        if (i < text.size() && text[i] == '_') ++i;
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw std::invalid_argument("generator token missing index");
        int index = 0;
        std::from_chars(text.data() + i, text.data() + j, index);
        i = j;
        bool inverted = false;
        if (text.substr(i, 3) == "^-1") {
            inverted = true;
            i += 3;
        }
        if (inverted && fam != 'a')
            throw std::invalid_argument("only a-generators may be inverted");
        if (index < 1) throw std::invalid_argument("generator index must be >= 1");
        out.push_back(GenLetter{fam, index, inverted});
    }
    return out;
}

Perm word_to_perm(const std::vector<GenLetter>& word, int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<int> cur(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) cur[static_cast<size_t>(i)] = i + 1;
    for (const GenLetter& g : word) {
        if (g.family == 'e') continue;
        if (g.family == 's') {
            if (g.index + 1 > degree)
                throw std::invalid_argument("s_" + std::to_string(g.index) +
                                            " out of range for degree " + std::to_string(degree));
            rmul_s(cur, g.index);
        } else {
            if (g.index + 2 > degree)
                throw std::invalid_argument("a_" + std::to_string(g.index) +
                                            " out of range for degree " + std::to_string(degree));
            rmul_a(cur, g.index, g.inverted);
        }
    }
    return Perm::unchecked(std::move(cur));
}

}  // namespace foata
