#include "oracles.hpp"

#include <stdexcept>

namespace foata::oracle {

Word gamma(int x, const Word& r) {
    if (r.empty()) throw std::invalid_argument("oracle gamma: empty word");
    const bool le = r.back() <= x;
    std::vector<Word> blocks;
    Word block;
    for (int letter : r) {
        block.push_back(letter);
        if ((letter <= x) == le) {
            blocks.push_back(block);
            block.clear();
        }
    }
    if (!block.empty()) throw std::logic_error("oracle gamma: trailing letters");
    Word out;
    for (const Word& b : blocks) {
        out.push_back(b.back());
        out.insert(out.end(), b.begin(), b.end() - 1);
    }
    return out;
}

Word recursive_phi(const Word& r) {
    if (r.size() <= 1) return r;
    const int x = r.back();
    Word head = recursive_phi(Word(r.begin(), r.end() - 1));
    Word out = gamma(x, head);
    out.push_back(x);
    return out;
}

ACanonical three_step_a_canonical(const Perm& v) {
    // Step 1: the S-canonical word.
    std::vector<int> word;
    for (const SFactor& f : s_canonical(v).factors)
        for (int t : f.letters()) word.push_back(t);
    if (word.size() % 2 != 0)
        throw std::invalid_argument("three-step procedure needs an even permutation");

    // Steps 2+3: pair the letters, insert s_1 s_1 inside each pair.
    // (s_1 s_j) = a_{j-1}; (s_i s_1) = a_{i-1} for i >= 3 and a_1^{-1}
    // for i = 2; otherwise (s_i s_j) = (s_i s_1)(s_1 s_j).
    std::vector<std::pair<int, bool>> a_word;  // (index, inverted)
    auto left_part = [](int i) -> std::pair<int, bool> {
        return i == 2 ? std::pair{1, true} : std::pair{i - 1, false};
    };
    for (size_t t = 0; t < word.size(); t += 2) {
        const int i = word[t];
        const int j = word[t + 1];
        if (i == j) throw std::logic_error("adjacent equal letters in canonical word");
        if (i == 1) {
            a_word.emplace_back(j - 1, false);
        } else if (j == 1) {
            a_word.push_back(left_part(i));
        } else {
            a_word.push_back(left_part(i));
            a_word.emplace_back(j - 1, false);
        }
    }

    // Regroup into maximal descending-by-one runs; each run is one
    // canonical factor and the run tops must ascend.
    const int n = v.degree() - 1;
    ACanonical out;
    out.n = n;
    out.factors.assign(n > 1 ? static_cast<size_t>(n - 1) : 0, AFactor{});
    for (size_t k = 0; k < out.factors.size(); ++k)
        out.factors[k] = AFactor{static_cast<int>(k) + 1, AKind::identity, 0, 0};
    int prev_top = 0;
    size_t t = 0;
    while (t < a_word.size()) {
        const int top = a_word[t].first;
        size_t s = t;
        while (s + 1 < a_word.size() && !a_word[s].second &&
               a_word[s + 1].first == a_word[s].first - 1)
            ++s;
        const int bottom = a_word[s].first;
        const bool inverted = a_word[s].second;
        if (inverted && bottom != 1)
            throw std::logic_error("inverted generator above a_1");
        AFactor f;
        if (bottom >= 2)
            f = AFactor{top, AKind::run, bottom, 0};
        else
            f = AFactor{top, AKind::tail, 0, inverted ? -1 : 1};
        if (top <= prev_top || top > n - 1)
            throw std::logic_error("regrouped word is not canonical");
        out.factors[static_cast<size_t>(top) - 1] = f;
        prev_top = top;
        t = s + 1;
    }
    return out;
}

Perm rewrite_f_q(int q, const Perm& w) {
    const int m = w.degree();
    if (q < 1 || q > m) throw std::invalid_argument("rewrite_f_q: q out of range");
    const int n = m - q + 1;
    std::vector<int> cur(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cur[static_cast<size_t>(i)] = i + 1;
    for (const SFactor& f : s_canonical(w).factors)
        for (int k : f.letters())
            if (k >= q) {
                const int i = k - q + 1;
                std::swap(cur[static_cast<size_t>(i) - 1], cur[static_cast<size_t>(i)]);
            }
    return Perm::unchecked(std::move(cur));
}

}  // namespace foata::oracle
