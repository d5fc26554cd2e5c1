#include "foata/foata.hpp"

#include <algorithm>
#include <stdexcept>

namespace foata {

namespace {

void require_word(const Word& r) {
    if (r.empty()) throw std::invalid_argument("empty word");
    Word sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("word letters must be distinct");
}

void require_fresh(int x, const Word& r) {
    if (std::find(r.begin(), r.end(), x) != r.end())
        throw std::invalid_argument("letter already occurs in the word");
}

// One step of the algorithm: cut cur after every case-side letter, move
// block tails to block heads, append x.  Cut positions (0-based letter
// indices) are reported through `cuts` when requested.
void phi_step(Word& cur, int x, std::vector<int>* cuts) {
    const bool le = cur.back() <= x;
    Word next;
    next.reserve(cur.size() + 1);
    size_t start = 0;
    for (size_t i = 0; i < cur.size(); ++i) {
        if ((cur[i] <= x) == le) {
            next.push_back(cur[i]);
            next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(start),
                        cur.begin() + static_cast<std::ptrdiff_t>(i));
            if (cuts) cuts->push_back(static_cast<int>(i));
            start = i + 1;
        }
    }
    next.push_back(x);
    cur = std::move(next);
}

// Mirror step: cut cur before every case-side letter, move block heads
// to block ends, prepend x.
void rtl_step(Word& cur, int x, std::vector<int>* cuts) {
    const bool le = cur.front() <= x;
    Word next;
    next.reserve(cur.size() + 1);
    next.push_back(x);
    size_t i = 0;
    while (i < cur.size()) {
        if (cuts) cuts->push_back(static_cast<int>(i));
        size_t j = i + 1;
        while (j < cur.size() && ((cur[j] <= x) != le)) ++j;
        next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    cur.begin() + static_cast<std::ptrdiff_t>(j));
        next.push_back(cur[i]);
        i = j;
    }
    cur = std::move(next);
}

}  // namespace

Word gamma(int x, const Word& r) {
    require_word(r);
    require_fresh(x, r);
    Word out = r;
    phi_step(out, x, nullptr);
    out.pop_back();
    return out;
}

Word gamma_inverse(int x, const Word& c) {
    require_word(c);
    require_fresh(x, c);
    const bool le = c.front() <= x;
    Word out;
    out.reserve(c.size());
    size_t i = 0;
    while (i < c.size()) {
        size_t j = i + 1;
        while (j < c.size() && ((c[j] <= x) != le)) ++j;
        out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                   c.begin() + static_cast<std::ptrdiff_t>(j));
        out.push_back(c[i]);
        i = j;
    }
    return out;
}

Word phi_word(const Word& r) {
    require_word(r);
    Word cur = {r[0]};
    for (size_t i = 1; i < r.size(); ++i) phi_step(cur, r[i], nullptr);
    return cur;
}

Word phi_word_inverse(const Word& r) {
    require_word(r);
    Word cur = r;
    Word suffix;
    while (cur.size() > 1) {
        const int x = cur.back();
        cur.pop_back();
        cur = gamma_inverse(x, cur);
        suffix.push_back(x);
    }
    cur.insert(cur.end(), suffix.rbegin(), suffix.rend());
    return cur;
}

Perm phi(const Perm& w) { return Perm::unchecked(phi_word(w.images())); }

Perm phi_inverse(const Perm& w) { return Perm::unchecked(phi_word_inverse(w.images())); }

Perm rtl_phi(const Perm& w) {
    const auto& img = w.images();
    if (img.size() == 1) return w;
    Word cur = {img.back()};
    for (size_t i = img.size() - 1; i-- > 0;) rtl_step(cur, img[i], nullptr);
    return Perm::unchecked(std::move(cur));
}

Perm rtl_phi_inverse(const Perm& w) {
    return phi_inverse(w.reversed()).reversed();
}

FoataTrace phi_trace(const Perm& w) {
    FoataTrace trace;
    trace.cuts_before = false;
    const auto& img = w.images();
    Word cur = {img[0]};
    for (size_t i = 1; i < img.size(); ++i) {
        TraceRow row;
        row.letters = cur;
        phi_step(cur, img[i], &row.cuts);
        trace.rows.push_back(std::move(row));
    }
    trace.rows.push_back(TraceRow{cur, {}});
    return trace;
}

FoataTrace rtl_phi_trace(const Perm& w) {
    FoataTrace trace;
    trace.cuts_before = true;
    const auto& img = w.images();
    Word cur = {img.back()};
    for (size_t i = img.size() - 1; i-- > 0;) {
        TraceRow row;
        row.letters = cur;
        rtl_step(cur, img[i], &row.cuts);
        trace.rows.push_back(std::move(row));
    }
    trace.rows.push_back(TraceRow{cur, {}});
    return trace;
}

}  // namespace foata
