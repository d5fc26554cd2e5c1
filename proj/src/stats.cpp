#include "foata/stats.hpp"

#include <stdexcept>

#include "foata/canonical.hpp"

namespace foata {

namespace {

// #{ i < pos : w(i) < w(pos) }, positions 1-indexed.
int smaller_to_left(const Perm& w, int pos) {
    int count = 0;
    for (int i = 1; i < pos; ++i)
        if (w(i) < w(pos)) ++count;
    return count;
}

Perm rmul_by_a(const Perm& v, int k) {
    std::vector<int> img = v.images();
    std::swap(img[0], img[1]);
    std::swap(img[static_cast<size_t>(k)], img[static_cast<size_t>(k) + 1]);
    return Perm::unchecked(std::move(img));
}

}  // namespace

std::set<int> des_s(const Perm& w) {
    std::set<int> out;
    for (int i = 1; i < w.degree(); ++i)
        if (w(i) > w(i + 1)) out.insert(i);
    return out;
}

std::set<int> del_s(const Perm& w) {
    std::set<int> out;
    for (int j = 2; j <= w.degree(); ++j)
        if (smaller_to_left(w, j) == 0) out.insert(j);
    return out;
}

std::set<int> ltrm(const Perm& w) {
    std::set<int> out;
    for (int j = 1; j <= w.degree(); ++j)
        if (smaller_to_left(w, j) == 0) out.insert(w(j));
    return out;
}

std::set<int> rtlm(const Perm& w) {
    std::set<int> out;
    for (int j = 1; j <= w.degree(); ++j) {
        bool minimum = true;
        for (int i = j + 1; i <= w.degree(); ++i)
            if (w(i) < w(j)) {
                minimum = false;
                break;
            }
        if (minimum) out.insert(w(j));
    }
    return out;
}

std::set<int> ltram(const Perm& v) {
    std::set<int> out;
    for (int j = 1; j <= v.degree(); ++j)
        if (smaller_to_left(v, j) <= 1) out.insert(v(j));
    return out;
}

std::set<int> del_a(const Perm& v) {
    std::set<int> out;
    for (int j = 3; j <= v.degree(); ++j)
        if (smaller_to_left(v, j) <= 1) out.insert(j);
    return out;
}

long long ell_a(const Perm& v) { return a_canonical(v).gen_count(); }

std::set<int> des_a(const Perm& v) {
    const int n = v.degree() - 1;
    const long long len = ell_a(v);
    std::set<int> out;
    for (int i = 1; i <= n - 1; ++i)
        if (len >= ell_a(rmul_by_a(v, i))) out.insert(i);
    return out;
}

std::set<int> del_q(int q, const Perm& v) {
    if (q < 1 || q > v.degree()) throw std::invalid_argument("del_q: q out of range");
    std::set<int> out;
    for (int j = q + 1; j <= v.degree(); ++j)
        if (smaller_to_left(v, j) <= q - 1) out.insert(j);
    return out;
}

std::set<int> des_q(int q, const Perm& v) {
    if (q < 1 || q > v.degree()) throw std::invalid_argument("des_q: q out of range");
    const std::set<int> delq = del_q(q, v);
    std::set<int> out;
    for (int i = q; i <= v.degree() - 1; ++i)
        if (v(i) > v(i + 1) || delq.count(i + 1)) out.insert(i);
    return out;
}

std::set<int> ltrm_q(int q, const Perm& v) {
    if (q < 1 || q > v.degree()) throw std::invalid_argument("ltrm_q: q out of range");
    std::set<int> out;
    for (int j = 1; j <= v.degree(); ++j)
        if (smaller_to_left(v, j) <= q - 1) out.insert(v(j));
    return out;
}

long long ell_q(int q, const Perm& v) {
    if (q < 1 || q > v.degree()) throw std::invalid_argument("ell_q: q out of range");
    long long total = 0;
    for (const SFactor& f : s_canonical(v).factors) {
        if (f.is_identity()) continue;
        const int low = std::max(f.ell, q);
        if (f.j >= low) total += f.j - low + 1;
    }
    return total;
}

SStatRecord s_stats(const Perm& w) {
    SStatRecord r;
    r.n = w.degree();
    r.des = des_s(w);
    for (int i : r.des) {
        r.maj += i;
        r.rmaj += r.n - i;
    }
    r.ell = w.inversions();
    if (r.ell != s_canonical(w).gen_count())
        throw std::logic_error("s_stats: inversion count disagrees with presentation length");
    r.del_set = del_s(w);
    r.del_count = static_cast<int>(r.del_set.size());
    r.ltrm = ltrm(w);
    return r;
}

AStatRecord a_stats(const Perm& v) {
    if (!v.is_even()) throw std::invalid_argument("a_stats: permutation must be even");
    AStatRecord r;
    r.n = v.degree() - 1;
    r.ell = ell_a(v);
    r.des = des_a(v);
    for (int i : r.des) {
        r.maj += i;
        r.rmaj += r.n - i;
    }
    r.del_set = del_a(v);
    r.del_count = static_cast<int>(r.del_set.size());
    r.ltram = ltram(v);
    return r;
}

QStatRecord q_stats(int q, const Perm& v) {
    if (q < 1 || q > v.degree()) throw std::invalid_argument("q_stats: q out of range");
    QStatRecord r;
    r.q = q;
    r.m = v.degree();
    r.ell_q = ell_q(q, v);
    r.del_q = del_q(q, v);
    r.des_q = des_q(q, v);
    for (int i : r.des_q) r.rmaj_q += r.m - i;
    r.ltrm_q = ltrm_q(q, v);
    return r;
}

}  // namespace foata
