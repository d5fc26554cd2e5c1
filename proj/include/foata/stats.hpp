#pragma once

#include <set>

#include "foata/perm.hpp"

namespace foata {

/// Des_S, maj_S, rmaj_{S_n}, ell_S, Del_S, del_S and ltrm of one element.
struct SStatRecord {
    int n = 0;
    std::set<int> des;
    int maj = 0;
    int rmaj = 0;
    long long ell = 0;
    std::set<int> del_set;
    int del_count = 0;
    std::set<int> ltrm;
};

/// The A_{n+1} statistics of an even permutation of degree n+1.
struct AStatRecord {
    int n = 0;  // group is A_{n+1}
    std::set<int> des;
    int maj = 0;
    int rmaj = 0;
    long long ell = 0;
    std::set<int> del_set;
    int del_count = 0;
    std::set<int> ltram;
};

/// q-statistics on S_m, m = n+q-1; k+1 = q throughout.
struct QStatRecord {
    int q = 1;
    int m = 0;
    long long ell_q = 0;
    std::set<int> del_q;
    std::set<int> des_q;
    int rmaj_q = 0;
    std::set<int> ltrm_q;
};

/// ell is the inversion count and is cross-checked against the generator
/// count of the S-canonical presentation.
SStatRecord s_stats(const Perm& w);

/// Des_A is computed by the literal length comparison
/// ell_A(v) >= ell_A(v a_i).  Throws std::invalid_argument on odd input.
AStatRecord a_stats(const Perm& v);

QStatRecord q_stats(int q, const Perm& v);

// Individual statistics, used on hot paths and by the lemma checkers.
std::set<int> des_s(const Perm& w);
std::set<int> del_s(const Perm& w);
std::set<int> ltrm(const Perm& w);
std::set<int> rtlm(const Perm& w);
std::set<int> ltram(const Perm& v);
std::set<int> del_a(const Perm& v);
std::set<int> des_a(const Perm& v);
long long ell_a(const Perm& v);
std::set<int> del_q(int q, const Perm& v);
std::set<int> des_q(int q, const Perm& v);
std::set<int> ltrm_q(int q, const Perm& v);
long long ell_q(int q, const Perm& v);

}  // namespace foata
