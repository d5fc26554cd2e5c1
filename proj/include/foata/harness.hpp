#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "foata/perm.hpp"

namespace foata {

/// Exact integer generating function: coeffs[v] = number of population
/// members with statistic value v.  Equality is coefficient-wise.
struct DistributionPoly {
    std::map<int, long long> coeffs;

    void add(int value) { ++coeffs[value]; }
    long long total() const;
    std::string str() const;

    friend bool operator==(const DistributionPoly&, const DistributionPoly&) = default;
};

using StatFn = std::function<long long(const Perm&)>;
using FilterFn = std::function<bool(const Perm&)>;

/// coeffs[v] = #{ sigma in S_degree (or A_degree) : filter(sigma),
/// stat(sigma) = v }.
DistributionPoly distribution(int degree, bool alternating_only, const StatFn& stat,
                              const FilterFn& filter = nullptr);

struct VerifyReport {
    std::string theorem;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    std::optional<nlohmann::json> counterexample;
    long long population = 0;
    double elapsed_ms = 0.0;
    std::vector<std::string> notes;
};

/// Coefficient-wise comparison of two statistics over one filtered
/// population.  A fail carries the first differing coefficient.
VerifyReport compare_statistics(const std::string& name, int degree, bool alternating_only,
                                const std::string& lhs_name, const StatFn& lhs,
                                const std::string& rhs_name, const StatFn& rhs,
                                const FilterFn& filter = nullptr);

/// rmaj_{A_{n+1}} vs ell_A over { sigma in A_{n+1} :
/// Des_A(sigma^{-1}) <= D1, Del_A(sigma^{-1}) <= D2 }, plus the
/// bijective route through Psi restricted to the filtered set.
VerifyReport check_a_eq(int n, const std::set<int>& d1, const std::set<int>& d2);

/// Both regimes over all subset pairs: D1, D2 <= {1..n-1} (literal) and
/// D2 <= {1..n+1} (extended, since Del_A values reach n+1).
std::vector<VerifyReport> check_a_eq_all(int n);

/// All five parts of the Psi theorem plus the inverse round-trip,
/// exhaustively over A_{n+1}.  Throws when n+1 exceeds the cap.
VerifyReport check_psi_theorem(int n, int degree_cap = 8);

/// All four parts of the Psi_q theorem, round-trips, and Psi_1 = rtlPhi,
/// exhaustively over S_{n+q-1}.
VerifyReport check_psi_q_theorem(int n, int q, int degree_cap = 8);

/// ell_q vs rmaj_{q,m} over { Des_q(pi^{-1}) = B1, Del_q(pi^{-1}) = B2 }
/// (equality filters).
VerifyReport check_qst1(int n, int q, const std::set<int>& b1, const std::set<int>& b2);
VerifyReport check_qst1_all(int n, int q);

/// Same comparison over { pi : pi^{-1} avoids Pat(q), Des_q(pi^{-1}) = B }.
VerifyReport check_qst2(int n, int q, const std::set<int>& b);
VerifyReport check_qst2_all(int n, int q);

/// Foata theorem suite on S_n: bijectivity, maj = ell . phi,
/// rmaj = ell . rtlphi, rtlm and inverse-descent preservation, the com
/// commutation, agreement of rtlphi with rev . phi . rev, round-trips.
VerifyReport check_foata_theorem(int n, int degree_cap = 8);

/// maj_S equidistributed with ell_S over S_n.
VerifyReport check_macmahon(int n);

/// One report per named lemma/proposition of sections 3-5 and 7,
/// exhaustive within the caps.
std::vector<VerifyReport> check_lemma_suite(int n_cap, int q_cap);

/// Statistic selector for the table interface; group is 's' or 'a',
/// names: ell, maj, rmaj, del, des.
StatFn stat_by_name(char group, const std::string& name);

/// "" (none), "avoid-q=<k>" or "inv-avoid-q=<k>".
FilterFn filter_by_name(const std::string& name);

}  // namespace foata
