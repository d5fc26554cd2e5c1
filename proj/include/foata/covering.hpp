#pragma once

#include <optional>

#include "foata/canonical.hpp"
#include "foata/perm.hpp"

namespace foata {

/// A lifting anchor u together with its cached canonical presentation:
/// A-canonical for g_u (q == 0), S-canonical for g_{q,u} (q >= 1).
struct CoverContext {
    Perm anchor;
    int q = 0;
    std::optional<ACanonical> a_pres;
    std::optional<SCanonical> s_pres;

    static CoverContext alternating(Perm u);
    static CoverContext with_q(int q, Perm u);
};

/// Factor-wise image under f: Run(ell) -> Run(ell), Tail -> Run(1),
/// identity -> identity.  The output is the S-canonical presentation of
/// the image.
SCanonical f_factors(const ACanonical& pres);

/// The covering map f : A_{n+1} -> S_n.  Throws on odd input.
Perm f(const Perm& v);

ACanonical g_factors(const ACanonical& anchor, const SCanonical& w_pres);

/// The local inverse g_u.  Total: when the anchor is incompatible the
/// expanded lift is still returned; only f(g_u(w)) == w is conditional.
Perm g(const CoverContext& ctx, const Perm& w);

/// The two-sided condition of the lifting remark: the anchor factor is a
/// tail exactly at the slots where w's factor is s_j...s_1.
bool lift_compatible(const CoverContext& ctx, const Perm& w);

/// Factor-wise image under f_q: factors below q are dropped, factor
/// j >= q maps to index j-q+1 with Run(ell) -> Run(max(ell-q+1, 1)).
SCanonical f_q_factors(int q, const SCanonical& pres);

/// The covering map f_q : S_{n+q-1} -> S_n.
Perm f_q(int q, const Perm& w);

SCanonical g_q_factors(const CoverContext& ctx, const SCanonical& w_pres);

/// The local inverse g_{q,u}: anchor factors u_1..u_{q-1} are copied,
/// Run(ell >= 2) shifts up by q-1, Run(1) slots take the anchor factor.
Perm g_q(const CoverContext& ctx, const Perm& w);

/// One-sided condition for f_q(g_{q,u}(w)) == w: every Run(1) factor of
/// w meets an anchor run reaching at or below q.
bool lift_compatible_q(const CoverContext& ctx, const Perm& w);

}  // namespace foata
