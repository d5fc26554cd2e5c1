#pragma once

#include <optional>

#include "foata/canonical.hpp"
#include "foata/covering.hpp"
#include "foata/perm.hpp"

namespace foata {

/// Full audit record of one Psi / Psi_q evaluation.  For the A-version
/// the input and lifted presentations are A-canonical (q == 0); for the
/// q-version they are S-canonical.
struct PsiTrace {
    int q = 0;
    Perm input = Perm::identity(1);
    std::optional<ACanonical> input_a_pres;
    std::optional<SCanonical> input_s_pres;
    Perm f_image = Perm::identity(1);
    Perm rtl_phi_image = Perm::identity(1);
    SCanonical image_s_pres;
    std::optional<ACanonical> lifted_a_pres;
    std::optional<SCanonical> lifted_s_pres;
    Perm output = Perm::identity(1);
};

/// Psi(v) = g_v(rtlPhi(f(v))) on A_{n+1}.  Throws std::invalid_argument
/// on odd input; a failed lift compatibility (impossible for valid
/// inputs) raises std::logic_error.
Perm psi(const Perm& v);

/// Inverse map p -> g_p(rtlPhi^{-1}(f(p))).
Perm psi_inverse(const Perm& p);

/// Psi_q(v) = g_{q,v}(rtlPhi(f_q(v))) on S_{n+q-1}.
Perm psi_q(int q, const Perm& v);

/// Inverse map p -> g_{q,p}(rtlPhi^{-1}(f_q(p))).
Perm psi_q_inverse(int q, const Perm& p);

PsiTrace psi_trace(const Perm& v);
PsiTrace psi_q_trace(int q, const Perm& v);

}  // namespace foata
