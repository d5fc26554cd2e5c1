#include "foata/bijections.hpp"

#include <stdexcept>

#include "foata/foata.hpp"

namespace foata {

namespace {

Perm psi_impl(const Perm& v, bool inverse) {
    if (v.degree() == 1) return v;  // A_1 and A_2 are trivial
    const CoverContext ctx = CoverContext::alternating(v);
    const Perm w = expand_s(f_factors(*ctx.a_pres));
    const Perm u = inverse ? rtl_phi_inverse(w) : rtl_phi(w);
    if (!lift_compatible(ctx, u))
        throw std::logic_error("psi: lift compatibility violated");
    return g(ctx, u);
}

Perm psi_q_impl(int q, const Perm& v, bool inverse) {
    const CoverContext ctx = CoverContext::with_q(q, v);
    const Perm w = expand_s(f_q_factors(q, *ctx.s_pres));
    const Perm u = inverse ? rtl_phi_inverse(w) : rtl_phi(w);
    if (!lift_compatible_q(ctx, u))
        throw std::logic_error("psi_q: lift compatibility violated");
    return g_q(ctx, u);
}

}  // namespace

Perm psi(const Perm& v) { return psi_impl(v, false); }

Perm psi_inverse(const Perm& p) { return psi_impl(p, true); }

Perm psi_q(int q, const Perm& v) { return psi_q_impl(q, v, false); }

Perm psi_q_inverse(int q, const Perm& p) { return psi_q_impl(q, p, true); }

PsiTrace psi_trace(const Perm& v) {
    PsiTrace t;
    t.q = 0;
    t.input = v;
    const CoverContext ctx = CoverContext::alternating(v);
    t.input_a_pres = *ctx.a_pres;
    t.f_image = expand_s(f_factors(*ctx.a_pres));
    t.rtl_phi_image = rtl_phi(t.f_image);
    t.image_s_pres = s_canonical(t.rtl_phi_image);
    if (!lift_compatible(ctx, t.rtl_phi_image))
        throw std::logic_error("psi_trace: lift compatibility violated");
    t.lifted_a_pres = g_factors(*ctx.a_pres, t.image_s_pres);
    t.output = expand_a(*t.lifted_a_pres);
    return t;
}

PsiTrace psi_q_trace(int q, const Perm& v) {
    PsiTrace t;
    t.q = q;
    t.input = v;
    const CoverContext ctx = CoverContext::with_q(q, v);
    t.input_s_pres = *ctx.s_pres;
    t.f_image = expand_s(f_q_factors(q, *ctx.s_pres));
    t.rtl_phi_image = rtl_phi(t.f_image);
    t.image_s_pres = s_canonical(t.rtl_phi_image);
    if (!lift_compatible_q(ctx, t.rtl_phi_image))
        throw std::logic_error("psi_q_trace: lift compatibility violated");
    t.lifted_s_pres = g_q_factors(ctx, t.image_s_pres);
    t.output = expand_s(*t.lifted_s_pres);
    return t;
}

}  // namespace foata
