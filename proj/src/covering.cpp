#include "foata/covering.hpp"

#include <stdexcept>

namespace foata {

CoverContext CoverContext::alternating(Perm u) {
    CoverContext ctx{std::move(u), 0, {}, {}};
    ctx.a_pres = a_canonical(ctx.anchor);
    return ctx;
}

CoverContext CoverContext::with_q(int q, Perm u) {
    if (q < 1 || q > u.degree())
        throw std::invalid_argument("CoverContext: q out of range");
    CoverContext ctx{std::move(u), q, {}, {}};
    ctx.s_pres = s_canonical(ctx.anchor);
    return ctx;
}

SCanonical f_factors(const ACanonical& pres) {
    SCanonical out;
    out.n = pres.n;
    out.factors.reserve(pres.factors.size());
    for (const AFactor& v : pres.factors) {
        switch (v.kind) {
            case AKind::identity: out.factors.push_back({v.j, 0}); break;
            case AKind::run: out.factors.push_back({v.j, v.ell}); break;
            case AKind::tail: out.factors.push_back({v.j, 1}); break;
        }
    }
    return out;
}

Perm f(const Perm& v) { return expand_s(f_factors(a_canonical(v))); }

ACanonical g_factors(const ACanonical& anchor, const SCanonical& w_pres) {
    if (anchor.n != w_pres.n)
        throw std::invalid_argument("g: anchor and argument degrees inconsistent");
    ACanonical out;
    out.n = anchor.n;
    out.factors.reserve(w_pres.factors.size());
    for (size_t k = 0; k < w_pres.factors.size(); ++k) {
        const SFactor& wf = w_pres.factors[k];
        if (wf.is_identity())
            out.factors.push_back({wf.j, AKind::identity, 0, 0});
        else if (wf.is_full())
            out.factors.push_back(anchor.factors[k]);
        else
            out.factors.push_back({wf.j, AKind::run, wf.ell, 0});
    }
    return out;
}

Perm g(const CoverContext& ctx, const Perm& w) {
    if (!ctx.a_pres) throw std::invalid_argument("g: context is not an A-lift");
    if (w.degree() + 1 != ctx.anchor.degree())
        throw std::invalid_argument("g: degree mismatch");
    return expand_a(g_factors(*ctx.a_pres, s_canonical(w)));
}

bool lift_compatible(const CoverContext& ctx, const Perm& w) {
    if (!ctx.a_pres || w.degree() + 1 != ctx.anchor.degree())
        throw std::invalid_argument("lift_compatible: degree mismatch");
    const SCanonical wp = s_canonical(w);
    for (size_t k = 0; k < wp.factors.size(); ++k)
        if (wp.factors[k].is_full() != ctx.a_pres->factors[k].is_tail()) return false;
    return true;
}

SCanonical f_q_factors(int q, const SCanonical& pres) {
    const int m = pres.n;
    if (q < 1 || q > m) throw std::invalid_argument("f_q: q out of range");
    SCanonical out;
    out.n = m - q + 1;
    if (out.n > 1) out.factors.reserve(static_cast<size_t>(out.n) - 1);
    for (int jp = 1; jp <= out.n - 1; ++jp) {
        const SFactor& src = pres.factors[static_cast<size_t>(jp + q - 1) - 1];
        if (src.is_identity())
            out.factors.push_back({jp, 0});
        else
            out.factors.push_back({jp, std::max(src.ell - q + 1, 1)});
    }
    return out;
}

Perm f_q(int q, const Perm& w) { return expand_s(f_q_factors(q, s_canonical(w))); }

SCanonical g_q_factors(const CoverContext& ctx, const SCanonical& w_pres) {
    if (!ctx.s_pres) throw std::invalid_argument("g_q: context is not a q-lift");
    const SCanonical& anchor = *ctx.s_pres;
    const int q = ctx.q;
    if (w_pres.n + q - 1 != anchor.n)
        throw std::invalid_argument("g_q: anchor and argument degrees inconsistent");
    SCanonical out;
    out.n = anchor.n;
    out.factors.reserve(anchor.factors.size());
    for (int j = 1; j <= q - 1; ++j)
        out.factors.push_back(anchor.factors[static_cast<size_t>(j) - 1]);
    for (int jp = 1; jp <= w_pres.n - 1; ++jp) {
        const SFactor& wf = w_pres.factors[static_cast<size_t>(jp) - 1];
        const int j = jp + q - 1;
        if (wf.is_identity())
            out.factors.push_back({j, 0});
        else if (wf.is_full())
            out.factors.push_back(anchor.factors[static_cast<size_t>(j) - 1]);
        else
            out.factors.push_back({j, wf.ell + q - 1});
    }
    return out;
}

Perm g_q(const CoverContext& ctx, const Perm& w) {
    if (!ctx.s_pres) throw std::invalid_argument("g_q: context is not a q-lift");
    if (w.degree() + ctx.q - 1 != ctx.anchor.degree())
        throw std::invalid_argument("g_q: degree mismatch");
    return expand_s(g_q_factors(ctx, s_canonical(w)));
}

bool lift_compatible_q(const CoverContext& ctx, const Perm& w) {
    if (!ctx.s_pres || w.degree() + ctx.q - 1 != ctx.anchor.degree())
        throw std::invalid_argument("lift_compatible_q: degree mismatch");
    const SCanonical wp = s_canonical(w);
    for (size_t k = 0; k < wp.factors.size(); ++k) {
        if (!wp.factors[k].is_full()) continue;
        const SFactor& uf = ctx.s_pres->factors[k + static_cast<size_t>(ctx.q) - 1];
        if (uf.is_identity() || uf.ell > ctx.q) return false;
    }
    return true;
}

}  // namespace foata
