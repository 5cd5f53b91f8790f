#include "sforge/families.hpp"

#include <numeric>
#include <string>

namespace sforge {

namespace {

void validate_bhb_shape(const FieldCtx& ctx, int d) {
    const int ell = ctx.ell();
    if (d <= 0 || d >= 2 * ell) fail(Err::InvalidParams, "bhb: d must satisfy 0 < d < 2*ell");
    if (std::gcd(ell, d) != 1) fail(Err::InvalidParams, "bhb: gcd(ell, d) must be 1");
    if ((ell + d) % 2 == 0) fail(Err::InvalidParams, "bhb: ell + d must be odd (condition (5))");
}

} // namespace

BHBParams make_bhb_params(const FieldCtx& ctx, Elem beta, int d) {
    validate_bhb_shape(ctx, d);
    if (beta.v == 0) fail(Err::ZeroInput, "bhb: beta must be nonzero");
    Elem w = ctx.omega();
    return BHBParams{beta, w, ctx.mul(w, w), d};
}

BHBParams default_bhb_params(const FieldCtx& ctx, int d) {
    return make_bhb_params(ctx, ctx.generator(), d);
}

LMPTBParams make_lmptb_params(const FieldCtx& ctx) {
    if (ctx.ell() % 2 == 0) fail(Err::InvalidParams, "lmptb: ell must be odd");
    return LMPTBParams{(ctx.ell() - 1) / 2, ctx.omega()};
}

bool check_condition5(const FieldCtx& ctx, int ell, int d) {
    bool parity = ((ell + d) % 2 == 1);
    bool scan = true;
    const std::uint32_t sz = ctx.size();
    for (std::uint32_t v = 1; v < sz; ++v) {
        Elem a{v};
        Elem na = ctx.neg(a);
        if (ctx.frobq(a, ell) == na && ctx.frobq(a, d) == na) {
            scan = false;
            break;
        }
    }
    if (scan != parity)
        fail(Err::VerificationFailure, "condition (5) scan disagrees with the parity rule");
    return scan;
}

bool check_condition4(const FieldCtx& ctx, Elem beta, int ell, int d) {
    if (beta.v == 0) fail(Err::ZeroInput, "condition (4) needs beta != 0");
    std::int64_t g2 = std::gcd(ctx.q_pow(ell) + 1, ctx.q_pow(d) + 1);
    std::int64_t e = (ctx.q_pow(2 * ell) - 1) / g2;
    return ctx.pow(beta, e) != ctx.one();
}

Presemifield bhb(const FieldCtx& ctx, const BHBParams& params) {
    validate_bhb_shape(ctx, params.d);
    if (params.beta.v == 0 || ctx.is_square(params.beta))
        fail(Err::InvalidParams, "bhb: beta must be a nonsquare of F_{q^{2l}}");
    const int h = ctx.h(), ell = ctx.ell(), m = h * ell, d = params.d;
    BilinearCoeffs c = zero_bilinear(ctx);
    add_term(ctx, c, 0, m, ctx.one()); // x y^{q^l}
    add_term(ctx, c, m, 0, ctx.one()); // x^{q^l} y
    BilinearCoeffs t = zero_bilinear(ctx);
    add_term(ctx, t, 0, h * d, ctx.one()); // x y^{q^d}
    add_term(ctx, t, h * d, 0, ctx.one()); // x^{q^d} y
    BilinearCoeffs u = scale_bilinear(ctx, params.beta, t);
    BilinearCoeffs v = add_bilinear(ctx, u, apply_linearized(ctx, linpoly::frobenius_map(ctx, m), u));
    c = add_bilinear(ctx, c, scale_bilinear(ctx, params.omega, v));
    return Presemifield(ctx, std::move(c),
                        "BHB(q=" + std::to_string(ctx.q()) + ",ell=" + std::to_string(ell) + ",d=" +
                            std::to_string(d) + ",beta=g^" + std::to_string(ctx.dlog(params.beta)) + ")");
}

LinearizedMap lmptb_g_map(const FieldCtx& ctx, int k, GBounds bounds) {
    const int h = ctx.h(), m = h * ctx.ell();
    LinearizedMap diff = linpoly::sub(ctx, linpoly::identity(ctx), linpoly::frobenius_map(ctx, m));
    LinearizedMap g = linpoly::zero_map(ctx);
    int i0 = (bounds == GBounds::Verbatim) ? 1 : 0;
    for (int i = i0; i <= k; ++i) {
        LinearizedMap term = linpoly::compose(ctx, linpoly::frobenius_map(ctx, 2 * h * i), diff);
        g = (i % 2 == 1) ? linpoly::sub(ctx, g, term) : linpoly::add(ctx, g, term);
    }
    for (int j = 0; j <= k - 1; ++j) {
        LinearizedMap term = linpoly::compose(ctx, linpoly::frobenius_map(ctx, h * (2 * j + 1)), diff);
        g = ((k + j) % 2 == 1) ? linpoly::sub(ctx, g, term) : linpoly::add(ctx, g, term);
    }
    return g;
}

GBounds resolve_gbounds(const FieldCtx& ctx, const LMPTBParams& params) {
    Presemifield closed = lmptb_symplectic(ctx, params);
    for (GBounds b : {GBounds::Verbatim, GBounds::AltLow})
        if (ts(lmptb(ctx, params, b)) == closed) return b;
    fail(Err::VerificationFailure,
         "no bound variant of the projection map matches the closed symplectic form");
}

Presemifield lmptb(const FieldCtx& ctx, const LMPTBParams& params, GBounds bounds) {
    if (ctx.ell() % 2 == 0 || ctx.ell() <= 1) fail(Err::InvalidParams, "lmptb: ell must be odd and > 1");
    if (params.k != (ctx.ell() - 1) / 2) fail(Err::InvalidParams, "lmptb: k must equal (ell-1)/2");
    const int h = ctx.h(), m = h * ctx.ell();
    Elem half = ctx.half();
    Elem quarter = ctx.mul(half, half);
    BilinearCoeffs c = zero_bilinear(ctx);
    add_term(ctx, c, 0, 0, half); // x y / 2
    add_term(ctx, c, m, m, half); // x^{q^l} y^{q^l} / 2
    BilinearCoeffs t = zero_bilinear(ctx);
    add_term(ctx, t, 0, 2 * h, ctx.one()); // x y^{q^2}
    add_term(ctx, t, 2 * h, 0, ctx.one()); // x^{q^2} y
    LinearizedMap g4 = linpoly::scale(ctx, quarter, lmptb_g_map(ctx, params.k, bounds));
    c = add_bilinear(ctx, c, apply_linearized(ctx, g4, t));
    return Presemifield(ctx, std::move(c),
                        "LMPTB(q=" + std::to_string(ctx.q()) + ",ell=" + std::to_string(ctx.ell()) + ")");
}

LinearizedMap phi_small_inv_map(const FieldCtx& ctx) {
    const int h = ctx.h(), ell = ctx.ell();
    const int k = (ell - 1) / 2;
    LinearizedMap m = linpoly::zero_map(ctx);
    for (int i = 0; i <= k; ++i) {
        LinearizedMap term = linpoly::frobenius_map(ctx, 2 * h * i);
        m = (i % 2 == 1) ? linpoly::sub(ctx, m, term) : linpoly::add(ctx, m, term);
    }
    for (int j = 0; j <= k - 1; ++j) {
        LinearizedMap term = linpoly::frobenius_map(ctx, h * (2 * j + 1));
        m = ((k + j + 1) % 2 == 1) ? linpoly::sub(ctx, m, term) : linpoly::add(ctx, m, term);
    }
    return linpoly::scale(ctx, ctx.half(), m);
}

Elem phi_small(const FieldCtx& ctx, Elem gamma) {
    if (!ctx.in_subfield_q(gamma, ctx.ell())) fail(Err::NotInSubfield, "phi_small argument not in F_{q^l}");
    return ctx.add(gamma, ctx.frobq(gamma, 2));
}

Elem phi_small_inv(const FieldCtx& ctx, Elem z) {
    if (!ctx.in_subfield_q(z, ctx.ell())) fail(Err::NotInSubfield, "phi_small_inv argument not in F_{q^l}");
    return linpoly::eval(ctx, phi_small_inv_map(ctx), z);
}

std::pair<Elem, Elem> decompose_lmptb(const FieldCtx& ctx, const LMPTBParams& params, Elem y) {
    Elem yl = ctx.frobq(y, ctx.ell());
    Elem a = ctx.mul(ctx.half(), ctx.add(y, yl));
    Elem w = ctx.mul(ctx.sub(y, yl), ctx.inv(ctx.mul(ctx.scalar(2), params.eta)));
    Elem b = phi_small_inv(ctx, w);
    return {a, b};
}

std::pair<Elem, Elem> decompose_omega(const FieldCtx& ctx, Elem y) {
    Elem yl = ctx.frobq(y, ctx.ell());
    Elem a = ctx.mul(ctx.half(), ctx.add(y, yl));
    Elem b = ctx.mul(ctx.sub(y, yl), ctx.inv(ctx.mul(ctx.scalar(2), ctx.omega())));
    return {a, b};
}

Presemifield lmptb_symplectic(const FieldCtx& ctx, const LMPTBParams& params) {
    if (ctx.ell() % 2 == 0 || params.k != (ctx.ell() - 1) / 2)
        fail(Err::InvalidParams, "lmptb_symplectic: bad parameters");
    const int h = ctx.h(), ell = ctx.ell(), m = h * ell, n = ctx.n();
    LinearizedMap amap = linpoly::scale(
        ctx, ctx.half(), linpoly::add(ctx, linpoly::identity(ctx), linpoly::frobenius_map(ctx, m)));
    LinearizedMap w = linpoly::scale(
        ctx, ctx.inv(ctx.mul(ctx.scalar(2), params.eta)),
        linpoly::sub(ctx, linpoly::identity(ctx), linpoly::frobenius_map(ctx, m)));
    LinearizedMap bmap = linpoly::compose(ctx, phi_small_inv_map(ctx), w);
    std::vector<std::pair<int, LinearizedMap>> rows;
    rows.emplace_back(0, amap);
    rows.emplace_back(2 * h, linpoly::scale(ctx, params.eta,
                                            linpoly::compose(ctx, linpoly::frobenius_map(ctx, 2 * h), bmap)));
    rows.emplace_back((2 * h * (ell - 1)) % n, linpoly::scale(ctx, params.eta, bmap));
    return Presemifield(ctx, from_x_rows(ctx, rows),
                        "LMPTB(q=" + std::to_string(ctx.q()) + ",ell=" + std::to_string(ell) + ")^{t*}[closed]");
}

Presemifield bhb_symplectic(const FieldCtx& ctx, const BHBParams& params) {
    validate_bhb_shape(ctx, params.d);
    if (params.beta.v == 0 || ctx.is_square(params.beta))
        fail(Err::InvalidParams, "bhb_symplectic: beta must be a nonsquare");
    const int h = ctx.h(), ell = ctx.ell(), m = h * ell, n = ctx.n(), d = params.d;
    LinearizedMap amap = linpoly::scale(
        ctx, ctx.half(), linpoly::add(ctx, linpoly::identity(ctx), linpoly::frobenius_map(ctx, m)));
    LinearizedMap bmap = linpoly::scale(
        ctx, ctx.inv(ctx.mul(ctx.scalar(2), params.omega)),
        linpoly::sub(ctx, linpoly::identity(ctx), linpoly::frobenius_map(ctx, m)));
    Elem two = ctx.scalar(2);
    Elem c_high = ctx.mul(two, ctx.mul(ctx.frobq(params.sigma, 2 * ell - d), ctx.frobq(params.beta, 2 * ell - d)));
    Elem c_low = ctx.mul(two, ctx.mul(params.sigma, params.beta));
    std::vector<std::pair<int, LinearizedMap>> rows;
    rows.emplace_back(m, linpoly::scale(ctx, two, amap));
    rows.emplace_back((h * (2 * ell - d)) % n,
                      linpoly::scale(ctx, c_high,
                                     linpoly::compose(ctx, linpoly::frobenius_map(ctx, (h * (2 * ell - d)) % n), bmap)));
    rows.emplace_back(h * d, linpoly::scale(ctx, c_low, bmap));
    return Presemifield(ctx, from_x_rows(ctx, rows),
                        "BHB(q=" + std::to_string(ctx.q()) + ",ell=" + std::to_string(ell) + ",d=" +
                            std::to_string(d) + ")^{t*}[closed]");
}

Elem g_of_y(const FieldCtx& ctx, const LMPTBParams& params, Elem y) {
    const int ell = ctx.ell(), k = params.k;
    Elem alpha = ctx.zero(), beta = ctx.zero(), gamma = ctx.zero();
    for (int i = 1; i <= ell - 1; ++i) {
        Elem t = ctx.frobq(y, 2 * i);
        alpha = ((i + 1) % 2 == 1) ? ctx.sub(alpha, t) : ctx.add(alpha, t);
    }
    for (int j = 0; j <= k - 1; ++j) {
        Elem t = ctx.frobq(y, 2 * j + 1);
        beta = ((k + j + 1) % 2 == 1) ? ctx.sub(beta, t) : ctx.add(beta, t);
    }
    for (int t = k + 1; t <= ell - 1; ++t) {
        Elem e = ctx.frobq(y, 2 * t + 1);
        gamma = ((k + t) % 2 == 1) ? ctx.sub(gamma, e) : ctx.add(gamma, e);
    }
    return ctx.add(ctx.add(alpha, beta), gamma);
}

Elem f_of_y(const FieldCtx& ctx, const LMPTBParams& params, Elem y) {
    Elem quarter = ctx.mul(ctx.half(), ctx.half());
    return ctx.mul(quarter, ctx.add(ctx.sub(y, ctx.frobq(y, ctx.ell())), g_of_y(ctx, params, y)));
}

} // namespace sforge
