#include "sforge/constructions.hpp"

#include <algorithm>
#include <atomic>

namespace sforge {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

XiSolution verified_xi(const FieldCtx& ctx, Elem xi, Elem beta, int d) {
    const int ell = ctx.ell();
    std::int64_t k = ipow(ctx.q(), ell + d) - 1;
    if (ctx.pow(xi, k) != ctx.pow(beta, 1 - ctx.q_pow(ell)))
        fail(Err::NoSolution, "xi fails the power equation");
    if (ctx.pow(xi, ctx.q_pow(ell) + 1) != ctx.sigma())
        fail(Err::NoSolution, "xi^{q^l+1} differs from sigma");
    return XiSolution{xi, beta, d};
}

} // namespace

std::vector<Elem> solve_xi_all(const FieldCtx& ctx, Elem beta, int d) {
    const int ell = ctx.ell();
    std::int64_t k = ipow(ctx.q(), ell + d) - 1;
    Elem rhs = ctx.pow(beta, 1 - ctx.q_pow(ell));
    std::vector<Elem> sols = ctx.solve_power_eq(k, rhs);
    if (static_cast<std::int64_t>(sols.size()) != ctx.q() - 1)
        fail(Err::NoSolution, "power equation does not have q-1 solutions");
    for (const Elem& s : sols) {
        if (!ctx.in_subfield_q(ctx.div(s, sols.front()), 1))
            fail(Err::VerificationFailure, "two solutions differ by a non-F_q factor");
        Elem norm = ctx.pow(s, ctx.q_pow(ell) + 1);
        if (!ctx.in_subfield_q(norm, 1) || ctx.is_square_in_subfield(norm, 1))
            fail(Err::VerificationFailure, "xi^{q^l+1} is not a nonsquare of F_q");
    }
    return sols;
}

XiSolution solve_xi(const FieldCtx& ctx, Elem beta, int d) {
    for (const Elem& s : solve_xi_all(ctx, beta, d))
        if (ctx.pow(s, ctx.q_pow(ctx.ell()) + 1) == ctx.sigma()) return verified_xi(ctx, s, beta, d);
    fail(Err::NoSolution, "no solution is normalized to sigma");
}

AuxiliaryMaps auxiliary_maps(const FieldCtx& ctx, const XiSolution& xi) {
    const int m = ctx.h() * ctx.ell();
    Elem w = ctx.omega();
    Elem xi_l = ctx.frobq(xi.xi, ctx.ell());
    LinearizedMap psi = linpoly::add(ctx, linpoly::monomial(ctx, ctx.div(w, xi.xi), 0),
                                     linpoly::frobenius_map(ctx, m));
    LinearizedMap phi = linpoly::sub(ctx, linpoly::identity(ctx),
                                     linpoly::monomial(ctx, ctx.div(w, xi_l), m));
    LinearizedMap psi_inv = linpoly::scale(
        ctx, ctx.half(),
        linpoly::add(ctx, linpoly::monomial(ctx, ctx.div(w, xi_l), 0),
                     linpoly::frobenius_map(ctx, m)));
    if (linpoly::compose(ctx, psi_inv, psi) != linpoly::identity(ctx))
        fail(Err::VerificationFailure, "psi_inv does not invert psi");
    if (!linpoly::is_invertible(ctx, phi)) fail(Err::Singular, "phi is not invertible");
    return AuxiliaryMaps{std::move(phi), std::move(psi), std::move(psi_inv)};
}

Presemifield normalized_target(const FieldCtx& ctx, const BHBParams& params,
                               const XiSolution& xi) {
    const int h = ctx.h(), ell = ctx.ell(), m = h * ell, n = ctx.n(), d = params.d;
    Elem w = params.omega;
    Elem xi_l = ctx.frobq(xi.xi, ell);
    LinearizedMap two_a = linpoly::add(ctx, linpoly::identity(ctx), linpoly::frobenius_map(ctx, m));
    LinearizedMap bmap = linpoly::scale(
        ctx, ctx.inv(ctx.mul(ctx.scalar(2), w)),
        linpoly::sub(ctx, linpoly::identity(ctx), linpoly::frobenius_map(ctx, m)));
    Elem two_sw = ctx.mul(ctx.scalar(2), ctx.mul(params.sigma, w));
    Elem c_low = ctx.mul(two_sw, ctx.div(params.beta, xi_l));
    Elem c_high = ctx.mul(two_sw, ctx.div(ctx.frobq(params.beta, 2 * ell - d), xi_l));
    std::vector<std::pair<int, LinearizedMap>> rows;
    rows.emplace_back(0, two_a);
    rows.emplace_back(h * d, linpoly::scale(ctx, c_low, bmap));
    rows.emplace_back((h * (2 * ell - d)) % n,
                      linpoly::scale(ctx, c_high,
                                     linpoly::compose(ctx, linpoly::frobenius_map(ctx, (h * (2 * ell - d)) % n),
                                                      bmap)));
    return Presemifield(ctx, from_x_rows(ctx, rows), "normalized-BHB-target");
}

NormalizationChecks normalization_checks(const FieldCtx& ctx, const BHBParams& params,
                                         const XiSolution& xi) {
    const int h = ctx.h(), ell = ctx.ell(), n = ctx.n(), d = params.d;
    AuxiliaryMaps maps = auxiliary_maps(ctx, xi);
    Elem w = params.omega;
    Elem xi_l = ctx.frobq(xi.xi, ell);
    int hi = (h * (2 * ell - d)) % n;
    int cross = (h * (((ell - d) % (2 * ell)) + 2 * ell)) % n;
    LinearizedMap f = linpoly::compose(
        ctx, linpoly::frobenius_map(ctx, hi),
        linpoly::compose(ctx, linpoly::scalar_map(ctx, params.beta), maps.phi));
    LinearizedMap g = linpoly::compose(
        ctx, linpoly::scalar_map(ctx, params.beta),
        linpoly::compose(ctx, linpoly::frobenius_map(ctx, h * d), maps.phi));
    LinearizedMap pf = linpoly::compose(ctx, maps.psi_inv, f);
    LinearizedMap pg = linpoly::compose(ctx, maps.psi_inv, g);
    NormalizationChecks r;
    r.cross_coefficient_zero = (pf.c[cross].v == 0);
    r.surviving_coefficient_ok =
        (pf == linpoly::monomial(ctx, ctx.mul(w, ctx.div(ctx.frobq(params.beta, 2 * ell - d), xi_l)), hi));
    r.g_collapses = (pg == linpoly::monomial(ctx, ctx.mul(w, ctx.div(params.beta, xi_l)), h * d));
    return r;
}

bool normalized_identity_holds(const FieldCtx& ctx, const BHBParams& params,
                               const XiSolution& xi) {
    AuxiliaryMaps maps = auxiliary_maps(ctx, xi);
    Presemifield lhs_src = bhb_symplectic(ctx, params);
    Presemifield rhs_src = normalized_target(ctx, params, xi);
    BilinearCoeffs lhs = substitute_x(ctx, lhs_src.coeff(), maps.phi);
    BilinearCoeffs rhs = apply_linearized(ctx, maps.psi, rhs_src.coeff());
    return lhs == rhs;
}

Elem choose_beta_bar(const FieldCtx& ctx) {
    Elem target = ctx.inv(ctx.sigma());
    for (std::int64_t e = 1; e < ctx.group_order(); ++e) {
        Elem cand = ctx.pow(ctx.generator(), e);
        if (!ctx.in_subfield_q(cand, 2)) continue;
        if (ctx.is_square(cand)) continue;
        if (ctx.pow(cand, ctx.q() + 1) == target) return cand;
    }
    fail(Err::NoSuchElement, "no nonsquare of F_{q^2} has norm 1/sigma");
}

BridgeData make_bridge(const FieldCtx& ctx) {
    const int h = ctx.h(), ell = ctx.ell(), n = ctx.n();
    BridgeData b;
    b.beta_bar = choose_beta_bar(ctx);
    b.xi = verified_xi(ctx, ctx.inv(b.beta_bar), b.beta_bar, 2);
    b.bhb_params = make_bhb_params(ctx, b.beta_bar, 2);
    b.lmptb_params = make_lmptb_params(ctx);
    b.maps = auxiliary_maps(ctx, b.xi);
    LinearizedMap hm = linpoly::scale(ctx, ctx.scalar(2), linpoly::identity(ctx));
    hm = linpoly::add(ctx, hm, linpoly::frobenius_map(ctx, (h * (2 * ell - 2)) % n));
    hm = linpoly::sub(ctx, hm, linpoly::frobenius_map(ctx, h * (ell - 2)));
    auto hi = linpoly::invert(ctx, hm);
    if (!hi) fail(Err::Singular, "middle correspondence is not invertible");
    b.h_map = std::move(hm);
    b.h_inv = std::move(*hi);
    return b;
}

SymplecticIsotopism symplectic_isotopism(const FieldCtx& ctx, int jobs) {
    BridgeData bridge = make_bridge(ctx);
    Presemifield source = lmptb_symplectic(ctx, bridge.lmptb_params);
    Presemifield target = bhb_symplectic(ctx, bridge.bhb_params);
    IsotopismTriple triple =
        make_triple(source, target, bridge.maps.phi, bridge.h_inv, bridge.maps.psi);
    if (verify_isotopism(source, target, triple, jobs) != IsoStatus::Verified)
        fail(Err::VerificationFailure, "symplectic isotopism triple refuted");
    return SymplecticIsotopism{std::move(bridge), std::move(source), std::move(target),
                               std::move(triple)};
}

FamilyIsotopism family_isotopism(const FieldCtx& ctx, int jobs) {
    BridgeData bridge = make_bridge(ctx);
    GBounds bounds = resolve_gbounds(ctx, bridge.lmptb_params);
    Presemifield source = lmptb(ctx, bridge.lmptb_params, bounds);
    Presemifield target = bhb(ctx, bridge.bhb_params);
    auto m = linpoly::invert(ctx, linpoly::conjugate(ctx, bridge.maps.psi));
    if (!m) fail(Err::Singular, "conjugate(psi) is not invertible");
    IsotopismTriple triple = make_triple(source, target, *m, bridge.maps.phi,
                                         linpoly::conjugate(ctx, bridge.h_map));
    if (verify_isotopism(source, target, triple, jobs) != IsoStatus::Verified)
        fail(Err::VerificationFailure, "family isotopism triple refuted");
    if (triple.M == triple.N)
        fail(Err::VerificationFailure, "family triple unexpectedly strong");
    return FamilyIsotopism{std::move(bridge), std::move(source), std::move(target),
                           std::move(triple)};
}

StrongIsoCertificate strong_witness(const FieldCtx& ctx, int jobs) {
    if (ctx.q() % 4 != 1) fail(Err::PreconditionFailed, "strong witness needs q = 1 (mod 4)");
    BridgeData bridge = make_bridge(ctx);
    StrongIsoCertificate cert;
    cert.q = ctx.q();
    cert.ell = ctx.ell();
    cert.beta_bar = bridge.beta_bar;
    cert.omega = ctx.omega();
    cert.xi = bridge.xi.xi;
    cert.rho = ctx.mul(ctx.scalar(2), ctx.mul(ctx.omega(), bridge.beta_bar));
    std::int64_t lg = ctx.dlog(cert.rho);
    if (lg % 2 != 0) fail(Err::NoSquareRoot, "rho is not a square");
    cert.b = ctx.pow(ctx.generator(), lg / 2);
    if (!ctx.in_subfield_q(cert.b, 2)) fail(Err::NoSquareRoot, "no square root of rho in F_{q^2}");
    LinearizedMap phibar = linpoly::conjugate(ctx, bridge.maps.phi);
    auto phibar_inv = linpoly::invert(ctx, phibar);
    if (!phibar_inv) fail(Err::Singular, "conjugate(phi) is not invertible");
    cert.scaling_identity =
        (linpoly::compose(ctx, *phibar_inv, linpoly::scalar_map(ctx, cert.rho)) == bridge.maps.psi);
    if (!cert.scaling_identity)
        fail(Err::VerificationFailure, "scaling identity for psi fails");
    LinearizedMap H = linpoly::compose(ctx, *phibar_inv, linpoly::scalar_map(ctx, cert.b));
    GBounds bounds = resolve_gbounds(ctx, bridge.lmptb_params);
    Presemifield s1 = lmptb(ctx, bridge.lmptb_params, bounds);
    Presemifield s2 = bhb(ctx, bridge.bhb_params);
    if (strong_check(s1, s2, H, jobs) != IsoStatus::Verified)
        fail(Err::VerificationFailure, "strong-isotopy spread-set criterion refuted");
    cert.H = std::move(H);
    cert.exists = true;
    return cert;
}

StrongIsoCertificate nonexistence_certificate(const FieldCtx& ctx, int jobs) {
    if (ctx.q() % 4 != 3)
        fail(Err::PreconditionFailed, "non-existence certificate needs q = -1 (mod 4)");
    BridgeData bridge = make_bridge(ctx);
    StrongIsoCertificate cert;
    cert.q = ctx.q();
    cert.ell = ctx.ell();
    cert.exists = false;
    cert.beta_bar = bridge.beta_bar;
    cert.omega = ctx.omega();
    cert.xi = bridge.xi.xi;
    cert.equation_exponent = 2 * ctx.q_pow(ctx.ell()) - 2;
    cert.equation_rhs = ctx.neg(ctx.pow(bridge.beta_bar, ctx.q() - 1));
    if (!ctx.solve_power_eq(cert.equation_exponent, cert.equation_rhs).empty())
        fail(Err::VerificationFailure, "power equation unexpectedly solvable");
    Elem beta_q = ctx.frob(bridge.beta_bar, ctx.h());
    std::atomic<bool> no_sol{true}, per_coeff{true};
    parallel_for(jobs, 1, ctx.size(), [&](std::uint32_t lo, std::uint32_t hi) {
        for (std::uint32_t v = lo; v < hi; ++v) {
            Elem a{v};
            if (ctx.pow(a, cert.equation_exponent) == cert.equation_rhs)
                no_sol.store(false, std::memory_order_relaxed);
            Elem lhs = ctx.add(ctx.mul(beta_q, ctx.mul(a, a)),
                               ctx.mul(bridge.beta_bar, ctx.pow(a, 2 * ctx.q_pow(ctx.ell()))));
            if (lhs.v == 0) per_coeff.store(false, std::memory_order_relaxed);
        }
    });
    cert.no_solution = no_sol.load();
    cert.per_coefficient = per_coeff.load();
    Elem delta = ctx.mul(ctx.half(), ctx.mul(ctx.omega(), beta_q));
    cert.delta_in_fq2 = ctx.in_subfield_q(delta, 2);
    cert.psi_inv_identity =
        (bridge.maps.psi_inv ==
         linpoly::scale(ctx, delta, linpoly::conjugate(ctx, bridge.maps.phi)));
    if (!cert.no_solution || !cert.per_coefficient || !cert.delta_in_fq2 ||
        !cert.psi_inv_identity)
        fail(Err::VerificationFailure, "non-existence certificate checks failed");
    return cert;
}

StrongIsoCertificate decide_strong(const FieldCtx& ctx, int jobs) {
    return (ctx.q() % 4 == 1) ? strong_witness(ctx, jobs) : nonexistence_certificate(ctx, jobs);
}

std::uint64_t strong_brute_force(const FieldCtx& ctx, int jobs) {
    BridgeData bridge = make_bridge(ctx);
    const int h = ctx.h(), ell = ctx.ell(), n = ctx.n();
    const std::uint32_t sz = ctx.size();
    Elem beta_q = ctx.frob(bridge.beta_bar, h);
    Elem delta = ctx.mul(ctx.half(), ctx.mul(ctx.omega(), beta_q));
    SpreadSet s1 = spread_set(lmptb_symplectic(ctx, bridge.lmptb_params));
    // coefficient-at-0 filter for delta(G o conj(G)): delta * sum a_i^2 must be
    // the F_{q^l}-component the spread shape allows
    std::vector<std::uint32_t> sq(sz);
    std::vector<char> pass0(sz);
    for (std::uint32_t v = 0; v < sz; ++v) {
        Elem a{v};
        sq[v] = ctx.mul(a, a).v;
        pass0[v] = ctx.in_subfield_q(ctx.mul(delta, a), ell) ? 1 : 0;
    }
    std::atomic<std::uint64_t> hits{0};
    for (int e = 0; e < 2 * h; ++e) {
        parallel_for(jobs, 0, sz, [&](std::uint32_t lo, std::uint32_t hi) {
            std::vector<std::uint32_t> a(ell, 0);
            for (std::uint32_t a0 = lo; a0 < hi; ++a0) {
                a[0] = a0;
                // odometer over the remaining ell-1 coefficients
                std::fill(a.begin() + 1, a.end(), 0);
                while (true) {
                    Elem s{sq[a[0]]};
                    for (int i = 1; i < ell; ++i) s = ctx.add(s, Elem{sq[a[i]]});
                    bool all_zero = true;
                    for (int i = 0; i < ell; ++i)
                        if (a[i] != 0) all_zero = false;
                    if (!all_zero && pass0[s.v]) {
                        LinearizedMap g = linpoly::zero_map(ctx);
                        for (int i = 0; i < ell; ++i) g.c[(2 * h * i + e) % n] = Elem{a[i]};
                        LinearizedMap gbar = linpoly::conjugate(ctx, g);
                        bool ok = true;
                        for (std::uint32_t yv = 1; yv < sz && ok; ++yv) {
                            LinearizedMap m = linpoly::scale(
                                ctx, delta,
                                linpoly::compose(ctx, g, linpoly::compose(ctx, s1.by_y[yv], gbar)));
                            if (!s1.find(m)) ok = false;
                        }
                        if (ok && linpoly::is_invertible(ctx, g))
                            hits.fetch_add(1, std::memory_order_relaxed);
                    }
                    int pos = 1;
                    while (pos < ell && ++a[pos] == sz) {
                        a[pos] = 0;
                        ++pos;
                    }
                    if (pos == ell) break;
                }
            }
        });
    }
    return hits.load();
}

} // namespace sforge
