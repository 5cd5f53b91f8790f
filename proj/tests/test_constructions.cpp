#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sforge/constructions.hpp"

using namespace sforge;

namespace {
FieldCtx& ctx33() {
    static FieldCtx ctx(TowerParams{3, 1, 3, 2});
    return ctx;
}
FieldCtx& ctx53() {
    static FieldCtx ctx(TowerParams{5, 1, 3, 2});
    return ctx;
}
} // namespace

TEST_CASE("the normalizing power equation has q-1 compatible solutions") {
    for (FieldCtx* fp : {&ctx33(), &ctx53()}) {
        const FieldCtx& f = *fp;
        Elem beta = f.generator();
        auto sols = solve_xi_all(f, beta, 2);
        CHECK(static_cast<std::int64_t>(sols.size()) == f.q() - 1);
        // the norms of the solutions sweep out exactly the nonsquares of F_q
        std::set<std::uint32_t> norms;
        for (const Elem& s : sols) norms.insert(f.pow(s, f.q_pow(f.ell()) + 1).v);
        std::set<std::uint32_t> nonsquares;
        for (std::uint32_t v = 1; v < f.size(); ++v)
            if (f.in_subfield_q(Elem{v}, 1) && !f.is_square_in_subfield(Elem{v}, 1))
                nonsquares.insert(v);
        CHECK(norms == nonsquares);
        XiSolution xi = solve_xi(f, beta, 2);
        CHECK(f.pow(xi.xi, f.q_pow(f.ell()) + 1) == f.sigma());
    }
}

TEST_CASE("auxiliary maps invert and are linear over the middle subfield") {
    const FieldCtx& f = ctx33();
    XiSolution xi = solve_xi(f, f.generator(), 2);
    AuxiliaryMaps maps = auxiliary_maps(f, xi);
    CHECK(linpoly::compose(f, maps.psi_inv, maps.psi) == linpoly::identity(f));
    CHECK(linpoly::is_invertible(f, maps.phi));
    CHECK(linpoly::semilinear_type(f, maps.psi, f.ell()) == 0);
    CHECK(linpoly::semilinear_type(f, maps.phi, f.ell()) == 0);
}

TEST_CASE("the normalization collapses the twisted coefficients") {
    const FieldCtx& f = ctx33();
    BHBParams bp = default_bhb_params(f, 2);
    XiSolution xi = solve_xi(f, bp.beta, 2);
    NormalizationChecks checks = normalization_checks(f, bp, xi);
    CHECK(checks.cross_coefficient_zero);
    CHECK(checks.surviving_coefficient_ok);
    CHECK(checks.g_collapses);
    CHECK(normalized_identity_holds(f, bp, xi));
    // (phi, id, psi) carries the normalized multiplication to the symplectic one
    AuxiliaryMaps maps = auxiliary_maps(f, xi);
    Presemifield target = bhb_symplectic(f, bp);
    Presemifield source = normalized_target(f, bp, xi);
    IsotopismTriple t = make_triple(source, target, maps.phi, linpoly::identity(f), maps.psi);
    CHECK(verify_isotopism(source, target, t) == IsoStatus::Verified);
}

TEST_CASE("the chosen quadratic nonsquare has the prescribed norm") {
    for (FieldCtx* fp : {&ctx33(), &ctx53()}) {
        const FieldCtx& f = *fp;
        Elem bb = choose_beta_bar(f);
        CHECK(f.in_subfield_q(bb, 2));
        CHECK_FALSE(f.is_square(bb));
        CHECK(f.mul(f.pow(bb, f.q() + 1), f.sigma()) == f.one());
        // its inverse solves the normalizing equation
        XiSolution xi = solve_xi(f, bb, 2);
        CHECK(f.in_subfield_q(f.div(xi.xi, f.inv(bb)), 1));
    }
}

TEST_CASE("the bridge data ties the two families together") {
    const FieldCtx& f = ctx33();
    BridgeData b = make_bridge(f);
    CHECK(b.xi.xi == f.inv(b.beta_bar));
    CHECK(linpoly::compose(f, b.h_inv, b.h_map) == linpoly::identity(f));
    // h agrees with its two-component description on every element
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        Elem y{v};
        auto [a, bb] = decompose_omega(f, y);
        Elem expected = f.add(f.mul(f.scalar(2), a),
                              f.mul(f.mul(f.scalar(2), f.add(f.frobq(bb, 2 * f.ell() - 2), bb)),
                                    f.omega()));
        CHECK(linpoly::eval(f, b.h_map, y) == expected);
    }
    // the source symplectic multiplication absorbs h into the normalized target
    Presemifield src = lmptb_symplectic(f, b.lmptb_params);
    Presemifield tgt = normalized_target(f, b.bhb_params, b.xi);
    CHECK(substitute_y(f, src.coeff(), b.h_map) == tgt.coeff());
}

TEST_CASE("the symplectic isotopism verifies on both towers") {
    SymplecticIsotopism a = symplectic_isotopism(ctx33());
    CHECK(a.triple.status == IsoStatus::Verified);
    SymplecticIsotopism b = symplectic_isotopism(ctx53());
    CHECK(b.triple.status == IsoStatus::Verified);
}

TEST_CASE("the family isotopism verifies and is never strong") {
    for (FieldCtx* fp : {&ctx33(), &ctx53()}) {
        FamilyIsotopism fi = family_isotopism(*fp);
        CHECK(fi.triple.status == IsoStatus::Verified);
        CHECK_FALSE(fi.triple.is_strong());
    }
}

TEST_CASE("the symplectic transform of the family triple re-verifies") {
    const FieldCtx& f = ctx33();
    FamilyIsotopism fi = family_isotopism(f);
    Presemifield ssrc = ts(fi.source), stgt = ts(fi.target);
    IsotopismTriple st = ts_transform(f, fi.triple, ssrc, stgt);
    CHECK(verify_isotopism(ssrc, stgt, st) == IsoStatus::Verified);
}

TEST_CASE("a strong isotopism exists when q is 1 mod 4") {
    const FieldCtx& f = ctx53();
    StrongIsoCertificate cert = strong_witness(f);
    CHECK(cert.exists);
    REQUIRE(cert.H.has_value());
    CHECK(f.mul(cert.b, cert.b) == cert.rho);
    CHECK(cert.scaling_identity);
    CHECK(f.in_subfield_q(cert.b, 2));
    CHECK_THROWS_AS(strong_witness(ctx33()), Error); // wrong residue class
}

TEST_CASE("no strong isotopism exists when q is 3 mod 4") {
    const FieldCtx& f = ctx33();
    StrongIsoCertificate cert = nonexistence_certificate(f);
    CHECK_FALSE(cert.exists);
    CHECK(cert.no_solution);
    CHECK(cert.per_coefficient);
    CHECK(cert.delta_in_fq2);
    CHECK(cert.psi_inv_identity);
    CHECK(cert.equation_exponent == 2 * f.q_pow(3) - 2);
    CHECK_THROWS_AS(nonexistence_certificate(ctx53()), Error);
}

TEST_CASE("the dispatcher picks the branch by residue class") {
    CHECK_FALSE(decide_strong(ctx33()).exists);
    CHECK(decide_strong(ctx53()).exists);
}
