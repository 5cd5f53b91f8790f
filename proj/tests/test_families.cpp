#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sforge/families.hpp"

using namespace sforge;

namespace {
FieldCtx& ctx33() {
    static FieldCtx ctx(TowerParams{3, 1, 3, 2});
    return ctx;
}
FieldCtx& ctx35() {
    static FieldCtx ctx(TowerParams{3, 1, 5, 2});
    return ctx;
}
} // namespace

TEST_CASE("fixed-point condition matches the parity rule") {
    const FieldCtx& f = ctx33();
    CHECK(check_condition5(f, 3, 2));       // 3 + 2 odd
    CHECK_FALSE(check_condition5(f, 3, 1)); // 3 + 1 even: any a with a^q = -a works
    CHECK(check_condition5(ctx35(), 5, 2)); // exhaustive over 3^10 elements
}

TEST_CASE("power condition on beta is the nonsquare test") {
    const FieldCtx& f = ctx33();
    Elem g = f.generator();
    CHECK(check_condition4(f, g, 3, 2));
    CHECK_FALSE(check_condition4(f, f.mul(g, g), 3, 2));
    CHECK_THROWS_AS(check_condition4(f, f.zero(), 3, 2), Error);
    for (std::uint32_t v = 1; v < f.size(); ++v)
        CHECK(check_condition4(f, Elem{v}, 3, 2) == !f.is_square(Elem{v}));
}

TEST_CASE("twisted family members are commutative presemifields") {
    const FieldCtx& f = ctx33();
    Presemifield b = bhb(f, default_bhb_params(f, 2));
    CHECK(b.is_commutative());
    CHECK(b.is_presemifield());
    CHECK_THROWS_AS(make_bhb_params(f, f.generator(), 1), Error); // parity violated
    CHECK_THROWS_AS(bhb(f, BHBParams{f.mul(f.generator(), f.generator()), f.omega(), f.sigma(), 2}),
                    Error); // square beta
}

TEST_CASE("projection family members are commutative presemifields") {
    const FieldCtx& f = ctx33();
    LMPTBParams lp = make_lmptb_params(f);
    CHECK(lp.k == 1);
    Presemifield p = lmptb(f, lp, resolve_gbounds(f, lp));
    CHECK(p.is_commutative());
    CHECK(p.is_presemifield());
    FieldCtx f53(TowerParams{5, 1, 3, 2});
    LMPTBParams lp53 = make_lmptb_params(f53);
    Presemifield p53 = lmptb(f53, lp53, resolve_gbounds(f53, lp53));
    CHECK(p53.is_commutative());
    CHECK(p53.is_presemifield());
}

TEST_CASE("closed symplectic forms equal the transpose-dual construction") {
    const FieldCtx& f = ctx33();
    LMPTBParams lp = make_lmptb_params(f);
    GBounds bounds = resolve_gbounds(f, lp);
    CHECK(ts(lmptb(f, lp, bounds)) == lmptb_symplectic(f, lp));
    BHBParams bp = default_bhb_params(f, 2);
    CHECK(ts(bhb(f, bp)) == bhb_symplectic(f, bp));
    // the same bound variant works one tower up
    const FieldCtx& f5 = ctx35();
    LMPTBParams lp5 = make_lmptb_params(f5);
    CHECK(resolve_gbounds(f5, lp5) == bounds);
}

TEST_CASE("decompositions reconstruct every element") {
    const FieldCtx& f = ctx33();
    LMPTBParams lp = make_lmptb_params(f);
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        Elem y{v};
        auto [a, b] = decompose_lmptb(f, lp, y);
        CHECK(f.in_subfield_q(a, f.ell()));
        CHECK(f.in_subfield_q(b, f.ell()));
        Elem rebuilt = f.add(a, f.mul(f.add(f.frobq(b, 2), b), lp.eta));
        CHECK(rebuilt == y);
        auto [a2, b2] = decompose_omega(f, y);
        CHECK(f.add(a2, f.mul(b2, f.omega())) == y);
        if (f.in_subfield_q(y, f.ell())) {
            CHECK(a == y);
            CHECK(b == f.zero());
        }
    }
    auto [aw, bw] = decompose_omega(f, f.omega());
    CHECK(aw == f.zero());
    CHECK(bw == f.one());
}

TEST_CASE("the q^2-trace on the middle subfield inverts explicitly") {
    for (FieldCtx* fp : {&ctx33(), &ctx35()}) {
        const FieldCtx& f = *fp;
        CHECK(phi_small(f, f.zero()) == f.zero());
        CHECK(phi_small_inv(f, f.zero()) == f.zero());
        for (std::uint32_t v = 0; v < f.size(); ++v) {
            Elem g{v};
            if (!f.in_subfield_q(g, f.ell())) continue;
            CHECK(phi_small_inv(f, phi_small(f, g)) == g);
            if (f.in_subfield_q(g, 1)) {
                CHECK(phi_small(f, g) == f.mul(f.scalar(2), g));
            }
        }
        CHECK_THROWS_AS(phi_small(f, f.omega()), Error);
    }
}

TEST_CASE("the projection coefficients satisfy the reflection identity") {
    const FieldCtx& f = ctx33();
    LMPTBParams lp = make_lmptb_params(f);
    Elem quarter = f.mul(f.half(), f.half());
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        Elem y{v};
        Elem fy = f_of_y(f, lp, y);
        Elem gy = g_of_y(f, lp, y);
        Elem rhs = f.mul(quarter, f.sub(f.sub(y, f.frobq(y, f.ell())), gy));
        CHECK(f.frobq(fy, 2 * f.ell() - 2) == rhs);
        auto [a, b] = decompose_lmptb(f, lp, y);
        CHECK(fy == f.mul(f.frobq(b, 2), lp.eta));
    }
}

TEST_CASE("subfield slices of the symplectic forms degenerate as expected") {
    const FieldCtx& f = ctx33();
    LMPTBParams lp = make_lmptb_params(f);
    Presemifield ps = lmptb_symplectic(f, lp);
    BHBParams bp = default_bhb_params(f, 2);
    Presemifield bs = bhb_symplectic(f, bp);
    for (std::uint32_t yv = 0; yv < f.size(); ++yv) {
        Elem y{yv};
        if (!f.in_subfield_q(y, f.ell())) continue; // B = 0 slice
        for (std::uint32_t xv = 0; xv < f.size(); xv += 13) {
            Elem x{xv};
            CHECK(ps.multiply(x, y) == f.mul(y, x));
            CHECK(bs.multiply(x, y) ==
                  f.mul(f.mul(f.scalar(2), y), f.frobq(x, f.ell())));
        }
    }
}
