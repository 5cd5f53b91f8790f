#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sforge/presemifield.hpp"

using namespace sforge;

namespace {
FieldCtx& ctx33() {
    static FieldCtx ctx(TowerParams{3, 1, 3, 2});
    return ctx;
}

Presemifield field_mult(const FieldCtx& f) {
    BilinearCoeffs c = zero_bilinear(f);
    add_term(f, c, 0, 0, f.one());
    return Presemifield(f, std::move(c), "field");
}
} // namespace

TEST_CASE("field multiplication is a commutative presemifield") {
    const FieldCtx& f = ctx33();
    Presemifield s = field_mult(f);
    CHECK(s.is_commutative());
    CHECK(s.is_presemifield());
    for (std::uint32_t v = 0; v < f.size(); v += 17)
        for (std::uint32_t w = 0; w < f.size(); w += 19)
            CHECK(s.multiply(Elem{v}, Elem{w}) == f.mul(Elem{v}, Elem{w}));
}

TEST_CASE("a singular slice is rejected") {
    const FieldCtx& f = ctx33();
    // x*y = xy - x^p y^p: the slice at y = 1 is x - x^p, which kills F_p
    BilinearCoeffs c = zero_bilinear(f);
    add_term(f, c, 0, 0, f.one());
    add_term(f, c, 1, 1, f.neg(f.one()));
    Presemifield s(f, std::move(c), "defective");
    CHECK_FALSE(s.is_presemifield());
}

TEST_CASE("left and right maps agree with multiplication") {
    const FieldCtx& f = ctx33();
    BilinearCoeffs c = zero_bilinear(f);
    add_term(f, c, 0, 3, f.one());
    add_term(f, c, 3, 0, f.one());
    Presemifield s(f, std::move(c), "two-term");
    for (std::uint32_t v = 0; v < f.size(); v += 23)
        for (std::uint32_t w = 0; w < f.size(); w += 29) {
            CHECK(linpoly::eval(f, s.left_map(Elem{w}), Elem{v}) == s.multiply(Elem{v}, Elem{w}));
            CHECK(linpoly::eval(f, s.right_map(Elem{v}), Elem{w}) == s.multiply(Elem{v}, Elem{w}));
        }
}

TEST_CASE("dual and transpose are involutions") {
    const FieldCtx& f = ctx33();
    BilinearCoeffs c = zero_bilinear(f);
    add_term(f, c, 0, 0, f.generator());
    add_term(f, c, 1, 4, f.omega());
    Presemifield s(f, std::move(c), "asym");
    CHECK(dual(dual(s)) == s);
    CHECK(transpose(transpose(s)) == s);
    CHECK(ts(s) == dual(transpose(s)));
    // the dual multiplies in the opposite order
    for (std::uint32_t v = 0; v < f.size(); v += 31)
        for (std::uint32_t w = 0; w < f.size(); w += 37)
            CHECK(dual(s).multiply(Elem{v}, Elem{w}) == s.multiply(Elem{w}, Elem{v}));
}

TEST_CASE("transpose conjugates every spread map") {
    const FieldCtx& f = ctx33();
    BilinearCoeffs c = zero_bilinear(f);
    add_term(f, c, 0, 0, f.one());
    add_term(f, c, 2, 1, f.omega());
    Presemifield s(f, std::move(c), "mixed");
    Presemifield t = transpose(s);
    SpreadSet orig = spread_set(s);
    SpreadSet conj = spread_set(t);
    for (std::uint32_t yv = 0; yv < f.size(); ++yv)
        CHECK(conj.find(linpoly::conjugate(f, orig.by_y[yv])).has_value());
}

TEST_CASE("spread set index finds each slice") {
    const FieldCtx& f = ctx33();
    Presemifield s = field_mult(f);
    SpreadSet sp = spread_set(s);
    for (std::uint32_t yv = 0; yv < f.size(); ++yv) {
        auto hit = sp.find(sp.by_y[yv]);
        REQUIRE(hit.has_value());
        CHECK(*hit == yv);
    }
    CHECK(sp.same_set(spread_set(dual(s)))); // commutative, self-dual
}

TEST_CASE("planar polynomial round trip") {
    const FieldCtx& f = ctx33();
    Presemifield s = field_mult(f);
    DOPolynomial p = to_planar_do(s);
    // f(x) = x^2 / 2 for the field; difference maps are bijections
    CHECK(is_planar(p));
    CHECK(is_planar_scan(p));
    CHECK(from_planar_do(p) == s);
    CHECK(from_planar_do(p, /*check_planarity=*/true) == s);
}

TEST_CASE("a non-planar polynomial is detected by both routes") {
    const FieldCtx& f = ctx33();
    // f(x) = x^{p^3+1}: its difference maps have kernels since x -> x^{p^3} + x
    // is not injective in characteristic 3 here
    BilinearCoeffs d = zero_bilinear(f);
    Elem h = f.half();
    d[0][3] = h;
    d[3][0] = h;
    DOPolynomial p{&f, std::move(d)};
    CHECK(is_planar(p) == is_planar_scan(p));
}

TEST_CASE("symbolic assembly helpers") {
    const FieldCtx& f = ctx33();
    BilinearCoeffs a = zero_bilinear(f);
    add_term(f, a, 0, 0, f.one());
    BilinearCoeffs b = scale_bilinear(f, f.scalar(2), a);
    CHECK(b[0][0] == f.scalar(2));
    BilinearCoeffs c = add_bilinear(f, a, b);
    CHECK(c[0][0] == f.zero()); // 1 + 2 = 0 in characteristic 3
    LinearizedMap fr = linpoly::frobenius_map(f, 1);
    BilinearCoeffs applied = apply_linearized(f, fr, a);
    CHECK(applied[1][1] == f.one()); // (xy)^p = x^p y^p
    BilinearCoeffs subx = substitute_x(f, a, fr);
    CHECK(subx[1][0] == f.one()); // x^p * y
    BilinearCoeffs suby = substitute_y(f, a, fr);
    CHECK(suby[0][1] == f.one()); // x * y^p
}
