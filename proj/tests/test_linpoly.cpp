#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sforge/linpoly.hpp"

using namespace sforge;

namespace {
FieldCtx& ctx33() {
    static FieldCtx ctx(TowerParams{3, 1, 3, 2});
    return ctx;
}

LinearizedMap random_map(const FieldCtx& f, std::mt19937_64& rng) {
    LinearizedMap m = linpoly::zero_map(f);
    for (int i = 0; i < f.n(); ++i) m.c[i] = Elem{static_cast<std::uint32_t>(rng() % f.size())};
    return m;
}
} // namespace

TEST_CASE("evaluation is additive and respects scalars") {
    const FieldCtx& f = ctx33();
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        LinearizedMap m = random_map(f, rng);
        Elem a{static_cast<std::uint32_t>(rng() % f.size())};
        Elem b{static_cast<std::uint32_t>(rng() % f.size())};
        CHECK(linpoly::eval(f, m, f.add(a, b)) ==
              f.add(linpoly::eval(f, m, a), linpoly::eval(f, m, b)));
        Elem c = f.scalar(static_cast<std::int64_t>(rng() % 3));
        CHECK(linpoly::eval(f, m, f.mul(c, a)) == f.mul(c, linpoly::eval(f, m, a)));
    }
}

TEST_CASE("composition matches pointwise composition") {
    const FieldCtx& f = ctx33();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        LinearizedMap a = random_map(f, rng);
        LinearizedMap b = random_map(f, rng);
        LinearizedMap c = linpoly::compose(f, a, b);
        for (std::uint32_t v = 0; v < f.size(); v += 13)
            CHECK(linpoly::eval(f, c, Elem{v}) ==
                  linpoly::eval(f, a, linpoly::eval(f, b, Elem{v})));
    }
}

TEST_CASE("conjugation is a composition anti-automorphism") {
    const FieldCtx& f = ctx33();
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        LinearizedMap a = random_map(f, rng);
        LinearizedMap b = random_map(f, rng);
        CHECK(linpoly::conjugate(f, linpoly::conjugate(f, a)) == a);
        CHECK(linpoly::conjugate(f, linpoly::compose(f, a, b)) ==
              linpoly::compose(f, linpoly::conjugate(f, b), linpoly::conjugate(f, a)));
    }
}

TEST_CASE("matrix rank detects singular maps") {
    const FieldCtx& f = ctx33();
    CHECK(linpoly::is_invertible(f, linpoly::identity(f)));
    CHECK(linpoly::is_invertible(f, linpoly::frobenius_map(f, 2)));
    // x - x^{p^n/?}: x -> x - x^p kills F_p, singular
    LinearizedMap s = linpoly::sub(f, linpoly::identity(f), linpoly::frobenius_map(f, 1));
    CHECK_FALSE(linpoly::is_invertible(f, s));
    CHECK_FALSE(linpoly::invert(f, s).has_value());
}

TEST_CASE("inversion round trip") {
    const FieldCtx& f = ctx33();
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 20) {
        LinearizedMap m = random_map(f, rng);
        auto inv = linpoly::invert(f, m);
        if (!inv) continue;
        CHECK(linpoly::compose(f, *inv, m) == linpoly::identity(f));
        CHECK(linpoly::compose(f, m, *inv) == linpoly::identity(f));
        ++done;
    }
}

TEST_CASE("basis interpolation recovers a map from its values") {
    const FieldCtx& f = ctx33();
    std::mt19937_64 rng(19);
    for (int t = 0; t < 20; ++t) {
        LinearizedMap m = random_map(f, rng);
        std::vector<Elem> images(f.n());
        std::uint32_t basis = 1;
        for (int j = 0; j < f.n(); ++j) {
            images[j] = linpoly::eval(f, m, Elem{basis});
            basis *= static_cast<std::uint32_t>(f.p());
        }
        CHECK(linpoly::from_basis_images(f, images) == m);
    }
}

TEST_CASE("semilinear type recovers companion exponents") {
    const FieldCtx& f = ctx33();
    CHECK(linpoly::semilinear_type(f, linpoly::identity(f), 2) == 0);
    CHECK(linpoly::semilinear_type(f, linpoly::scalar_map(f, f.generator()), 2) == 0);
    CHECK(linpoly::semilinear_type(f, linpoly::frobenius_map(f, 1), 2) == 1);
    // x^{p^2} fixes every scalar of F_{q^2}, so the least companion exponent is 0
    CHECK(linpoly::semilinear_type(f, linpoly::frobenius_map(f, 2), 2) == 0);
    // g*x + x^{p} is additive and invertible but not semilinear over F_{q^2}
    LinearizedMap mixed = linpoly::add(f, linpoly::scalar_map(f, f.generator()),
                                       linpoly::frobenius_map(f, 1));
    CHECK_FALSE(linpoly::semilinear_type(f, mixed, 2).has_value());
}
