#include "sforge/isotopy.hpp"

#include <atomic>

namespace sforge {

const char* iso_status_name(IsoStatus s) {
    switch (s) {
    case IsoStatus::Unverified: return "unverified";
    case IsoStatus::Verified: return "verified";
    case IsoStatus::Refuted: return "refuted";
    }
    return "?";
}

IsotopismTriple make_triple(const Presemifield& source, const Presemifield& target,
                            LinearizedMap M, LinearizedMap N, LinearizedMap L) {
    return IsotopismTriple{std::move(M), std::move(N), std::move(L),
                           source.label(), target.label(), IsoStatus::Unverified, std::nullopt};
}

namespace {

LinearizedMap require_inverse(const FieldCtx& ctx, const LinearizedMap& m, const char* what) {
    auto inv = linpoly::invert(ctx, m);
    if (!inv) fail(Err::Singular, std::string(what) + " is not invertible");
    return *inv;
}

/// First x (generator-power order) with target(M(x), N(y)) != L(source(x, y)).
std::pair<Elem, Elem> find_witness(const Presemifield& source, const Presemifield& target,
                                   const IsotopismTriple& t, Elem y) {
    const FieldCtx& ctx = source.ctx();
    for (std::int64_t s = 0; s < ctx.group_order(); ++s) {
        Elem x = ctx.pow(ctx.generator(), s);
        Elem lhs = target.multiply(linpoly::eval(ctx, t.M, x), linpoly::eval(ctx, t.N, y));
        Elem rhs = linpoly::eval(ctx, t.L, source.multiply(x, y));
        if (lhs != rhs) return {x, y};
    }
    fail(Err::VerificationFailure, "refuted spread-set criterion but no witness pair exists");
}

} // namespace

IsoStatus verify_isotopism(const Presemifield& source, const Presemifield& target,
                           IsotopismTriple& triple, int jobs, bool definitional) {
    const FieldCtx& ctx = source.ctx();
    LinearizedMap Minv = require_inverse(ctx, triple.M, "M");
    require_inverse(ctx, triple.N, "N");
    require_inverse(ctx, triple.L, "L");
    SpreadSet s2 = spread_set(target);
    triple.witness.reset();
    for (std::int64_t t = 0; t < ctx.group_order(); ++t) {
        Elem y = ctx.pow(ctx.generator(), t);
        LinearizedMap m = linpoly::compose(ctx, triple.L,
                                           linpoly::compose(ctx, source.left_map(y), Minv));
        auto hit = s2.find(m);
        if (!hit || Elem{*hit} != linpoly::eval(ctx, triple.N, y)) {
            triple.status = IsoStatus::Refuted;
            triple.witness = find_witness(source, target, triple, y);
            return triple.status;
        }
    }
    if (definitional) {
        std::atomic<bool> ok{true};
        parallel_for(jobs, 0, ctx.size(), [&](std::uint32_t lo, std::uint32_t hi) {
            for (std::uint32_t xv = lo; xv < hi && ok.load(std::memory_order_relaxed); ++xv) {
                Elem x{xv};
                Elem mx = linpoly::eval(ctx, triple.M, x);
                for (std::uint32_t yv = 0; yv < ctx.size(); ++yv) {
                    Elem y{yv};
                    if (target.multiply(mx, linpoly::eval(ctx, triple.N, y)) !=
                        linpoly::eval(ctx, triple.L, source.multiply(x, y))) {
                        ok.store(false, std::memory_order_relaxed);
                        break;
                    }
                }
            }
        });
        if (!ok.load())
            fail(Err::VerificationFailure,
                 "definitional oracle disagrees with the spread-set criterion");
    }
    triple.status = IsoStatus::Verified;
    return triple.status;
}

std::optional<LinearizedMap> induce_n(const Presemifield& source, const Presemifield& target,
                                      const LinearizedMap& M, const LinearizedMap& L) {
    const FieldCtx& ctx = source.ctx();
    LinearizedMap Minv = require_inverse(ctx, M, "M");
    require_inverse(ctx, L, "L");
    SpreadSet s2 = spread_set(target);
    std::vector<Elem> pointwise(ctx.size(), ctx.zero());
    for (std::uint32_t yv = 1; yv < ctx.size(); ++yv) {
        LinearizedMap m = linpoly::compose(ctx, L,
                                           linpoly::compose(ctx, source.left_map(Elem{yv}), Minv));
        auto hit = s2.find(m);
        if (!hit) return std::nullopt;
        pointwise[yv] = Elem{*hit};
    }
    std::vector<Elem> images(ctx.n());
    for (int j = 0; j < ctx.n(); ++j) {
        std::uint32_t basis = 1;
        for (int t = 0; t < j; ++t) basis *= static_cast<std::uint32_t>(ctx.p());
        images[j] = pointwise[basis];
    }
    LinearizedMap n = linpoly::from_basis_images(ctx, images);
    // the pointwise correspondence must be additive, i.e. equal its linear fit
    for (std::uint32_t yv = 0; yv < ctx.size(); ++yv)
        if (linpoly::eval(ctx, n, Elem{yv}) != pointwise[yv])
            fail(Err::VerificationFailure, "induced correspondence is not additive");
    if (!linpoly::is_invertible(ctx, n))
        fail(Err::VerificationFailure, "induced correspondence is not invertible");
    return n;
}

IsotopismTriple dual_transform(const IsotopismTriple& t, const Presemifield& source,
                               const Presemifield& target) {
    IsotopismTriple r{t.N, t.M, t.L, source.label(), target.label(),
                      IsoStatus::Unverified, std::nullopt};
    return r;
}

IsotopismTriple transpose_transform(const FieldCtx& ctx, const IsotopismTriple& t,
                                    const Presemifield& source, const Presemifield& target) {
    LinearizedMap m = require_inverse(ctx, linpoly::conjugate(ctx, t.L), "conjugate(L)");
    LinearizedMap l = require_inverse(ctx, linpoly::conjugate(ctx, t.M), "conjugate(M)");
    return IsotopismTriple{std::move(m), t.N, std::move(l), source.label(), target.label(),
                           IsoStatus::Unverified, std::nullopt};
}

IsotopismTriple ts_transform(const FieldCtx& ctx, const IsotopismTriple& t,
                             const Presemifield& source, const Presemifield& target) {
    LinearizedMap n = require_inverse(ctx, linpoly::conjugate(ctx, t.L), "conjugate(L)");
    LinearizedMap l = require_inverse(ctx, linpoly::conjugate(ctx, t.M), "conjugate(M)");
    return IsotopismTriple{t.N, std::move(n), std::move(l), source.label(), target.label(),
                           IsoStatus::Unverified, std::nullopt};
}

IsoStatus strong_check(const Presemifield& s1, const Presemifield& s2, const LinearizedMap& H,
                       int jobs) {
    const FieldCtx& ctx = s1.ctx();
    require_inverse(ctx, H, "H");
    LinearizedMap Hbar = linpoly::conjugate(ctx, H);
    Presemifield t1 = ts(s1);
    SpreadSet spread2 = spread_set(ts(s2));
    std::atomic<bool> ok{true};
    parallel_for(jobs, 1, ctx.size(), [&](std::uint32_t lo, std::uint32_t hi) {
        for (std::uint32_t yv = lo; yv < hi && ok.load(std::memory_order_relaxed); ++yv) {
            LinearizedMap m =
                linpoly::compose(ctx, H, linpoly::compose(ctx, t1.left_map(Elem{yv}), Hbar));
            if (!spread2.find(m)) ok.store(false, std::memory_order_relaxed);
        }
    });
    // membership for every map of a set of equal size p^n, with H and conj(H)
    // invertible, forces set equality
    return ok.load() ? IsoStatus::Verified : IsoStatus::Refuted;
}

namespace {

std::uint64_t normalizer_order(const FieldCtx& ctx, const SpreadSet& s, bool compose_left,
                               int jobs) {
    LinearizedMap psi0 = s.by_y[1]; // phi_{g^0}; nonzero in a presemifield
    auto psi0_inv = linpoly::invert(ctx, psi0);
    if (!psi0_inv) fail(Err::NotPresemifield, "spread map of 1 is singular");
    std::atomic<std::uint64_t> count{1}; // the zero map always normalizes
    parallel_for(jobs, 1, ctx.size(), [&](std::uint32_t lo, std::uint32_t hi) {
        for (std::uint32_t yv = lo; yv < hi; ++yv) {
            // candidate phi with psi0 absorbing it back into the set
            LinearizedMap cand = compose_left
                                     ? linpoly::compose(ctx, s.by_y[yv], *psi0_inv)
                                     : linpoly::compose(ctx, *psi0_inv, s.by_y[yv]);
            bool good = true;
            for (std::uint32_t zv = 1; zv < ctx.size(); ++zv) {
                LinearizedMap test = compose_left ? linpoly::compose(ctx, cand, s.by_y[zv])
                                                  : linpoly::compose(ctx, s.by_y[zv], cand);
                if (!s.find(test)) {
                    good = false;
                    break;
                }
            }
            if (good) count.fetch_add(1, std::memory_order_relaxed);
        }
    });
    return count.load();
}

} // namespace

NucleiReport nuclei(const Presemifield& s, int jobs) {
    if (!s.is_presemifield(jobs)) fail(Err::NotPresemifield, "nuclei need a presemifield");
    SpreadSet spread = spread_set(s);
    SpreadSet spread_dual = spread_set_dual(s);
    NucleiReport r;
    r.middle = normalizer_order(s.ctx(), spread, /*compose_left=*/false, jobs);
    r.right = normalizer_order(s.ctx(), spread, /*compose_left=*/true, jobs);
    r.left = normalizer_order(s.ctx(), spread_dual, /*compose_left=*/true, jobs);
    return r;
}

std::optional<int> semilinearity_constraint(const FieldCtx& ctx, const IsotopismTriple& t, int k) {
    auto el = linpoly::semilinear_type(ctx, t.L, k);
    auto em = linpoly::semilinear_type(ctx, t.M, k);
    if (!el || !em || *el != *em) return std::nullopt;
    return *el;
}

bool spread_linear_over(const Presemifield& s, int k) {
    const FieldCtx& ctx = s.ctx();
    const int step = ctx.h() * k;
    for (int i = 0; i < ctx.n(); ++i) {
        if (i % step == 0) continue;
        for (int j = 0; j < ctx.n(); ++j)
            if (s.coeff()[i][j].v != 0) return false;
    }
    return true;
}

} // namespace sforge
