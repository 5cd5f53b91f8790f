#include "sforge/selftest.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace sforge {

namespace {

double field_bits(const TowerParams& tp) { return tp.n() * std::log2(double(tp.p)); }

Elem random_elem(const FieldCtx& ctx, std::mt19937_64& rng) {
    return Elem{static_cast<std::uint32_t>(rng() % ctx.size())};
}

LinearizedMap random_map(const FieldCtx& ctx, std::mt19937_64& rng) {
    LinearizedMap m = linpoly::zero_map(ctx);
    for (int i = 0; i < ctx.n(); ++i) m.c[i] = random_elem(ctx, rng);
    return m;
}

LinearizedMap random_invertible(const FieldCtx& ctx, std::mt19937_64& rng) {
    for (;;) {
        LinearizedMap m = random_map(ctx, rng);
        if (linpoly::is_invertible(ctx, m)) return m;
    }
}

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

void conjugation_suite(const FieldCtx& ctx, std::mt19937_64& rng, Check& c) {
    for (int t = 0; t < 1000 && c.ok; ++t) {
        LinearizedMap a = random_map(ctx, rng);
        LinearizedMap b = random_map(ctx, rng);
        c.require(linpoly::conjugate(ctx, linpoly::conjugate(ctx, a)) == a,
                  "conjugation is not an involution");
        c.require(linpoly::conjugate(ctx, linpoly::compose(ctx, a, b)) ==
                      linpoly::compose(ctx, linpoly::conjugate(ctx, b), linpoly::conjugate(ctx, a)),
                  "conjugate of a composition is not the reversed composition of conjugates");
        c.require(linpoly::conjugate(ctx, linpoly::add(ctx, a, b)) ==
                      linpoly::add(ctx, linpoly::conjugate(ctx, a), linpoly::conjugate(ctx, b)),
                  "conjugation is not additive");
    }
}

void involution_suite(const FieldCtx& ctx, const Presemifield& s, Check& c) {
    c.require(dual(dual(s)) == s, "dual is not an involution on " + s.label());
    c.require(transpose(transpose(s)) == s, "transpose is not an involution on " + s.label());
    c.require(ts(s) == dual(transpose(s)), "symplectic version differs from dual(transpose)");
}

void planar_suite(const FieldCtx& ctx, const Presemifield& s, bool slow, Check& c) {
    DOPolynomial f = to_planar_do(s);
    c.require(from_planar_do(f) == s, "planar polynomial round trip fails for " + s.label());
    c.require(is_planar(f), "associated polynomial of " + s.label() + " is not planar");
    if (slow) c.require(is_planar_scan(f), "planarity scan oracle disagrees for " + s.label());
}

void spread_additivity_suite(const FieldCtx& ctx, const Presemifield& s, std::mt19937_64& rng,
                             Check& c) {
    for (int t = 0; t < 200 && c.ok; ++t) {
        Elem y1 = random_elem(ctx, rng), y2 = random_elem(ctx, rng);
        c.require(s.left_map(ctx.add(y1, y2)) ==
                      linpoly::add(ctx, s.left_map(y1), s.left_map(y2)),
                  "spread maps are not additive in y");
        Elem x = random_elem(ctx, rng);
        c.require(s.multiply(x, ctx.add(y1, y2)) ==
                      ctx.add(s.multiply(x, y1), s.multiply(x, y2)),
                  "multiplication is not right-distributive");
    }
}

void transform_suite(const FieldCtx& ctx, int jobs, Check& c) {
    FamilyIsotopism fi = family_isotopism(ctx, jobs);
    Presemifield ds = dual(fi.source), dt = dual(fi.target);
    IsotopismTriple d = dual_transform(fi.triple, ds, dt);
    c.require(verify_isotopism(ds, dt, d, jobs) == IsoStatus::Verified,
              "dual transform does not re-verify");
    Presemifield tsrc = transpose(fi.source), ttgt = transpose(fi.target);
    IsotopismTriple tt = transpose_transform(ctx, fi.triple, tsrc, ttgt);
    c.require(verify_isotopism(tsrc, ttgt, tt, jobs) == IsoStatus::Verified,
              "transpose transform does not re-verify");
    Presemifield ssrc = ts(fi.source), stgt = ts(fi.target);
    IsotopismTriple st = ts_transform(ctx, fi.triple, ssrc, stgt);
    c.require(verify_isotopism(ssrc, stgt, st, jobs) == IsoStatus::Verified,
              "symplectic transform does not re-verify");
    auto n = induce_n(fi.source, fi.target, fi.triple.M, fi.triple.L);
    c.require(n.has_value() && *n == fi.triple.N, "induced middle map differs from the triple's");
    // composing a verified triple with the identity autotopism keeps it verified
    IsotopismTriple idt = make_triple(fi.source, fi.source, linpoly::identity(ctx),
                                      linpoly::identity(ctx), linpoly::identity(ctx));
    c.require(verify_isotopism(fi.source, fi.source, idt, jobs) == IsoStatus::Verified,
              "identity autotopism refuted");
    c.require(strong_check(fi.source, fi.source, linpoly::identity(ctx), jobs) ==
                  IsoStatus::Verified,
              "strong reflexivity fails");
}

void nuclei_suite(const FieldCtx& ctx, int jobs, Check& c) {
    FamilyIsotopism fi = family_isotopism(ctx, jobs);
    NucleiReport a = nuclei(fi.source, jobs);
    NucleiReport b = nuclei(fi.target, jobs);
    c.require(a == b, "nuclei orders differ across an isotopy");
    c.require(a.left == a.right, "commutative member has unequal left and right nuclei");
    NucleiReport sa = nuclei(ts(fi.source), jobs);
    NucleiReport sb = nuclei(ts(fi.target), jobs);
    c.require(sa == sb, "symplectic nuclei orders differ across an isotopy");
    c.require(sa.left >= std::uint64_t(ctx.q()) * ctx.q(),
              "symplectic left nucleus misses the scalar maps over F_{q^2}");
}

void family_suite(const FieldCtx& ctx, int d, int jobs, Check& c) {
    LMPTBParams lp = make_lmptb_params(ctx);
    Presemifield p = lmptb(ctx, lp, resolve_gbounds(ctx, lp));
    c.require(p.is_commutative(), "family multiplication is not commutative");
    c.require(p.is_presemifield(jobs), "family multiplication has zero divisors");
    BHBParams bp = default_bhb_params(ctx, d);
    Presemifield b = bhb(ctx, bp);
    c.require(b.is_commutative(), "twisted family multiplication is not commutative");
    c.require(b.is_presemifield(jobs), "twisted family multiplication has zero divisors");
    c.require(ts(p) == lmptb_symplectic(ctx, lp), "symplectic closed form gate fails");
    c.require(ts(b) == bhb_symplectic(ctx, bp), "twisted symplectic closed form gate fails");
}

void strong_suite(const FieldCtx& ctx, int jobs, Check& c) {
    StrongIsoCertificate cert = decide_strong(ctx, jobs);
    if (ctx.q() % 4 == 1) {
        c.require(cert.exists && cert.H.has_value(), "expected a strong-isotopy witness");
        c.require(ctx.mul(cert.b, cert.b) == cert.rho, "square root of rho is wrong");
    } else {
        c.require(!cert.exists && cert.no_solution && cert.per_coefficient,
                  "expected a non-existence certificate");
    }
}

} // namespace

SelftestReport run_selftest(const SelftestOptions& opts) {
    SelftestReport report;
    auto run = [&](const std::string& name, const TowerParams& tp,
                   const std::function<void(const FieldCtx&, Check&)>& body) {
        SuiteResult r{name, "pass", ""};
        if (field_bits(tp) > opts.max_field_bits) {
            r.status = "skipped";
            r.detail = "field larger than --max-field-bits";
            report.suites.push_back(r);
            return;
        }
        try {
            FieldCtx ctx(tp);
            Check c;
            body(ctx, c);
            if (!c.ok) {
                r.status = "fail";
                r.detail = c.detail;
                report.ok = false;
            }
        } catch (const Error& e) {
            r.status = "fail";
            r.detail = e.what();
            report.ok = false;
        }
        report.suites.push_back(r);
    };

    TowerParams t33{3, 1, 3, 2};
    TowerParams t53{5, 1, 3, 2};
    TowerParams t35{3, 1, 5, 2};

    run("conjugation-identities-3-3", t33, [&](const FieldCtx& ctx, Check& c) {
        std::mt19937_64 rng(opts.seed);
        conjugation_suite(ctx, rng, c);
    });
    run("involutions-and-planarity-3-3", t33, [&](const FieldCtx& ctx, Check& c) {
        LMPTBParams lp = make_lmptb_params(ctx);
        Presemifield p = lmptb(ctx, lp, resolve_gbounds(ctx, lp));
        Presemifield b = bhb(ctx, default_bhb_params(ctx, 2));
        involution_suite(ctx, p, c);
        involution_suite(ctx, b, c);
        planar_suite(ctx, p, opts.slow_oracles, c);
        planar_suite(ctx, b, opts.slow_oracles, c);
    });
    run("spread-additivity-3-3", t33, [&](const FieldCtx& ctx, Check& c) {
        std::mt19937_64 rng(opts.seed + 1);
        LMPTBParams lp = make_lmptb_params(ctx);
        spread_additivity_suite(ctx, lmptb(ctx, lp, resolve_gbounds(ctx, lp)), rng, c);
        spread_additivity_suite(ctx, bhb(ctx, default_bhb_params(ctx, 2)), rng, c);
    });
    run("families-3-3", t33,
        [&](const FieldCtx& ctx, Check& c) { family_suite(ctx, 2, opts.jobs, c); });
    run("transforms-3-3", t33,
        [&](const FieldCtx& ctx, Check& c) { transform_suite(ctx, opts.jobs, c); });
    run("nuclei-3-3", t33, [&](const FieldCtx& ctx, Check& c) { nuclei_suite(ctx, opts.jobs, c); });
    run("strong-3-3", t33, [&](const FieldCtx& ctx, Check& c) { strong_suite(ctx, opts.jobs, c); });
    run("families-5-3", t53,
        [&](const FieldCtx& ctx, Check& c) { family_suite(ctx, 2, opts.jobs, c); });
    run("strong-5-3", t53, [&](const FieldCtx& ctx, Check& c) { strong_suite(ctx, opts.jobs, c); });
    run("families-3-5", t35,
        [&](const FieldCtx& ctx, Check& c) { family_suite(ctx, 2, opts.jobs, c); });
    run("strong-3-5", t35, [&](const FieldCtx& ctx, Check& c) { strong_suite(ctx, opts.jobs, c); });
    return report;
}

} // namespace sforge
