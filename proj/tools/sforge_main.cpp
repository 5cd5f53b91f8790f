// semifield forge: construct the two presemifield families, verify the
// isotopisms between them, and decide strong isotopy, emitting JSON reports.
#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "sforge/selftest.hpp"
#include "sforge/serialize.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using sforge::json;

struct CommonOpts {
    std::int64_t q = 3;
    int ell = 3;
    int jobs = 1;
    int max_field_bits = 0; // 0 = use the default bound
    std::string modulus;    // comma-separated base-p coefficients, low to high
};

void add_field_opts(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--q", o.q, "Subfield order q = p^h (odd prime power)");
    cmd->add_option("--ell", o.ell, "Tower degree ell (odd, > 1); the field is F_{q^{2 ell}}");
    cmd->add_option("--jobs", o.jobs, "Worker threads for exhaustive scans")->default_val(1);
    cmd->add_option("--max-field-bits", o.max_field_bits,
                    "Reject fields with more than this many bits");
    cmd->add_option("--modulus", o.modulus,
                    "Override the field modulus (comma-separated coefficients, constant first)");
}

std::pair<int, int> factor_prime_power(std::int64_t q) {
    if (q < 2) sforge::fail(sforge::Err::InvalidParams, "q must be at least 3");
    std::int64_t p = q;
    for (std::int64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    int h = 0;
    std::int64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++h;
    }
    if (r != 1) sforge::fail(sforge::Err::InvalidParams, "q is not a prime power");
    return {static_cast<int>(p), h};
}

sforge::FieldCtx make_ctx(const CommonOpts& o, std::optional<int> d) {
    auto [p, h] = factor_prime_power(o.q);
    sforge::TowerParams tp{p, h, o.ell, d};
    std::optional<std::vector<int>> mod;
    if (!o.modulus.empty()) {
        std::vector<int> coeffs;
        std::stringstream ss(o.modulus);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoi(tok));
        mod = std::move(coeffs);
    }
    std::uint64_t bound = o.max_field_bits > 0 ? (std::uint64_t{1} << o.max_field_bits)
                                               : sforge::FieldCtx::default_size_bound();
    return sforge::FieldCtx(tp, std::move(mod), bound);
}

json family_descriptor(const sforge::FieldCtx& ctx, const std::string& family,
                       const std::optional<sforge::BHBParams>& bp) {
    json d{{"family", family}, {"q", ctx.q()}, {"ell", ctx.ell()}};
    if (bp) {
        d["d"] = bp->d;
        d["beta"] = sforge::elem_to_json(ctx, bp->beta);
    }
    return d;
}

void emit(const json& report, const std::string& summary,
          std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << " (" << ms << " ms)\n";
}

int exit_code_for(const sforge::Error& e) {
    using sforge::Err;
    switch (e.kind()) {
    case Err::InvalidParams:
    case Err::NotPrime:
    case Err::ReducibleModulus:
    case Err::ZeroInput:
    case Err::NotInSubfield:
    case Err::PreconditionFailed:
        return 2;
    case Err::SizeBoundExceeded:
        return 3;
    default:
        return 4; // identity-verification bug traps
    }
}

int cmd_construct(const CommonOpts& o, const std::string& family, int d,
                  std::optional<std::int64_t> beta_index) {
    auto start = std::chrono::steady_clock::now();
    json report{{"command", "construct"}, {"version", kVersion}};
    std::string label;
    if (family == "LMPTB") {
        sforge::FieldCtx ctx = make_ctx(o, std::nullopt);
        report["field"] = sforge::field_to_json(ctx);
        sforge::LMPTBParams lp = sforge::make_lmptb_params(ctx);
        sforge::GBounds bounds = sforge::resolve_gbounds(ctx, lp);
        sforge::Presemifield s = sforge::lmptb(ctx, lp, bounds);
        report["family"] = family_descriptor(ctx, "LMPTB", std::nullopt);
        report["results"] = json{{"is_presemifield", s.is_presemifield(o.jobs)},
                                 {"is_commutative", s.is_commutative()},
                                 {"label", s.label()}};
        label = s.label();
    } else if (family == "BHB") {
        sforge::FieldCtx ctx = make_ctx(o, d);
        report["field"] = sforge::field_to_json(ctx);
        sforge::BHBParams bp =
            beta_index ? sforge::make_bhb_params(ctx, ctx.pow(ctx.generator(), *beta_index), d)
                       : sforge::default_bhb_params(ctx, d);
        sforge::Presemifield s = sforge::bhb(ctx, bp);
        report["family"] = family_descriptor(ctx, "BHB", bp);
        report["results"] = json{{"is_presemifield", s.is_presemifield(o.jobs)},
                                 {"is_commutative", s.is_commutative()},
                                 {"label", s.label()}};
        label = s.label();
    } else {
        sforge::fail(sforge::Err::InvalidParams, "unknown family: " + family);
    }
    emit(report, "constructed " + label, start);
    return 0;
}

int cmd_isotopy(const CommonOpts& o) {
    auto start = std::chrono::steady_clock::now();
    sforge::FieldCtx ctx = make_ctx(o, 2);
    sforge::SymplecticIsotopism si = sforge::symplectic_isotopism(ctx, o.jobs);
    sforge::FamilyIsotopism fi = sforge::family_isotopism(ctx, o.jobs);
    sforge::NucleiReport ns = sforge::nuclei(fi.source, o.jobs);
    sforge::NucleiReport nt = sforge::nuclei(fi.target, o.jobs);
    json report{{"command", "isotopy"},
                {"version", kVersion},
                {"field", sforge::field_to_json(ctx)},
                {"families",
                 json::array({family_descriptor(ctx, "LMPTB", std::nullopt),
                              family_descriptor(ctx, "BHB", fi.bridge.bhb_params)})},
                {"results",
                 json{{"symplectic_triple", sforge::triple_to_json(ctx, si.triple)},
                      {"family_triple", sforge::triple_to_json(ctx, fi.triple)},
                      {"beta_bar", sforge::elem_to_json(ctx, fi.bridge.beta_bar)},
                      {"xi", sforge::elem_to_json(ctx, fi.bridge.xi.xi)},
                      {"nuclei", json{{"source", sforge::nuclei_to_json(ns)},
                                      {"target", sforge::nuclei_to_json(nt)},
                                      {"equal", ns == nt}}}}}};
    if (ns != nt)
        sforge::fail(sforge::Err::VerificationFailure, "nuclei orders differ across the isotopy");
    emit(report, "both isotopism triples verified", start);
    return 0;
}

int cmd_strong(const CommonOpts& o, bool slow) {
    auto start = std::chrono::steady_clock::now();
    sforge::FieldCtx ctx = make_ctx(o, 2);
    sforge::StrongIsoCertificate cert = sforge::decide_strong(ctx, o.jobs);
    json report{{"command", "strong"},
                {"version", kVersion},
                {"field", sforge::field_to_json(ctx)},
                {"certificate", sforge::certificate_to_json(ctx, cert)}};
    if (slow && !cert.exists) {
        std::uint64_t hits = sforge::strong_brute_force(ctx, o.jobs);
        report["brute_force"] = json{{"semilinear_survivors", hits}};
        if (hits != 0)
            sforge::fail(sforge::Err::VerificationFailure,
                         "brute force found a semilinear map contradicting the certificate");
    }
    emit(report,
         std::string("strong isotopism ") + (cert.exists ? "exists" : "does not exist"), start);
    return 0;
}

int cmd_selftest(std::uint64_t seed, int jobs, int max_field_bits, bool slow) {
    auto start = std::chrono::steady_clock::now();
    sforge::SelftestOptions opts;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.max_field_bits = max_field_bits;
    opts.slow_oracles = slow;
    sforge::SelftestReport r = sforge::run_selftest(opts);
    json suites = json::array();
    for (const auto& s : r.suites)
        suites.push_back(json{{"name", s.name}, {"status", s.status}, {"detail", s.detail}});
    json report{{"command", "selftest"},
                {"version", kVersion},
                {"seed", seed},
                {"ok", r.ok},
                {"suites", suites}};
    emit(report, r.ok ? "all suites passed" : "selftest FAILED", start);
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semifield forge: commutative presemifield families, isotopisms, and "
                 "strong-isotopy certificates over small finite fields"};
    app.require_subcommand(1);

    CommonOpts con_o, iso_o, str_o;
    std::string family = "LMPTB";
    int d = 2;
    std::optional<std::int64_t> beta_index;
    std::int64_t beta_index_raw = -1;
    bool slow = false;
    std::uint64_t seed = 1;
    int st_jobs = 1, st_bits = 20;
    bool st_slow = false;

    CLI::App* con = app.add_subcommand("construct", "Build a family member and validate it");
    add_field_opts(con, con_o);
    con->add_option("--family", family, "LMPTB or BHB")->required();
    con->add_option("--d", d, "Twist exponent d for BHB")->default_val(2);
    con->add_option("--beta-index", beta_index_raw, "beta = g^index (default: least nonsquare)");

    CLI::App* iso = app.add_subcommand("isotopy", "Verify the explicit isotopisms between the two families");
    add_field_opts(iso, iso_o);

    CLI::App* str = app.add_subcommand("strong", "Decide strong isotopy and emit a certificate");
    add_field_opts(str, str_o);
    str->add_flag("--slow-oracles", slow, "Also run the exhaustive semilinear brute force");

    CLI::App* st = app.add_subcommand("selftest", "Run all module invariant suites");
    st->add_option("--seed", seed, "Seed for randomized property suites")->default_val(1);
    st->add_option("--jobs", st_jobs, "Worker threads")->default_val(1);
    st->add_option("--max-field-bits", st_bits, "Skip suites over larger fields")->default_val(20);
    st->add_flag("--slow-oracles", st_slow, "Enable the quadratic definitional oracles");

    CLI11_PARSE(app, argc, argv);

    try {
        if (con->parsed()) {
            if (con->count("--beta-index")) beta_index = beta_index_raw;
            return cmd_construct(con_o, family, d, beta_index);
        }
        if (iso->parsed()) return cmd_isotopy(iso_o);
        if (str->parsed()) return cmd_strong(str_o, slow);
        if (st->parsed()) return cmd_selftest(seed, st_jobs, st_bits, st_slow);
    } catch (const sforge::Error& e) {
        std::cerr << "error [" << sforge::err_name(e.kind()) << "]: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
