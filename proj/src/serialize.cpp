#include "sforge/serialize.hpp"

namespace sforge {

json elem_to_json(const FieldCtx& ctx, Elem x) { return json(ctx.coeffs(x)); }

Elem elem_from_json(const FieldCtx& ctx, const json& j) {
    return ctx.from_coeffs(j.get<std::vector<int>>());
}

json field_to_json(const FieldCtx& ctx) {
    return json{{"p", ctx.p()},
                {"h", ctx.h()},
                {"ell", ctx.ell()},
                {"n", ctx.n()},
                {"q", ctx.q()},
                {"modulus", ctx.modulus()},
                {"generator", elem_to_json(ctx, ctx.generator())}};
}

json linmap_to_json(const FieldCtx& ctx, const LinearizedMap& m) {
    json coeffs = json::array();
    for (const Elem& c : m.c) coeffs.push_back(elem_to_json(ctx, c));
    return json{{"coeffs", coeffs}};
}

LinearizedMap linmap_from_json(const FieldCtx& ctx, const json& j) {
    LinearizedMap m;
    for (const json& c : j.at("coeffs")) m.c.push_back(elem_from_json(ctx, c));
    if (static_cast<int>(m.c.size()) != ctx.n())
        fail(Err::InvalidParams, "linearized map has wrong coefficient count");
    return m;
}

json presemifield_to_json(const Presemifield& s) {
    const FieldCtx& ctx = s.ctx();
    json rows = json::array();
    for (int i = 0; i < ctx.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < ctx.n(); ++j) row.push_back(elem_to_json(ctx, s.coeff()[i][j]));
        rows.push_back(row);
    }
    json out{{"label", s.label()}, {"coeff", rows}};
    if (auto v = s.cached_validity()) out["is_presemifield"] = *v;
    return out;
}

json triple_to_json(const FieldCtx& ctx, const IsotopismTriple& t) {
    json out{{"M", linmap_to_json(ctx, t.M)},
             {"N", linmap_to_json(ctx, t.N)},
             {"L", linmap_to_json(ctx, t.L)},
             {"source", t.source_label},
             {"target", t.target_label},
             {"status", iso_status_name(t.status)},
             {"strong", t.is_strong()}};
    if (t.witness)
        out["witness"] = json{{"x", elem_to_json(ctx, t.witness->first)},
                              {"y", elem_to_json(ctx, t.witness->second)}};
    return out;
}

json nuclei_to_json(const NucleiReport& r) {
    return json{{"left", r.left}, {"middle", r.middle}, {"right", r.right}};
}

json certificate_to_json(const FieldCtx& ctx, const StrongIsoCertificate& c) {
    json out{{"q", c.q},
             {"ell", c.ell},
             {"verdict", c.exists ? "exists" : "not-exists"},
             {"beta_bar", elem_to_json(ctx, c.beta_bar)},
             {"omega", elem_to_json(ctx, c.omega)},
             {"xi", elem_to_json(ctx, c.xi)}};
    if (c.exists) {
        out["H"] = linmap_to_json(ctx, *c.H);
        out["rho"] = elem_to_json(ctx, c.rho);
        out["b"] = elem_to_json(ctx, c.b);
        out["scaling_identity"] = c.scaling_identity;
    } else {
        out["equation"] = json{{"exponent", c.equation_exponent},
                               {"rhs", elem_to_json(ctx, c.equation_rhs)}};
        out["flags"] = json{{"no_solution", c.no_solution},
                            {"per_coefficient", c.per_coefficient},
                            {"delta_in_fq2", c.delta_in_fq2},
                            {"psi_inv_identity", c.psi_inv_identity}};
    }
    return out;
}

} // namespace sforge
