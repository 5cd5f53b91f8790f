#pragma once

#include "sforge/families.hpp"
#include "sforge/isotopy.hpp"

namespace sforge {

/// A solution xi of x^{q^{l+d}-1} = beta^{1-q^l} normalized by xi^{q^l+1} = sigma.
struct XiSolution {
    Elem xi;
    Elem beta;
    int d = 2;
};

/// All solutions of the power equation, sorted by packed index (there are q-1).
std::vector<Elem> solve_xi_all(const FieldCtx& ctx, Elem beta, int d);
/// The normalized solution; verifies both defining equations exactly.
XiSolution solve_xi(const FieldCtx& ctx, Elem beta, int d);

/// psi: x -> (omega/xi) x + x^{q^l},  phi: x -> x - (omega/xi^{q^l}) x^{q^l},
/// psi_inv: x -> ((omega/xi^{q^l}) x + x^{q^l})/2.
struct AuxiliaryMaps {
    LinearizedMap phi;
    LinearizedMap psi;
    LinearizedMap psi_inv;
};
/// Builds the three maps and verifies psi_inv o psi = id and phi invertible.
AuxiliaryMaps auxiliary_maps(const FieldCtx& ctx, const XiSolution& xi);

/// x *'' y = 2(Ax + sigma B omega (beta/xi^{q^l}) x^{q^d}
///             + sigma B^{q^{2l-d}} omega (beta^{q^{2l-d}}/xi^{q^l}) x^{q^{2l-d}}),
/// with y = A + B omega.
Presemifield normalized_target(const FieldCtx& ctx, const BHBParams& params, const XiSolution& xi);

/// The coefficient-level facts behind the normalization:
/// psi_inv o f collapses to one monomial (the cross coefficient vanishes and
/// the surviving one equals omega beta^{q^{2l-d}} / xi^{q^l}), and
/// psi_inv o g = omega (beta/xi^{q^l}) x^{q^d}, where f(x) = (beta phi(x))^{q^{2l-d}}
/// and g(x) = beta phi(x)^{q^d}.
struct NormalizationChecks {
    bool cross_coefficient_zero = false;   // coefficient of x^{q^{l-d}} in psi_inv o f
    bool surviving_coefficient_ok = false; // psi_inv o f equals its single monomial
    bool g_collapses = false;              // psi_inv o g equals its single monomial
    bool all() const { return cross_coefficient_zero && surviving_coefficient_ok && g_collapses; }
};
NormalizationChecks normalization_checks(const FieldCtx& ctx, const BHBParams& params,
                                         const XiSolution& xi);

/// Exact bilinear-matrix identity phi(x) *' y = psi(x *'' y) between the
/// symplectic BHB form and the normalized target.
bool normalized_identity_holds(const FieldCtx& ctx, const BHBParams& params, const XiSolution& xi);

/// Least generator power in F_{q^2} that is a nonsquare of F_{q^{2l}} with
/// beta_bar^{q+1} = 1/sigma.
Elem choose_beta_bar(const FieldCtx& ctx);

/// The d = 2, beta = beta_bar, xi = beta_bar^{-1} specialization linking the
/// two families; shared by the isotopism and strong-isotopy routines.
struct BridgeData {
    Elem beta_bar;
    XiSolution xi;
    BHBParams bhb_params;
    LMPTBParams lmptb_params;
    AuxiliaryMaps maps;
    LinearizedMap h_map;  // y = A + B omega -> 2A + 2(B^{q^{2l-2}} + B) omega
    LinearizedMap h_inv;
};
BridgeData make_bridge(const FieldCtx& ctx);

/// Isotopism (phi, h^{-1}, psi) between the symplectic versions; verified.
struct SymplecticIsotopism {
    BridgeData bridge;
    Presemifield source; // symplectic LMPTB
    Presemifield target; // symplectic BHB
    IsotopismTriple triple;
};
SymplecticIsotopism symplectic_isotopism(const FieldCtx& ctx, int jobs = 1);

/// Isotopism (conj(psi)^{-1}, phi, conj(h)) between the plain families;
/// verified, and asserted non-strong (M != N).
struct FamilyIsotopism {
    BridgeData bridge;
    Presemifield source; // LMPTB
    Presemifield target; // BHB
    IsotopismTriple triple;
};
FamilyIsotopism family_isotopism(const FieldCtx& ctx, int jobs = 1);

/// Outcome of the strong-isotopy decision for the family pair.
struct StrongIsoCertificate {
    std::int64_t q = 0;
    int ell = 0;
    bool exists = false;
    // exists branch (q = 1 mod 4)
    std::optional<LinearizedMap> H;
    Elem rho{};
    Elem b{};
    bool scaling_identity = false; // conj(phi)^{-1} o t_rho = psi
    // non-existence branch (q = -1 mod 4)
    std::int64_t equation_exponent = 0; // 2 q^l - 2
    Elem equation_rhs{};                // -beta_bar^{q-1}
    bool no_solution = false;
    bool per_coefficient = false; // beta_bar^q a^2 + beta_bar a^{2 q^l} != 0 for a != 0
    bool delta_in_fq2 = false;
    bool psi_inv_identity = false; // psi^{-1} = (omega beta_bar^q / 2) conj(phi)
    Elem beta_bar{};
    Elem omega{};
    Elem xi{};
};

/// q = 1 (mod 4): builds H(x) = conj(phi)^{-1}(b x) with b^2 = rho = 2 omega
/// beta_bar and verifies the strong-isotopy spread-set criterion.
StrongIsoCertificate strong_witness(const FieldCtx& ctx, int jobs = 1);

/// q = -1 (mod 4): exhaustive non-existence certificate.
StrongIsoCertificate nonexistence_certificate(const FieldCtx& ctx, int jobs = 1);

/// Dispatch on q mod 4.
StrongIsoCertificate decide_strong(const FieldCtx& ctx, int jobs = 1);

/// Slow oracle: counts invertible F_{q^2}-semilinear maps G with
/// delta G S1 conj(G) = S1 (S1 the symplectic LMPTB spread set); the
/// certificate predicts zero.  Exhaustive over all coefficient tuples and
/// companion classes; desk scale only.
std::uint64_t strong_brute_force(const FieldCtx& ctx, int jobs = 1);

} // namespace sforge
