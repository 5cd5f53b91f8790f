#pragma once

#include "sforge/presemifield.hpp"

namespace sforge {

/// Parameters of the BHB family B(q,l,d,beta): beta a nonsquare of F_{q^{2l}},
/// omega the canonical element with omega^q = -omega, sigma = omega^2.
struct BHBParams {
    Elem beta;
    Elem omega;
    Elem sigma;
    int d = 2;
};

/// Parameters of the LMPTB family P(q,l), l = 2k+1 odd; eta plays the role of
/// the fixed square root of sigma (eta = omega here).
struct LMPTBParams {
    int k = 1;
    Elem eta;
};

/// Which lower bound the even-exponent sum of the projection map G uses.  The
/// family definition and its symplectic derivation suggest different bounds;
/// the transpose-dual equivalence gate decides which one is consistent.
enum class GBounds {
    Verbatim, // i = 1 .. k
    AltLow,   // i = 0 .. k
};

BHBParams make_bhb_params(const FieldCtx& ctx, Elem beta, int d);
/// Default beta: least generator power that is a nonsquare (the generator itself).
BHBParams default_bhb_params(const FieldCtx& ctx, int d);
LMPTBParams make_lmptb_params(const FieldCtx& ctx);

/// Condition (5): no a in F_{q^{2l}}* with a + a^{q^l} = a + a^{q^d} = 0.
/// Computed by exhaustive scan AND by the parity of l + d; disagreement is a
/// hard failure.
bool check_condition5(const FieldCtx& ctx, int ell, int d);

/// Condition (4): beta^{(q^{2l}-1)/gcd(q^l+1, q^d+1)} != 1, evaluated literally.
bool check_condition4(const FieldCtx& ctx, Elem beta, int ell, int d);

/// x * y = x y^{q^l} + x^{q^l} y + [beta(x y^{q^d} + x^{q^d} y)
///         + beta^{q^l} (x y^{q^d} + x^{q^d} y)^{q^l}] omega
Presemifield bhb(const FieldCtx& ctx, const BHBParams& params);

/// x * y = (x y + x^{q^l} y^{q^l})/2 + G(x y^{q^2} + x^{q^2} y)/4
Presemifield lmptb(const FieldCtx& ctx, const LMPTBParams& params, GBounds bounds = GBounds::Verbatim);

/// The projection map G as a linearized map, with the chosen bound variant.
LinearizedMap lmptb_g_map(const FieldCtx& ctx, int k, GBounds bounds);

/// The bound variant whose family multiplication matches the closed symplectic
/// form under the transpose-dual gate; errors if neither variant does.
GBounds resolve_gbounds(const FieldCtx& ctx, const LMPTBParams& params);

/// Symplectic version built directly from the closed form
/// x . y = A x + B^{q^2} eta x^{q^2} + B eta x^{q^{2l-2}}; must equal
/// ts(lmptb(...)) as a multiplication map.
Presemifield lmptb_symplectic(const FieldCtx& ctx, const LMPTBParams& params);

/// Symplectic version from the closed form
/// x . y = 2A x^{q^l} + 2 sigma^{q^{2l-d}} beta^{q^{2l-d}} B^{q^{2l-d}} x^{q^{2l-d}}
///         + 2 sigma beta B x^{q^d}; must equal ts(bhb(...)).
Presemifield bhb_symplectic(const FieldCtx& ctx, const BHBParams& params);

/// y = A + (B^{q^2} + B) eta with A, B in F_{q^l}.
std::pair<Elem, Elem> decompose_lmptb(const FieldCtx& ctx, const LMPTBParams& params, Elem y);
/// y = A + B omega with A, B in F_{q^l}.
std::pair<Elem, Elem> decompose_omega(const FieldCtx& ctx, Elem y);

/// gamma in F_{q^l} -> gamma + gamma^{q^2}, and its explicit-sum inverse.
Elem phi_small(const FieldCtx& ctx, Elem gamma);
Elem phi_small_inv(const FieldCtx& ctx, Elem z);
/// The inverse as an ambient linearized map (restricts to phi^{-1} on F_{q^l}).
LinearizedMap phi_small_inv_map(const FieldCtx& ctx);

/// f(y) = (y - y^{q^l} + g(y))/4 and g(y) = alpha_y + beta_y + gamma_y from the
/// symplectic form of P(q,l).
Elem f_of_y(const FieldCtx& ctx, const LMPTBParams& params, Elem y);
Elem g_of_y(const FieldCtx& ctx, const LMPTBParams& params, Elem y);

} // namespace sforge
