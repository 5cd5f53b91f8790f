#pragma once

#include <optional>
#include <vector>

#include "sforge/field_tower.hpp"

namespace sforge {

/// An additive F_p-linear map of F_{p^n} stored as the n coefficients of its
/// p-polynomial phi(x) = sum_i c[i] x^{p^i}, reduced mod x^{p^n} - x.  Maps
/// are equal iff their coefficient vectors are equal.
struct LinearizedMap {
    std::vector<Elem> c;
    friend bool operator==(const LinearizedMap&, const LinearizedMap&) = default;
    friend auto operator<=>(const LinearizedMap&, const LinearizedMap&) = default;
};

namespace linpoly {

LinearizedMap zero_map(const FieldCtx& ctx);
LinearizedMap identity(const FieldCtx& ctx);
LinearizedMap scalar_map(const FieldCtx& ctx, Elem lambda);      // t_lambda: x -> lambda x
LinearizedMap frobenius_map(const FieldCtx& ctx, int k);         // x -> x^{p^k}
LinearizedMap frobenius_q_map(const FieldCtx& ctx, int e);       // x -> x^{q^e}
LinearizedMap monomial(const FieldCtx& ctx, Elem coeff, int k);  // x -> coeff * x^{p^k}

Elem eval(const FieldCtx& ctx, const LinearizedMap& phi, Elem x);

LinearizedMap add(const FieldCtx& ctx, const LinearizedMap& a, const LinearizedMap& b);
LinearizedMap sub(const FieldCtx& ctx, const LinearizedMap& a, const LinearizedMap& b);
LinearizedMap scale(const FieldCtx& ctx, Elem lambda, const LinearizedMap& a); // t_lambda o a

/// phi o psi, read right to left: eval(compose(phi,psi), x) = eval(phi, eval(psi, x)).
LinearizedMap compose(const FieldCtx& ctx, const LinearizedMap& phi, const LinearizedMap& psi);

/// The conjugate: sum_i c_i x^{p^i}  ->  sum_i c_i^{p^{n-i}} x^{p^{n-i}}.  An involution.
LinearizedMap conjugate(const FieldCtx& ctx, const LinearizedMap& phi);

/// Column j = coordinates of phi(e_j); row-major n*n entries over F_p.
std::vector<int> as_matrix(const FieldCtx& ctx, const LinearizedMap& phi);
int matrix_rank(const FieldCtx& ctx, std::vector<int> m);
bool is_invertible(const FieldCtx& ctx, const LinearizedMap& phi);

/// Inverse map, or nullopt when phi is not bijective.  Computed by inverting
/// the F_p matrix and interpolating p-polynomial coefficients through the
/// precomputed Moore-matrix inverse.
std::optional<LinearizedMap> invert(const FieldCtx& ctx, const LinearizedMap& phi);

/// Recovers the unique reduced p-polynomial with the given values on the
/// polynomial basis e_j = x^j.
LinearizedMap from_basis_images(const FieldCtx& ctx, const std::vector<Elem>& images);

/// Companion exponent e with L(lambda x) = lambda^{p^e} L(x) for all lambda in
/// F_{q^k}, or nullopt if L is not F_{q^k}-semilinear.  Testing the subfield
/// generator suffices: lambda -> (condition) is multiplicative and the
/// subfield's nonzero elements are the generator's powers.
std::optional<int> semilinear_type(const FieldCtx& ctx, const LinearizedMap& L, int k);

} // namespace linpoly
} // namespace sforge
