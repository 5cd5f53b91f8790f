#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sforge/errors.hpp"

namespace sforge {

/// Parameters of the field tower F_p < F_q = F_{p^h} < F_{q^2}, F_{q^l} < F_{q^{2l}}.
/// The ambient field has degree n = 2*h*l over F_p.
struct TowerParams {
    int p = 3;
    int h = 1;
    int ell = 3;
    std::optional<int> d; // family parameter; when present, gcd(ell,d)=1 and ell+d odd
    int n() const { return 2 * h * ell; }
    void validate(std::uint64_t size_bound) const;
};

/// An element of F_{p^n}, packed as the base-p integer whose digit i is the
/// coefficient of x^i in the polynomial basis w.r.t. the context modulus.
struct Elem {
    std::uint32_t v = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
    friend auto operator<=>(const Elem&, const Elem&) = default;
};

/// Immutable context for arithmetic in F_{p^n} = F_p[x]/(m).  All operations
/// are pure functions of (ctx, inputs); sharing across threads is safe.
class FieldCtx {
public:
    /// Default modulus: lexicographically least monic irreducible of degree n
    /// (coefficients compared from x^{n-1} down to the constant term).
    explicit FieldCtx(const TowerParams& params,
                      std::optional<std::vector<int>> modulus_override = std::nullopt,
                      std::uint64_t size_bound = default_size_bound());

    /// 2^20 unless overridden by the SEMIFIELD_FORGE_BOUND environment variable.
    static std::uint64_t default_size_bound();

    const TowerParams& params() const { return params_; }
    int p() const { return params_.p; }
    int h() const { return params_.h; }
    int ell() const { return params_.ell; }
    int n() const { return n_; }
    std::int64_t q() const { return qpow_[1]; }
    std::int64_t q_pow(int e) const; // q^e, 0 <= e <= 2*ell
    std::uint32_t size() const { return size_; }
    std::int64_t group_order() const { return static_cast<std::int64_t>(size_) - 1; }

    const std::vector<int>& modulus() const { return modulus_; } // length n+1, monic
    Elem generator() const { return gen_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem element(std::uint32_t idx) const;
    Elem scalar(std::int64_t c) const; // image of the integer c in F_p
    Elem half() const { return half_; } // 1/2, p odd

    std::vector<int> coeffs(Elem x) const;
    Elem from_coeffs(const std::vector<int>& c) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const; // a != 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t e) const;
    Elem frob(Elem x, int k) const;  // x^{p^k}, k reduced mod n
    Elem frobq(Elem x, int e) const; // x^{q^e}
    std::int64_t dlog(Elem x) const; // x != 0; exponent of the fixed generator

    bool in_subfield_q(Elem x, int k) const; // x in F_{q^k}, k in {1,2,ell,...}
    bool is_square(Elem x) const;            // x != 0
    bool is_square_in_subfield(Elem x, int k) const; // x in F_{q^k}*

    /// All x in F_{p^n}* with x^k = a (a != 0), sorted by packed index.
    std::vector<Elem> solve_power_eq(std::int64_t k, Elem a) const;

    /// The canonical omega in F_{q^2} \ F_q with omega^q = -omega, chosen with
    /// lexicographically least coefficient vector (constant term first).
    /// Requires ell odd.
    Elem omega() const;
    Elem sigma() const; // omega^2, a nonsquare of F_q

    /// Compares coefficient vectors (c_0, c_1, ...) lexicographically.
    bool lex_less(Elem a, Elem b) const;

    /// e_j^{p^i} for the polynomial basis e_j = x^j.
    Elem basis_frob(int j, int i) const { return basis_frob_[j][i]; }
    /// Inverse of the Moore matrix A[j][k] = e_j^{p^k}; recovers p-polynomial
    /// coefficients from values on the basis.
    const std::vector<std::vector<Elem>>& moore_inverse() const { return moore_inv_; }

    std::int64_t p_pow_mod_order(int k) const { return pk_[k]; } // p^k mod (p^n - 1)

private:
    TowerParams params_;
    int n_ = 0;
    std::uint32_t size_ = 0;
    std::vector<int> modulus_;
    Elem gen_{};
    Elem half_{};
    std::optional<Elem> omega_;
    std::vector<std::uint64_t> ppow_;     // p^i as integers, i <= n
    std::vector<std::int64_t> pk_;        // p^k mod (p^n - 1)
    std::vector<std::int64_t> qpow_;      // q^e, e <= 2*ell
    std::vector<std::uint32_t> exp_;      // exp_[i] = g^i, size p^n - 1
    std::vector<std::int64_t> log_;       // log_[x.v], -1 for 0
    std::vector<std::vector<Elem>> basis_frob_;
    std::vector<std::vector<Elem>> moore_inv_;
};

/// gcd(q^{2l}-1, q^{l+d}-1) and gcd(q^l+1, q^d+1); asserts the closed forms
/// q-1 and 2 that hold when ell+d is odd and gcd(ell,d)=1.
std::pair<std::int64_t, std::int64_t> gcd_identities(std::int64_t q, int ell, int d);

/// Same as ctx.omega(); kept as a free function for symmetry with the rest of
/// the operation surface.
Elem find_omega(const FieldCtx& ctx);

} // namespace sforge
