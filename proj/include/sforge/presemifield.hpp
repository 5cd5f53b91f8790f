#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sforge/linpoly.hpp"

namespace sforge {

/// Bilinear coefficient matrix: x * y = sum_{i,j} a[i][j] x^{p^i} y^{p^j}.
/// The monomials x^{p^i} y^{p^j} (exponents reduced to [0,n)) are linearly
/// independent as functions, so the matrix representation is unique and
/// matrix equality is full multiplication-map equality.
using BilinearCoeffs = std::vector<std::vector<Elem>>;

class Presemifield {
public:
    Presemifield(const FieldCtx& ctx, BilinearCoeffs coeff, std::string label);
    Presemifield(const Presemifield& other);
    Presemifield(Presemifield&& other) noexcept;
    Presemifield& operator=(const Presemifield& other);
    Presemifield& operator=(Presemifield&& other) noexcept;

    const FieldCtx& ctx() const { return *ctx_; }
    const BilinearCoeffs& coeff() const { return coeff_; }
    const std::string& label() const { return label_; }

    Elem multiply(Elem x, Elem y) const;
    LinearizedMap left_map(Elem y) const;  // phi_y : x -> x * y
    LinearizedMap right_map(Elem x) const; // phi^x : y -> x * y

    /// Definitive: the coefficient matrix is symmetric (unique representation).
    bool is_commutative() const;

    /// True iff every nonzero phi_y and every nonzero phi^x is invertible.
    /// Cached after the first call; jobs > 1 splits the scan across threads.
    bool is_presemifield(int jobs = 1) const;
    std::optional<bool> cached_validity() const;

    friend bool operator==(const Presemifield& a, const Presemifield& b) {
        return a.coeff_ == b.coeff_;
    }

private:
    const FieldCtx* ctx_;
    BilinearCoeffs coeff_;
    std::string label_;
    mutable std::mutex cache_mutex_;
    mutable std::optional<bool> valid_;
};

struct MapKeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t v : k) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// The p^n maps phi_y of a presemifield, indexed by the packed value of y,
/// with a canonical index for set-equality and membership.
struct SpreadSet {
    const FieldCtx* ctx;
    std::vector<LinearizedMap> by_y; // index = packed y
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, MapKeyHash> index;

    static std::vector<std::uint32_t> key(const LinearizedMap& m);
    /// y with phi_y == m, or nullopt.
    std::optional<std::uint32_t> find(const LinearizedMap& m) const;
    bool same_set(const SpreadSet& other) const;
};

SpreadSet spread_set(const Presemifield& s);
SpreadSet spread_set_dual(const Presemifield& s);

Presemifield dual(const Presemifield& s);      // x *' y = y * x
Presemifield transpose(const Presemifield& s); // spread set {conjugate(phi_y)}
Presemifield ts(const Presemifield& s);        // dual(transpose(s)), the symplectic version

/// Dembowski-Ostrom polynomial f(x) = sum d[i][j] x^{p^i + p^j}, stored with a
/// symmetric coefficient matrix.
struct DOPolynomial {
    const FieldCtx* ctx;
    BilinearCoeffs d;
    Elem eval(Elem x) const;
};

Presemifield from_planar_do(const DOPolynomial& f, bool check_planarity = false);
DOPolynomial to_planar_do(const Presemifield& s); // requires commutative, p odd

/// Default route: spread-set invertibility of the associated presemifield.
bool is_planar(const DOPolynomial& f);
/// Independent oracle: per-shift image-count scan, O(p^{2n}); desk scale only.
bool is_planar_scan(const DOPolynomial& f);

// --- symbolic assembly helpers ---------------------------------------------

BilinearCoeffs zero_bilinear(const FieldCtx& ctx);
/// adds c * x^{p^i} y^{p^j}
void add_term(const FieldCtx& ctx, BilinearCoeffs& m, int i, int j, Elem c);
BilinearCoeffs add_bilinear(const FieldCtx& ctx, const BilinearCoeffs& a, const BilinearCoeffs& b);
BilinearCoeffs scale_bilinear(const FieldCtx& ctx, Elem c, const BilinearCoeffs& a);
/// (x,y) -> L(B(x,y))
BilinearCoeffs apply_linearized(const FieldCtx& ctx, const LinearizedMap& L, const BilinearCoeffs& b);
/// (x,y) -> B(M(x), y)
BilinearCoeffs substitute_x(const FieldCtx& ctx, const BilinearCoeffs& b, const LinearizedMap& M);
/// (x,y) -> B(x, N(y))
BilinearCoeffs substitute_y(const FieldCtx& ctx, const BilinearCoeffs& b, const LinearizedMap& N);
/// matrix whose x^{p^i} coefficient, as a p-polynomial in y, is rows[i]
BilinearCoeffs from_x_rows(const FieldCtx& ctx, const std::vector<std::pair<int, LinearizedMap>>& rows);

/// Simple blocked parallel-for used by the exhaustive scans.
void parallel_for(int jobs, std::uint32_t begin, std::uint32_t end,
                  const std::function<void(std::uint32_t, std::uint32_t)>& body);

} // namespace sforge
