#include "sforge/field_tower.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace sforge {

namespace {

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    for (std::int64_t f = 2; f * f <= x; ++f)
        if (x % f == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t x) {
    std::vector<std::int64_t> out;
    for (std::int64_t f = 2; f * f <= x; ++f) {
        if (x % f == 0) {
            out.push_back(f);
            while (x % f == 0) x /= f;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

// Dense little-endian polynomials over F_p, used only during construction.
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

int inv_mod_p(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    int lead_inv = inv_mod_p(m[dm], p);
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int da = static_cast<int>(a.size()) - 1;
        int c = a[da] * lead_inv % p;
        if (c != 0) {
            for (int i = 0; i <= dm; ++i) {
                int& t = a[da - dm + i];
                t = ((t - c * m[i]) % p + p) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    return poly_mod(poly_mul(a, b, p), m, p);
}

Poly poly_powmod(Poly base, std::int64_t e, const Poly& m, int p) {
    Poly r = {1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// m monic of degree n: irreducible iff x^{p^n} = x mod m and
// gcd(x^{p^{n/t}} - x, m) = 1 for every prime t | n.
bool poly_irreducible(const Poly& m, int p) {
    int deg = static_cast<int>(m.size()) - 1;
    // y_k = x^{p^k} mod m, computed by iterated p-th powers
    Poly x = {0, 1};
    Poly y = x;
    std::vector<Poly> frob(deg + 1);
    frob[0] = x;
    for (int k = 1; k <= deg; ++k) {
        y = poly_powmod(y, p, m, p);
        frob[k] = y;
    }
    Poly top = frob[deg];
    // x^{p^n} - x must vanish mod m
    Poly diff = top;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::int64_t t : prime_factors(deg)) {
        Poly d = frob[deg / t];
        if (d.size() < 2) d.resize(2, 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        trim(d);
        Poly g = poly_gcd(m, d, p);
        if (!(g.size() == 1)) return false; // nontrivial common factor
    }
    return true;
}

} // namespace

void TowerParams::validate(std::uint64_t size_bound) const {
    if (!is_prime(p) || p == 2) fail(Err::NotPrime, "p must be an odd prime, got " + std::to_string(p));
    if (h < 1) fail(Err::InvalidParams, "h must be positive");
    if (ell <= 1) fail(Err::InvalidParams, "ell must exceed 1");
    if (ell % 2 == 0) fail(Err::InvalidParams, "ell must be odd");
    if (d) {
        if (*d <= 0 || *d >= 2 * ell) fail(Err::InvalidParams, "d must satisfy 0 < d < 2*ell");
        if (std::gcd(ell, *d) != 1) fail(Err::InvalidParams, "gcd(ell, d) must be 1");
        if ((ell + *d) % 2 == 0) fail(Err::InvalidParams, "ell + d must be odd");
    }
    std::uint64_t sz = 1;
    for (int i = 0; i < n(); ++i) {
        sz *= static_cast<std::uint64_t>(p);
        if (sz > size_bound)
            fail(Err::SizeBoundExceeded,
                 "p^n = " + std::to_string(p) + "^" + std::to_string(n()) + " exceeds the size bound " +
                     std::to_string(size_bound));
    }
}

std::uint64_t FieldCtx::default_size_bound() {
    if (const char* env = std::getenv("SEMIFIELD_FORGE_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 1ull << 20;
}

FieldCtx::FieldCtx(const TowerParams& params, std::optional<std::vector<int>> modulus_override,
                   std::uint64_t size_bound)
    : params_(params), n_(params.n()) {
    params_.validate(size_bound);
    const int p = params_.p;

    ppow_.resize(n_ + 1);
    ppow_[0] = 1;
    for (int i = 1; i <= n_; ++i) ppow_[i] = ppow_[i - 1] * static_cast<std::uint64_t>(p);
    size_ = static_cast<std::uint32_t>(ppow_[n_]);

    qpow_.resize(2 * params_.ell + 1);
    qpow_[0] = 1;
    for (int e = 1; e <= 2 * params_.ell; ++e)
        qpow_[e] = qpow_[e - 1] * static_cast<std::int64_t>(ppow_[params_.h]);

    if (modulus_override) {
        modulus_ = *modulus_override;
        if (static_cast<int>(modulus_.size()) != n_ + 1)
            fail(Err::InvalidParams, "modulus override must have degree n = " + std::to_string(n_));
        for (int& c : modulus_) c = ((c % p) + p) % p;
        if (modulus_.back() != 1) fail(Err::InvalidParams, "modulus override must be monic");
        if (!poly_irreducible(modulus_, p)) fail(Err::ReducibleModulus, "modulus override is reducible over F_p");
    } else {
        // least non-leading coefficient block, read as a base-p integer with
        // the x^{n-1} coefficient most significant
        bool found = false;
        for (std::uint32_t lo = 0; lo < size_ && !found; ++lo) {
            Poly m(n_ + 1, 0);
            std::uint32_t rest = lo;
            for (int i = 0; i < n_; ++i) {
                m[i] = static_cast<int>(rest % p);
                rest /= p;
            }
            m[n_] = 1;
            if (m[0] == 0) continue; // divisible by x
            if (poly_irreducible(m, p)) {
                modulus_ = m;
                found = true;
            }
        }
        if (!found) fail(Err::ReducibleModulus, "no irreducible modulus found (internal)");
    }

    const std::int64_t N = group_order();
    pk_.resize(n_);
    pk_[0] = 1;
    for (int k = 1; k < n_; ++k) pk_[k] = pk_[k - 1] * p % N;

    // generator search on packed indices, using polynomial arithmetic
    auto idx_to_poly = [&](std::uint32_t idx) {
        Poly a;
        while (idx) {
            a.push_back(static_cast<int>(idx % p));
            idx /= p;
        }
        return a;
    };
    auto poly_to_idx = [&](const Poly& a) {
        std::uint32_t idx = 0;
        for (std::size_t i = a.size(); i-- > 0;) idx = idx * p + static_cast<std::uint32_t>(a[i]);
        return idx;
    };
    std::vector<std::int64_t> ord_factors = prime_factors(N);
    std::uint32_t gen_idx = 0;
    for (std::uint32_t cand = 2; cand < size_; ++cand) {
        Poly c = idx_to_poly(cand);
        bool ok = true;
        for (std::int64_t r : ord_factors) {
            Poly t = poly_powmod(c, N / r, modulus_, p);
            if (t.size() == 1 && t[0] == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_idx = cand;
            break;
        }
    }
    if (gen_idx == 0) fail(Err::VerificationFailure, "no multiplicative generator found (internal)");
    gen_ = Elem{gen_idx};

    exp_.assign(static_cast<std::size_t>(N), 0);
    log_.assign(size_, -1);
    Poly gp = idx_to_poly(gen_idx);
    Poly acc = {1};
    for (std::int64_t i = 0; i < N; ++i) {
        std::uint32_t idx = poly_to_idx(acc);
        exp_[static_cast<std::size_t>(i)] = idx;
        if (log_[idx] != -1) fail(Err::VerificationFailure, "generator order defect (internal)");
        log_[idx] = i;
        acc = poly_mulmod(acc, gp, modulus_, p);
    }
    if (!(acc.size() == 1 && acc[0] == 1)) fail(Err::VerificationFailure, "generator order defect (internal)");

    half_ = inv(scalar(2));

    basis_frob_.assign(n_, std::vector<Elem>(n_));
    for (int j = 0; j < n_; ++j) {
        Elem ej = Elem{static_cast<std::uint32_t>(ppow_[j])};
        for (int i = 0; i < n_; ++i) basis_frob_[j][i] = frob(ej, i);
    }

    // invert the Moore matrix A[j][k] = e_j^{p^k} over F_{p^n}
    {
        std::vector<std::vector<Elem>> a(n_, std::vector<Elem>(2 * n_, zero()));
        for (int j = 0; j < n_; ++j) {
            for (int k = 0; k < n_; ++k) a[j][k] = basis_frob_[j][k];
            a[j][n_ + j] = one();
        }
        for (int col = 0; col < n_; ++col) {
            int piv = -1;
            for (int r = col; r < n_; ++r)
                if (a[r][col].v != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) fail(Err::VerificationFailure, "Moore matrix singular (internal)");
            std::swap(a[col], a[piv]);
            Elem pinv = inv(a[col][col]);
            for (int c = 0; c < 2 * n_; ++c) a[col][c] = mul(a[col][c], pinv);
            for (int r = 0; r < n_; ++r) {
                if (r == col || a[r][col].v == 0) continue;
                Elem f = a[r][col];
                for (int c = 0; c < 2 * n_; ++c) a[r][c] = sub(a[r][c], mul(f, a[col][c]));
            }
        }
        moore_inv_.assign(n_, std::vector<Elem>(n_));
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) moore_inv_[r][c] = a[r][n_ + c];
    }

    if (params_.ell % 2 == 1) {
        // omega in F_{q^2} with omega^q = -omega, lex-least coefficient vector
        std::optional<Elem> best;
        for (std::uint32_t i = 1; i < size_; ++i) {
            Elem x{i};
            if (!in_subfield_q(x, 2)) continue;
            if (frob(x, params_.h) != neg(x)) continue;
            if (!best || lex_less(x, *best)) best = x;
        }
        if (!best) fail(Err::VerificationFailure, "no omega found (internal)");
        Elem w = *best;
        Elem s = mul(w, w);
        if (!in_subfield_q(s, 1) || is_square_in_subfield(s, 1))
            fail(Err::VerificationFailure, "omega^2 is not a nonsquare of F_q (internal)");
        omega_ = w;
    }
}

std::int64_t FieldCtx::q_pow(int e) const {
    if (e < 0 || e > 2 * params_.ell) fail(Err::InvalidParams, "q_pow exponent out of range");
    return qpow_[e];
}

Elem FieldCtx::element(std::uint32_t idx) const {
    if (idx >= size_) fail(Err::InvalidParams, "element index out of range");
    return Elem{idx};
}

Elem FieldCtx::scalar(std::int64_t c) const {
    std::int64_t r = ((c % params_.p) + params_.p) % params_.p;
    return Elem{static_cast<std::uint32_t>(r)};
}

std::vector<int> FieldCtx::coeffs(Elem x) const {
    std::vector<int> c(n_);
    std::uint32_t v = x.v;
    for (int i = 0; i < n_; ++i) {
        c[i] = static_cast<int>(v % params_.p);
        v /= params_.p;
    }
    return c;
}

Elem FieldCtx::from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > n_) fail(Err::InvalidParams, "coefficient vector too long");
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        int d = ((c[i] % params_.p) + params_.p) % params_.p;
        v = v * params_.p + static_cast<std::uint32_t>(d);
    }
    return Elem{v};
}

Elem FieldCtx::add(Elem a, Elem b) const {
    const int p = params_.p;
    std::uint32_t r = 0, av = a.v, bv = b.v;
    std::uint32_t mult = 1;
    for (int i = 0; i < n_ && (av || bv); ++i) {
        std::uint32_t s = av % p + bv % p;
        if (s >= static_cast<std::uint32_t>(p)) s -= p;
        r += s * mult;
        av /= p;
        bv /= p;
        mult *= p;
    }
    return Elem{r};
}

Elem FieldCtx::neg(Elem a) const {
    const int p = params_.p;
    std::uint32_t r = 0, av = a.v, mult = 1;
    for (int i = 0; i < n_ && av; ++i) {
        std::uint32_t d = av % p;
        if (d) r += (p - d) * mult;
        av /= p;
        mult *= p;
    }
    return Elem{r};
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    std::int64_t e = log_[a.v] + log_[b.v];
    const std::int64_t N = group_order();
    if (e >= N) e -= N;
    return Elem{exp_[static_cast<std::size_t>(e)]};
}

Elem FieldCtx::inv(Elem a) const {
    if (a.v == 0) fail(Err::ZeroInput, "inverse of zero");
    const std::int64_t N = group_order();
    std::int64_t e = (N - log_[a.v]) % N;
    return Elem{exp_[static_cast<std::size_t>(e)]};
}

Elem FieldCtx::pow(Elem a, std::int64_t e) const {
    const std::int64_t N = group_order();
    if (a.v == 0) {
        if (e == 0) return one();
        if (e < 0) fail(Err::ZeroInput, "negative power of zero");
        return zero();
    }
    std::int64_t t = ((log_[a.v] % N) * ((e % N + N) % N)) % N;
    return Elem{exp_[static_cast<std::size_t>(t)]};
}

Elem FieldCtx::frob(Elem x, int k) const {
    k = ((k % n_) + n_) % n_;
    if (x.v == 0 || k == 0) return x;
    const std::int64_t N = group_order();
    std::int64_t e = log_[x.v] * pk_[k] % N;
    return Elem{exp_[static_cast<std::size_t>(e)]};
}

Elem FieldCtx::frobq(Elem x, int e) const {
    return frob(x, params_.h * (((e % n_) + n_) % n_));
}

std::int64_t FieldCtx::dlog(Elem x) const {
    if (x.v == 0) fail(Err::ZeroInput, "discrete log of zero");
    return log_[x.v];
}

bool FieldCtx::in_subfield_q(Elem x, int k) const { return frob(x, params_.h * k) == x; }

bool FieldCtx::is_square(Elem x) const {
    if (x.v == 0) fail(Err::ZeroInput, "squareness of zero");
    return log_[x.v] % 2 == 0;
}

bool FieldCtx::is_square_in_subfield(Elem x, int k) const {
    if (x.v == 0) fail(Err::ZeroInput, "squareness of zero");
    if (!in_subfield_q(x, k)) fail(Err::NotInSubfield, "element not in F_{q^k}");
    std::int64_t sub_order = 1;
    for (int i = 0; i < k; ++i) sub_order *= q();
    sub_order -= 1;
    return pow(x, sub_order / 2) == one();
}

std::vector<Elem> FieldCtx::solve_power_eq(std::int64_t k, Elem a) const {
    if (a.v == 0) fail(Err::ZeroInput, "solve_power_eq with zero right-hand side");
    if (k < 1) fail(Err::InvalidParams, "solve_power_eq requires k >= 1");
    const std::int64_t N = group_order();
    std::int64_t kr = k % N;
    std::int64_t rhs = dlog(a);
    std::vector<Elem> sols;
    if (kr == 0) {
        if (rhs == 0)
            for (std::int64_t t = 0; t < N; ++t) sols.push_back(Elem{exp_[static_cast<std::size_t>(t)]});
    } else {
        // t * kr = rhs (mod N)
        std::int64_t g = std::gcd(kr, N);
        if (rhs % g == 0) {
            std::int64_t k1 = kr / g, N1 = N / g, r1 = rhs / g;
            // inverse of k1 mod N1 by extended Euclid
            std::int64_t x0 = 0, x1 = 1, a0 = N1, a1 = k1 % N1;
            while (a1) {
                std::int64_t qq = a0 / a1;
                a0 -= qq * a1;
                std::swap(a0, a1);
                x0 -= qq * x1;
                std::swap(x0, x1);
            }
            std::int64_t k1inv = ((x0 % N1) + N1) % N1;
            std::int64_t t0 = (r1 % N1) * k1inv % N1;
            for (std::int64_t j = 0; j < g; ++j)
                sols.push_back(Elem{exp_[static_cast<std::size_t>(t0 + j * N1)]});
        }
    }
    std::sort(sols.begin(), sols.end());
    return sols;
}

Elem FieldCtx::omega() const {
    if (!omega_) fail(Err::PreconditionFailed, "omega requires ell odd");
    return *omega_;
}

Elem FieldCtx::sigma() const {
    Elem w = omega();
    return mul(w, w);
}

bool FieldCtx::lex_less(Elem a, Elem b) const {
    const int p = params_.p;
    std::uint32_t av = a.v, bv = b.v;
    for (int i = 0; i < n_; ++i) {
        int da = static_cast<int>(av % p), db = static_cast<int>(bv % p);
        if (da != db) return da < db;
        av /= p;
        bv /= p;
    }
    return false;
}

std::pair<std::int64_t, std::int64_t> gcd_identities(std::int64_t q, int ell, int d) {
    if (std::gcd(ell, d) != 1 || (ell + d) % 2 == 0)
        fail(Err::PreconditionFailed, "gcd_identities requires gcd(ell,d)=1 and ell+d odd");
    auto ipow = [](std::int64_t b, int e) {
        std::int64_t r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    std::int64_t g1 = std::gcd(ipow(q, 2 * ell) - 1, ipow(q, ell + d) - 1);
    std::int64_t g2 = std::gcd(ipow(q, ell) + 1, ipow(q, d) + 1);
    if (g1 != q - 1) fail(Err::VerificationFailure, "gcd(q^{2l}-1, q^{l+d}-1) != q-1");
    if (g2 != 2) fail(Err::VerificationFailure, "gcd(q^l+1, q^d+1) != 2");
    return {g1, g2};
}

Elem find_omega(const FieldCtx& ctx) { return ctx.omega(); }

} // namespace sforge
