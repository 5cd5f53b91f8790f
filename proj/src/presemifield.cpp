#include "sforge/presemifield.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace sforge {

Presemifield::Presemifield(const FieldCtx& ctx, BilinearCoeffs coeff, std::string label)
    : ctx_(&ctx), coeff_(std::move(coeff)), label_(std::move(label)) {
    if (static_cast<int>(coeff_.size()) != ctx.n())
        fail(Err::InvalidParams, "coefficient matrix must be n x n");
    for (const auto& row : coeff_)
        if (static_cast<int>(row.size()) != ctx.n()) fail(Err::InvalidParams, "coefficient matrix must be n x n");
}

Presemifield::Presemifield(const Presemifield& other)
    : ctx_(other.ctx_), coeff_(other.coeff_), label_(other.label_) {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    valid_ = other.valid_;
}

Presemifield::Presemifield(Presemifield&& other) noexcept
    : ctx_(other.ctx_), coeff_(std::move(other.coeff_)), label_(std::move(other.label_)) {
    std::lock_guard<std::mutex> lock(other.cache_mutex_);
    valid_ = other.valid_;
}

Presemifield& Presemifield::operator=(const Presemifield& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(cache_mutex_, other.cache_mutex_);
    ctx_ = other.ctx_;
    coeff_ = other.coeff_;
    label_ = other.label_;
    valid_ = other.valid_;
    return *this;
}

Presemifield& Presemifield::operator=(Presemifield&& other) noexcept {
    if (this == &other) return *this;
    std::scoped_lock lock(cache_mutex_, other.cache_mutex_);
    ctx_ = other.ctx_;
    coeff_ = std::move(other.coeff_);
    label_ = std::move(other.label_);
    valid_ = other.valid_;
    return *this;
}

Elem Presemifield::multiply(Elem x, Elem y) const {
    return linpoly::eval(*ctx_, left_map(y), x);
}

LinearizedMap Presemifield::left_map(Elem y) const {
    const int n = ctx_->n();
    LinearizedMap m = linpoly::zero_map(*ctx_);
    std::vector<Elem> ypow(n);
    for (int j = 0; j < n; ++j) ypow[j] = ctx_->frob(y, j);
    for (int i = 0; i < n; ++i) {
        Elem acc = ctx_->zero();
        for (int j = 0; j < n; ++j) {
            if (coeff_[i][j].v == 0) continue;
            acc = ctx_->add(acc, ctx_->mul(coeff_[i][j], ypow[j]));
        }
        m.c[i] = acc;
    }
    return m;
}

LinearizedMap Presemifield::right_map(Elem x) const {
    const int n = ctx_->n();
    LinearizedMap m = linpoly::zero_map(*ctx_);
    std::vector<Elem> xpow(n);
    for (int i = 0; i < n; ++i) xpow[i] = ctx_->frob(x, i);
    for (int j = 0; j < n; ++j) {
        Elem acc = ctx_->zero();
        for (int i = 0; i < n; ++i) {
            if (coeff_[i][j].v == 0) continue;
            acc = ctx_->add(acc, ctx_->mul(coeff_[i][j], xpow[i]));
        }
        m.c[j] = acc;
    }
    return m;
}

bool Presemifield::is_commutative() const {
    const int n = ctx_->n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (coeff_[i][j] != coeff_[j][i]) return false;
    return true;
}

bool Presemifield::is_presemifield(int jobs) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (valid_) return *valid_;
    }
    const std::uint32_t sz = ctx_->size();
    std::atomic<bool> ok{true};
    auto scan = [&](bool dual_side) {
        parallel_for(jobs, 1, sz, [&](std::uint32_t lo, std::uint32_t hi) {
            for (std::uint32_t v = lo; v < hi && ok.load(std::memory_order_relaxed); ++v) {
                LinearizedMap m = dual_side ? right_map(Elem{v}) : left_map(Elem{v});
                if (!linpoly::is_invertible(*ctx_, m)) {
                    ok.store(false, std::memory_order_relaxed);
                    return;
                }
            }
        });
    };
    scan(false);
    if (ok.load()) scan(true);
    bool result = ok.load();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    valid_ = result;
    return result;
}

std::optional<bool> Presemifield::cached_validity() const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return valid_;
}

std::vector<std::uint32_t> SpreadSet::key(const LinearizedMap& m) {
    std::vector<std::uint32_t> k(m.c.size());
    for (std::size_t i = 0; i < m.c.size(); ++i) k[i] = m.c[i].v;
    return k;
}

std::optional<std::uint32_t> SpreadSet::find(const LinearizedMap& m) const {
    auto it = index.find(key(m));
    if (it == index.end()) return std::nullopt;
    return it->second;
}

bool SpreadSet::same_set(const SpreadSet& other) const {
    if (index.size() != other.index.size()) return false;
    for (const auto& [k, y] : index)
        if (!other.index.count(k)) return false;
    return true;
}

namespace {

SpreadSet build_spread(const Presemifield& s, bool dual_side) {
    SpreadSet out;
    out.ctx = &s.ctx();
    const std::uint32_t sz = s.ctx().size();
    out.by_y.reserve(sz);
    out.index.reserve(sz);
    for (std::uint32_t v = 0; v < sz; ++v) {
        LinearizedMap m = dual_side ? s.right_map(Elem{v}) : s.left_map(Elem{v});
        out.index.emplace(SpreadSet::key(m), v);
        out.by_y.push_back(std::move(m));
    }
    if (out.index.size() != sz) fail(Err::NotPresemifield, "spread maps are not pairwise distinct");
    return out;
}

} // namespace

SpreadSet spread_set(const Presemifield& s) { return build_spread(s, false); }
SpreadSet spread_set_dual(const Presemifield& s) { return build_spread(s, true); }

Presemifield dual(const Presemifield& s) {
    const FieldCtx& ctx = s.ctx();
    const int n = ctx.n();
    BilinearCoeffs c = zero_bilinear(ctx);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = s.coeff()[j][i];
    return Presemifield(ctx, std::move(c), s.label() + "^*");
}

Presemifield transpose(const Presemifield& s) {
    if (s.cached_validity() == std::optional<bool>(false))
        fail(Err::NotPresemifield, "transpose of a non-presemifield");
    const FieldCtx& ctx = s.ctx();
    const int n = ctx.n();
    // x *^t y = conjugate(phi_y)(x): the x^{p^i} coefficient of phi_y is
    // beta_i(y) = sum_j a_ij y^{p^j}; conjugation sends it to exponent n-i
    // with a p^{n-i}-power twist of the whole y-polynomial.
    BilinearCoeffs c = zero_bilinear(ctx);
    for (int i = 0; i < n; ++i) {
        int ni = (n - i) % n;
        for (int j = 0; j < n; ++j) {
            if (s.coeff()[i][j].v == 0) continue;
            int jj = (j + ni) % n;
            c[ni][jj] = ctx.add(c[ni][jj], ctx.frob(s.coeff()[i][j], ni));
        }
    }
    return Presemifield(ctx, std::move(c), s.label() + "^t");
}

Presemifield ts(const Presemifield& s) {
    Presemifield r = dual(transpose(s));
    return Presemifield(s.ctx(), r.coeff(), s.label() + "^{t*}");
}

Elem DOPolynomial::eval(Elem x) const {
    const int n = ctx->n();
    Elem acc = ctx->zero();
    std::vector<Elem> xp(n);
    for (int i = 0; i < n; ++i) xp[i] = ctx->frob(x, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (d[i][j].v == 0) continue;
            acc = ctx->add(acc, ctx->mul(d[i][j], ctx->mul(xp[i], xp[j])));
        }
    return acc;
}

Presemifield from_planar_do(const DOPolynomial& f, bool check_planarity) {
    const FieldCtx& ctx = *f.ctx;
    const int n = ctx.n();
    // x * y = f(x+y) - f(x) - f(y) = sum d_ij (x^{p^i} y^{p^j} + x^{p^j} y^{p^i})
    BilinearCoeffs c = zero_bilinear(ctx);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (f.d[i][j].v == 0) continue;
            c[i][j] = ctx.add(c[i][j], f.d[i][j]);
            c[j][i] = ctx.add(c[j][i], f.d[i][j]);
        }
    Presemifield s(ctx, std::move(c), "S_f");
    if (check_planarity && !s.is_presemifield()) fail(Err::NotPlanar, "DO polynomial is not planar");
    return s;
}

DOPolynomial to_planar_do(const Presemifield& s) {
    if (!s.is_commutative()) fail(Err::NotCommutative, "to_planar_do requires a commutative presemifield");
    const FieldCtx& ctx = s.ctx();
    const int n = ctx.n();
    // f(x) = (x * x)/2
    BilinearCoeffs d = zero_bilinear(ctx);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = ctx.mul(ctx.half(), s.coeff()[i][j]);
    return DOPolynomial{&ctx, std::move(d)};
}

bool is_planar(const DOPolynomial& f) { return from_planar_do(f).is_presemifield(); }

bool is_planar_scan(const DOPolynomial& f) {
    const FieldCtx& ctx = *f.ctx;
    const std::uint32_t sz = ctx.size();
    std::vector<Elem> table(sz);
    for (std::uint32_t v = 0; v < sz; ++v) table[v] = f.eval(Elem{v});
    std::vector<char> seen(sz);
    for (std::uint32_t a = 1; a < sz; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t x = 0; x < sz; ++x) {
            Elem img = ctx.sub(ctx.sub(table[ctx.add(Elem{x}, Elem{a}).v], table[x]), table[a]);
            if (seen[img.v]) return false;
            seen[img.v] = 1;
        }
    }
    return true;
}

BilinearCoeffs zero_bilinear(const FieldCtx& ctx) {
    return BilinearCoeffs(ctx.n(), std::vector<Elem>(ctx.n(), ctx.zero()));
}

void add_term(const FieldCtx& ctx, BilinearCoeffs& m, int i, int j, Elem c) {
    const int n = ctx.n();
    i = ((i % n) + n) % n;
    j = ((j % n) + n) % n;
    m[i][j] = ctx.add(m[i][j], c);
}

BilinearCoeffs add_bilinear(const FieldCtx& ctx, const BilinearCoeffs& a, const BilinearCoeffs& b) {
    BilinearCoeffs c = zero_bilinear(ctx);
    for (int i = 0; i < ctx.n(); ++i)
        for (int j = 0; j < ctx.n(); ++j) c[i][j] = ctx.add(a[i][j], b[i][j]);
    return c;
}

BilinearCoeffs scale_bilinear(const FieldCtx& ctx, Elem c, const BilinearCoeffs& a) {
    BilinearCoeffs r = zero_bilinear(ctx);
    for (int i = 0; i < ctx.n(); ++i)
        for (int j = 0; j < ctx.n(); ++j) r[i][j] = ctx.mul(c, a[i][j]);
    return r;
}

BilinearCoeffs apply_linearized(const FieldCtx& ctx, const LinearizedMap& L, const BilinearCoeffs& b) {
    const int n = ctx.n();
    BilinearCoeffs r = zero_bilinear(ctx);
    for (int e = 0; e < n; ++e) {
        if (L.c[e].v == 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (b[i][j].v == 0) continue;
                add_term(ctx, r, i + e, j + e, ctx.mul(L.c[e], ctx.frob(b[i][j], e)));
            }
    }
    return r;
}

BilinearCoeffs substitute_x(const FieldCtx& ctx, const BilinearCoeffs& b, const LinearizedMap& M) {
    const int n = ctx.n();
    BilinearCoeffs r = zero_bilinear(ctx);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (b[i][j].v == 0) continue;
            for (int e = 0; e < n; ++e) {
                if (M.c[e].v == 0) continue;
                // (M(x))^{p^i} contributes M.c[e]^{p^i} x^{p^{e+i}}
                add_term(ctx, r, e + i, j, ctx.mul(b[i][j], ctx.frob(M.c[e], i)));
            }
        }
    return r;
}

BilinearCoeffs substitute_y(const FieldCtx& ctx, const BilinearCoeffs& b, const LinearizedMap& N) {
    const int n = ctx.n();
    BilinearCoeffs r = zero_bilinear(ctx);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (b[i][j].v == 0) continue;
            for (int e = 0; e < n; ++e) {
                if (N.c[e].v == 0) continue;
                add_term(ctx, r, i, e + j, ctx.mul(b[i][j], ctx.frob(N.c[e], j)));
            }
        }
    return r;
}

BilinearCoeffs from_x_rows(const FieldCtx& ctx, const std::vector<std::pair<int, LinearizedMap>>& rows) {
    const int n = ctx.n();
    BilinearCoeffs r = zero_bilinear(ctx);
    for (const auto& [i, m] : rows) {
        int ii = ((i % n) + n) % n;
        for (int j = 0; j < n; ++j) r[ii][j] = ctx.add(r[ii][j], m.c[j]);
    }
    return r;
}

void parallel_for(int jobs, std::uint32_t begin, std::uint32_t end,
                  const std::function<void(std::uint32_t, std::uint32_t)>& body) {
    if (jobs <= 1 || end - begin < 1024) {
        body(begin, end);
        return;
    }
    std::vector<std::thread> workers;
    std::uint32_t total = end - begin;
    std::uint32_t chunk = (total + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
        std::uint32_t lo = begin + static_cast<std::uint32_t>(t) * chunk;
        if (lo >= end) break;
        std::uint32_t hi = std::min(end, lo + chunk);
        workers.emplace_back(body, lo, hi);
    }
    for (auto& w : workers) w.join();
}

} // namespace sforge
