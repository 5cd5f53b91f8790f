#include "sforge/linpoly.hpp"

namespace sforge::linpoly {

LinearizedMap zero_map(const FieldCtx& ctx) {
    return LinearizedMap{std::vector<Elem>(ctx.n(), ctx.zero())};
}

LinearizedMap identity(const FieldCtx& ctx) {
    LinearizedMap m = zero_map(ctx);
    m.c[0] = ctx.one();
    return m;
}

LinearizedMap scalar_map(const FieldCtx& ctx, Elem lambda) {
    LinearizedMap m = zero_map(ctx);
    m.c[0] = lambda;
    return m;
}

LinearizedMap frobenius_map(const FieldCtx& ctx, int k) {
    LinearizedMap m = zero_map(ctx);
    m.c[((k % ctx.n()) + ctx.n()) % ctx.n()] = ctx.one();
    return m;
}

LinearizedMap frobenius_q_map(const FieldCtx& ctx, int e) { return frobenius_map(ctx, ctx.h() * e); }

LinearizedMap monomial(const FieldCtx& ctx, Elem coeff, int k) {
    LinearizedMap m = zero_map(ctx);
    m.c[((k % ctx.n()) + ctx.n()) % ctx.n()] = coeff;
    return m;
}

Elem eval(const FieldCtx& ctx, const LinearizedMap& phi, Elem x) {
    Elem acc = ctx.zero();
    for (int i = 0; i < ctx.n(); ++i) {
        if (phi.c[i].v == 0) continue;
        acc = ctx.add(acc, ctx.mul(phi.c[i], ctx.frob(x, i)));
    }
    return acc;
}

LinearizedMap add(const FieldCtx& ctx, const LinearizedMap& a, const LinearizedMap& b) {
    LinearizedMap m = zero_map(ctx);
    for (int i = 0; i < ctx.n(); ++i) m.c[i] = ctx.add(a.c[i], b.c[i]);
    return m;
}

LinearizedMap sub(const FieldCtx& ctx, const LinearizedMap& a, const LinearizedMap& b) {
    LinearizedMap m = zero_map(ctx);
    for (int i = 0; i < ctx.n(); ++i) m.c[i] = ctx.sub(a.c[i], b.c[i]);
    return m;
}

LinearizedMap scale(const FieldCtx& ctx, Elem lambda, const LinearizedMap& a) {
    LinearizedMap m = zero_map(ctx);
    for (int i = 0; i < ctx.n(); ++i) m.c[i] = ctx.mul(lambda, a.c[i]);
    return m;
}

LinearizedMap compose(const FieldCtx& ctx, const LinearizedMap& phi, const LinearizedMap& psi) {
    const int n = ctx.n();
    LinearizedMap m = zero_map(ctx);
    for (int i = 0; i < n; ++i) {
        if (phi.c[i].v == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (psi.c[j].v == 0) continue;
            int k = i + j;
            if (k >= n) k -= n;
            m.c[k] = ctx.add(m.c[k], ctx.mul(phi.c[i], ctx.frob(psi.c[j], i)));
        }
    }
    return m;
}

LinearizedMap conjugate(const FieldCtx& ctx, const LinearizedMap& phi) {
    const int n = ctx.n();
    LinearizedMap m = zero_map(ctx);
    for (int i = 0; i < n; ++i) {
        if (phi.c[i].v == 0) continue;
        int j = (n - i) % n;
        m.c[j] = ctx.add(m.c[j], ctx.frob(phi.c[i], j));
    }
    return m;
}

std::vector<int> as_matrix(const FieldCtx& ctx, const LinearizedMap& phi) {
    const int n = ctx.n();
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) {
        // phi(e_j) = sum_i c_i e_j^{p^i}
        Elem v = ctx.zero();
        for (int i = 0; i < n; ++i) {
            if (phi.c[i].v == 0) continue;
            v = ctx.add(v, ctx.mul(phi.c[i], ctx.basis_frob(j, i)));
        }
        std::vector<int> col = ctx.coeffs(v);
        for (int r = 0; r < n; ++r) m[static_cast<std::size_t>(r) * n + j] = col[r];
    }
    return m;
}

int matrix_rank(const FieldCtx& ctx, std::vector<int> m) {
    const int n = ctx.n();
    const int p = ctx.p();
    auto inv_mod = [p](int a) {
        int r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (m[static_cast<std::size_t>(r) * n + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int c = 0; c < n; ++c)
                std::swap(m[static_cast<std::size_t>(piv) * n + c], m[static_cast<std::size_t>(rank) * n + c]);
        int pi = inv_mod(m[static_cast<std::size_t>(rank) * n + col]);
        for (int c = col; c < n; ++c)
            m[static_cast<std::size_t>(rank) * n + c] = m[static_cast<std::size_t>(rank) * n + c] * pi % p;
        for (int r = rank + 1; r < n; ++r) {
            int f = m[static_cast<std::size_t>(r) * n + col];
            if (f == 0) continue;
            for (int c = col; c < n; ++c) {
                int& t = m[static_cast<std::size_t>(r) * n + c];
                t = ((t - f * m[static_cast<std::size_t>(rank) * n + c]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

bool is_invertible(const FieldCtx& ctx, const LinearizedMap& phi) {
    return matrix_rank(ctx, as_matrix(ctx, phi)) == ctx.n();
}

LinearizedMap from_basis_images(const FieldCtx& ctx, const std::vector<Elem>& images) {
    const int n = ctx.n();
    const auto& minv = ctx.moore_inverse();
    LinearizedMap m = zero_map(ctx);
    for (int k = 0; k < n; ++k) {
        Elem acc = ctx.zero();
        for (int j = 0; j < n; ++j) acc = ctx.add(acc, ctx.mul(minv[k][j], images[j]));
        m.c[k] = acc;
    }
    return m;
}

std::optional<LinearizedMap> invert(const FieldCtx& ctx, const LinearizedMap& phi) {
    const int n = ctx.n();
    const int p = ctx.p();
    std::vector<int> a = as_matrix(ctx, phi);
    // Gauss-Jordan over F_p with an appended identity block
    std::vector<int> m(static_cast<std::size_t>(n) * 2 * n, 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r) * 2 * n + c] = a[static_cast<std::size_t>(r) * n + c];
        m[static_cast<std::size_t>(r) * 2 * n + n + r] = 1;
    }
    auto inv_mod = [p](int x) {
        int r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[static_cast<std::size_t>(r) * 2 * n + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int c = 0; c < 2 * n; ++c)
                std::swap(m[static_cast<std::size_t>(piv) * 2 * n + c], m[static_cast<std::size_t>(col) * 2 * n + c]);
        int pi = inv_mod(m[static_cast<std::size_t>(col) * 2 * n + col]);
        for (int c = 0; c < 2 * n; ++c)
            m[static_cast<std::size_t>(col) * 2 * n + c] = m[static_cast<std::size_t>(col) * 2 * n + c] * pi % p;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            int f = m[static_cast<std::size_t>(r) * 2 * n + col];
            if (f == 0) continue;
            for (int c = 0; c < 2 * n; ++c) {
                int& t = m[static_cast<std::size_t>(r) * 2 * n + c];
                t = ((t - f * m[static_cast<std::size_t>(col) * 2 * n + c]) % p + p) % p;
            }
        }
    }
    // column j of the inverse block = coordinates of phi^{-1}(e_j)
    std::vector<Elem> images(n);
    for (int j = 0; j < n; ++j) {
        std::vector<int> col(n);
        for (int r = 0; r < n; ++r) col[r] = m[static_cast<std::size_t>(r) * 2 * n + n + j];
        images[j] = ctx.from_coeffs(col);
    }
    return from_basis_images(ctx, images);
}

std::optional<int> semilinear_type(const FieldCtx& ctx, const LinearizedMap& L, int k) {
    auto Linv = invert(ctx, L);
    if (!Linv) fail(Err::Singular, "semilinear_type requires an invertible map");
    std::int64_t sub_order = 1;
    for (int i = 0; i < k; ++i) sub_order *= ctx.q();
    Elem lambda0 = ctx.pow(ctx.generator(), ctx.group_order() / (sub_order - 1));
    LinearizedMap lhs = compose(ctx, L, scalar_map(ctx, lambda0));
    for (int e = 0; e < ctx.n(); ++e) {
        LinearizedMap rhs = compose(ctx, scalar_map(ctx, ctx.frob(lambda0, e)), L);
        if (lhs == rhs) return e;
    }
    return std::nullopt;
}

} // namespace sforge::linpoly
