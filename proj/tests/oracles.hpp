#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <cstdint>
#include <random>
#include <vector>

#include "pf/padic.hpp"
#include "pf/symbols.hpp"

namespace pf::testing {

inline std::int64_t pow_i64(std::int64_t b, int n) {
    std::int64_t r = 1;
    while (n--) r *= b;
    return r;
}

/// Solvability of a x^2 + b y^2 = 1 over Q_p decided by brute-force search
/// modulo p^5 for Hensel-liftable solutions: x, y are allowed denominators
/// up to p (substitute x = X/p^j, y = Y/p^k, j,k in {0,1}), a residual zero
/// to 5 digits, and a partial derivative small enough for Newton to converge
/// (v(f) > 2 v(f')).
inline bool hilbert_solvable(std::int64_t p, std::int64_t a, std::int64_t b) {
    const int K = 5;
    const std::int64_t M = pow_i64(p, K);
    auto valmod = [&](std::int64_t x) {
        x = ((x % M) + M) % M;
        if (x == 0) return static_cast<std::int64_t>(K);
        std::int64_t v = 0;
        while (x % p == 0) { x /= p; ++v; }
        return v;
    };
    auto invmod = [&](std::int64_t x, std::int64_t m) {
        std::int64_t g0 = ((x % m) + m) % m, g1 = m, x0 = 1, x1 = 0;
        while (g1) {
            std::int64_t q = g0 / g1, t = g0 - q * g1;
            g0 = g1; g1 = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return ((x0 % m) + m) % m;
    };
    // sqrt of w mod p^n (w a unit square mod p), by digit brute force + Hensel
    auto sqrtmod = [&](std::int64_t w, int n) -> std::int64_t {
        std::int64_t mm = pow_i64(p, n);
        std::int64_t y = 0;
        for (std::int64_t c = 1; c < p; ++c)
            if ((c * c) % p == w % p) { y = c; break; }
        if (!y) return -1;
        int have = 1;
        while (have < n) {
            int nd = std::min(n, 2 * have);
            std::int64_t md = pow_i64(p, nd);
            y = (y + w % md * invmod(y, md)) % md * invmod(2, md) % md;
            have = nd;
        }
        return y % mm;
    };
    auto check_lift = [&](std::int64_t ca, std::int64_t cb, std::int64_t rhs, std::int64_t X,
                          std::int64_t Y) {
        std::int64_t fv = ((ca * ((X * X) % M) + cb * ((Y * Y) % M) - rhs) % M + M) % M;
        if (fv != 0) return false;
        std::int64_t dX = valmod(2 * ca % M * (X % M) % M);
        std::int64_t dY = valmod(2 * cb % M * (Y % M) % M);
        return K > 2 * std::min(dX, dY);
    };
    for (int j = 0; j <= 1; ++j)
        for (int k = 0; k <= 1; ++k) {
            // substitute x = X/p^j, y = Y/p^k and clear denominators:
            //   a p^{2(mx-j)} X^2 + b p^{2(mx-k)} Y^2 = p^{2mx}
            int mx = std::max(j, k);
            std::int64_t ca = (a % M) * pow_i64(p, 2 * (mx - j)) % M;
            std::int64_t cb = (b % M) * pow_i64(p, 2 * (mx - k)) % M;
            std::int64_t rhs = pow_i64(p, 2 * mx) % M;
            std::int64_t vb = valmod(cb);
            for (std::int64_t X = 0; X < M; ++X) {
                std::int64_t t = ((rhs - ca * ((X * X) % M)) % M + M) % M;
                if (t == 0) {
                    if (check_lift(ca, cb, rhs, X, 0)) return true;
                    continue;
                }
                std::int64_t vt = valmod(t);
                if (vt < vb) continue;
                int rem = static_cast<int>(K - vb);
                if (rem <= 0) continue;
                std::int64_t mrem = pow_i64(p, rem);
                std::int64_t w = (t / pow_i64(p, static_cast<int>(vb))) %
                                 mrem * invmod(cb / pow_i64(p, static_cast<int>(vb)), mrem) %
                                 mrem;
                if (w == 0) {
                    if (check_lift(ca, cb, rhs, X, 0)) return true;
                    continue;
                }
                std::int64_t vw = 0;
                std::int64_t wu = w;
                while (wu % p == 0) { wu /= p; ++vw; }
                if (vw % 2) continue;
                int digits = static_cast<int>(rem - vw);
                if (digits <= 0) continue;
                std::int64_t y0 = sqrtmod(wu, digits);
                if (y0 < 0) continue;
                std::int64_t Y = y0 % M * pow_i64(p, static_cast<int>(vw / 2)) % M;
                if (check_lift(ca, cb, rhs, X, Y)) return true;
                if (check_lift(ca, cb, rhs, X, (M - Y) % M)) return true;
            }
        }
    return false;
}

/// SquareClass of a small integer representative.
inline SquareClass class_of_int(std::int64_t p, std::int64_t n) {
    return PadicScalar(p, n).square_class();
}

/// Representative small integer of a square class: 1, u, p, u p with u the
/// smallest nonresidue mod p.
inline std::int64_t rep_of_class(std::int64_t p, const SquareClass& c) {
    Gf F(p, 1);
    std::int64_t u = F.nonsquare();
    std::int64_t r = (c.unit == UnitClass::nonsquare) ? u : 1;
    if (c.valParity) r *= p;
    return r;
}

/// Random integral unimodular matrix: a product of shears and swaps.
inline PadicMatrix random_unimodular(std::int64_t p, int n, std::mt19937_64& rng,
                                     int prec = kDefaultPrecision) {
    PadicMatrix g = PadicMatrix::identity(p, n, prec);
    std::uniform_int_distribution<int> pick(0, n - 1), coeff(-2, 2), op(0, 3);
    for (int step = 0; step < 3 * n + 2; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (op(rng) == 0) {
            for (int r = 0; r < n; ++r) std::swap(g.at(r, i), g.at(r, j));
        } else {
            std::int64_t c = coeff(rng);
            if (!c) continue;
            PadicScalar cs(p, c, prec);
            for (int r = 0; r < n; ++r) g.at(r, i) = g.at(r, i) + cs * g.at(r, j);
        }
    }
    return g;
}

/// Random diagonal with units in [1, p) and valuations in [0, maxval].
inline PadicMatrix random_diagonal(std::int64_t p, int n, int maxval, std::mt19937_64& rng,
                                   int prec = kDefaultPrecision) {
    PadicMatrix D(p, n, n, prec);
    std::uniform_int_distribution<std::int64_t> unit(1, p - 1);
    std::uniform_int_distribution<int> val(0, maxval);
    for (int i = 0; i < n; ++i)
        D.at(i, i) = PadicScalar(p, unit(rng) * pow_i64(p, val(rng)), prec);
    return D;
}

/// Random symmetric invertible matrix g^t D g (integral, nonzero det).
inline PadicMatrix random_symmetric(std::int64_t p, int n, int maxval, std::mt19937_64& rng,
                                    int prec = kDefaultPrecision) {
    PadicMatrix D = random_diagonal(p, n, maxval, rng, prec);
    PadicMatrix g = random_unimodular(p, n, rng, prec);
    return g.transpose() * D * g;
}

} // namespace pf::testing
