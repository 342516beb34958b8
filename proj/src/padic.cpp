#include "pf/padic.hpp"

#include <algorithm>

namespace pf {

namespace {

std::int64_t pow_i64(std::int64_t p, int n) {
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) r *= p;
    return r;
}

// largest d with p^d < 2^62, so that unit parts stay in int64
int max_digits(std::int64_t p) {
    std::int64_t lim = INT64_C(1) << 62, r = 1;
    int d = 0;
    while (r < lim / p) { r *= p; ++d; }
    return d;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
    // extended Euclid; a coprime to m
    std::int64_t g0 = a % m, g1 = m, x0 = 1, x1 = 0;
    while (g1) {
        std::int64_t q = g0 / g1;
        std::int64_t t = g0 - q * g1; g0 = g1; g1 = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return ((x0 % m) + m) % m;
}

} // namespace

int max_precision(std::int64_t p) { return max_digits(p); }

PadicScalar::PadicScalar(std::int64_t p, std::int64_t value, int prec)
    : p_(p), prec_(prec) {
    if (p < 3 || p % 2 == 0) throw Error("PadicScalar: p must be an odd prime");
    if (prec < 1) throw Error("PadicScalar: precision must be >= 1");
    if (prec > max_digits(p)) throw Error("PadicScalar: precision too large for this p");
    if (value == 0) { zero_like_ = true; cap_ = kExactZeroCap; unit_ = 0; return; }
    bool negv = value < 0;
    std::int64_t v = negv ? -value : value;
    val_ = 0;
    while (v % p == 0) { v /= p; ++val_; }
    std::int64_t m = pow_i64(p, prec);
    unit_ = v % m;
    if (negv) unit_ = (m - unit_) % m;
    zero_like_ = false;
}

PadicScalar PadicScalar::from_unit(std::int64_t p, std::int64_t val, std::int64_t unit, int prec) {
    if (prec < 1) throw Error("PadicScalar: precision must be >= 1");
    if (prec > max_digits(p)) throw Error("PadicScalar: precision too large for this p");
    std::int64_t m = pow_i64(p, prec);
    unit = ((unit % m) + m) % m;
    if (unit % p == 0) throw Error("PadicScalar::from_unit: unit part divisible by p");
    PadicScalar s;
    s.p_ = p; s.val_ = val; s.unit_ = unit; s.prec_ = prec; s.zero_like_ = false; s.cap_ = 0;
    return s;
}

PadicScalar PadicScalar::exact_zero(std::int64_t p, int prec) {
    PadicScalar s;
    s.p_ = p; s.prec_ = prec; s.zero_like_ = true; s.cap_ = kExactZeroCap; s.unit_ = 0;
    return s;
}

PadicScalar PadicScalar::zero_to(std::int64_t p, std::int64_t cap, int prec) {
    PadicScalar s;
    s.p_ = p; s.prec_ = prec; s.zero_like_ = true; s.cap_ = cap; s.unit_ = 0;
    return s;
}

bool PadicScalar::is_exact_zero() const { return zero_like_ && cap_ >= kExactZeroCap; }

std::int64_t PadicScalar::valuation() const {
    if (zero_like_)
        throw PrecisionExhausted("valuation of a value indistinguishable from zero (O(p^" +
                                 std::to_string(cap_ >= kExactZeroCap ? -1 : cap_) + "))");
    return val_;
}

std::int64_t PadicScalar::valuation_bound() const { return zero_like_ ? cap_ : val_; }

std::int64_t PadicScalar::unit() const {
    if (zero_like_) throw PrecisionExhausted("unit part of a zero-like value");
    return unit_;
}

std::int64_t PadicScalar::residue() const { return unit() % p_; }

SquareClass PadicScalar::square_class() const {
    std::int64_t r = residue();
    ResidueField k(p_);
    return SquareClass(static_cast<int>(((val_ % 2) + 2) % 2),
                       isSquareResidue(k, r) ? UnitClass::square : UnitClass::nonsquare);
}

PadicScalar PadicScalar::operator-() const {
    if (zero_like_) return *this;
    PadicScalar s = *this;
    std::int64_t m = pow_i64(p_, prec_);
    s.unit_ = (m - unit_) % m;
    return s;
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    if (zero_like_ && o.zero_like_)
        return zero_to(p_, std::min(cap_, o.cap_), std::min(prec_, o.prec_));
    if (zero_like_ || o.zero_like_) {
        const PadicScalar& z = zero_like_ ? *this : o;
        const PadicScalar& x = zero_like_ ? o : *this;
        if (z.cap_ >= kExactZeroCap) return x;
        if (x.val_ >= z.cap_) return zero_to(p_, z.cap_, std::min(prec_, o.prec_));
        // digits of x beyond the cap are unknown
        std::int64_t digits = z.cap_ - x.val_;
        return x.truncated(static_cast<int>(std::min<std::int64_t>(digits, x.prec_)));
    }
    const PadicScalar& lo = (val_ <= o.val_) ? *this : o;
    const PadicScalar& hi = (val_ <= o.val_) ? o : *this;
    std::int64_t shift = hi.val_ - lo.val_;
    // absolute precision of the sum
    std::int64_t abs1 = lo.val_ + lo.prec_, abs2 = hi.val_ + hi.prec_;
    std::int64_t absr = std::min(abs1, abs2);
    std::int64_t digits = absr - lo.val_;  // >= 1 unless shift >= lo.prec_
    if (digits <= 0) return lo.truncated(lo.prec_);  // other operand entirely below precision
    int R = static_cast<int>(std::min<std::int64_t>(digits, lo.prec_));
    std::int64_t m = pow_i64(p_, R);
    std::int64_t a = lo.unit_ % m;
    std::int64_t b = (shift >= R) ? 0 : mulmod(hi.unit_ % m, pow_i64(p_, static_cast<int>(shift)), m);
    std::int64_t s = (a + b) % m;
    if (s == 0) return zero_to(p_, lo.val_ + R, std::min(prec_, o.prec_));
    std::int64_t v = 0;
    while (s % p_ == 0) { s /= p_; ++v; }
    PadicScalar r;
    r.p_ = p_; r.zero_like_ = false; r.val_ = lo.val_ + v;
    r.prec_ = static_cast<int>(R - v);
    r.unit_ = s % pow_i64(p_, r.prec_);
    r.cap_ = 0;
    return r;
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    if (zero_like_ || o.zero_like_) {
        if (is_exact_zero() || o.is_exact_zero()) return exact_zero(p_, std::max(prec_, o.prec_));
        std::int64_t cap = valuation_bound() + o.valuation_bound();
        return zero_to(p_, std::min(cap, kExactZeroCap), std::min(prec_, o.prec_));
    }
    PadicScalar r;
    r.p_ = p_; r.zero_like_ = false; r.val_ = val_ + o.val_;
    r.prec_ = std::min(prec_, o.prec_);
    std::int64_t m = pow_i64(p_, r.prec_);
    r.unit_ = mulmod(unit_ % m, o.unit_ % m, m);
    r.cap_ = 0;
    return r;
}

PadicScalar PadicScalar::inv() const {
    if (zero_like_) throw PrecisionExhausted("inverse of a value indistinguishable from zero");
    PadicScalar r;
    r.p_ = p_; r.zero_like_ = false; r.val_ = -val_; r.prec_ = prec_;
    std::int64_t m = pow_i64(p_, prec_);
    r.unit_ = invmod(unit_, m);
    r.cap_ = 0;
    return r;
}

PadicScalar PadicScalar::operator/(const PadicScalar& o) const { return *this * o.inv(); }

PadicScalar PadicScalar::sqrt() const {
    if (zero_like_) {
        if (is_exact_zero()) return *this;
        throw PrecisionExhausted("sqrt of a value indistinguishable from zero");
    }
    if (val_ % 2 != 0) throw SqrtOfNonSquare("sqrt: odd valuation");
    ResidueField k(p_);
    if (!isSquareResidue(k, unit_ % p_)) throw SqrtOfNonSquare("sqrt: unit part is a non-residue");
    // first digit by brute force, then Hensel (Newton) lifting
    std::int64_t x = 0;
    for (std::int64_t c = 1; c < p_; ++c)
        if ((c * c) % p_ == unit_ % p_) { x = c; break; }
    int digits = 1;
    while (digits < prec_) {
        int nd = std::min(prec_, 2 * digits);
        std::int64_t m = pow_i64(p_, nd);
        // x <- (x + u/x)/2 mod p^nd
        std::int64_t xinv = invmod(x % m, m);
        std::int64_t t = (x % m + mulmod(unit_ % m, xinv, m)) % m;
        x = mulmod(t, invmod(2, m), m);
        digits = nd;
    }
    std::int64_t m = pow_i64(p_, prec_);
    if (x % p_ > (p_ - 1) / 2) x = (m - x) % m;  // canonical branch
    PadicScalar r;
    r.p_ = p_; r.zero_like_ = false; r.val_ = val_ / 2; r.prec_ = prec_; r.unit_ = x; r.cap_ = 0;
    return r;
}

bool PadicScalar::eq(const PadicScalar& o) const {
    PadicScalar d = *this - o;
    if (d.zero_like_) return true;
    return false;
}

PadicScalar PadicScalar::truncated(int n) const {
    if (zero_like_) return *this;
    if (n < 1) throw PrecisionExhausted("truncation to zero digits");
    PadicScalar r = *this;
    r.prec_ = std::min(prec_, n);
    r.unit_ = unit_ % pow_i64(p_, r.prec_);
    return r;
}

PadicMatrix::PadicMatrix(std::int64_t p, int rows, int cols, int prec)
    : p_(p), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, PadicScalar::exact_zero(p, prec)) {}

PadicMatrix PadicMatrix::identity(std::int64_t p, int n, int prec) {
    PadicMatrix m(p, n, n, prec);
    for (int i = 0; i < n; ++i) m.at(i, i) = PadicScalar(p, 1, prec);
    return m;
}

int PadicMatrix::working_precision() const {
    int prec = 1;
    for (const auto& x : a_) prec = std::max(prec, x.precision());
    return prec;
}

PadicMatrix PadicMatrix::transpose() const {
    PadicMatrix t(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

PadicMatrix PadicMatrix::operator*(const PadicMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
    PadicMatrix r(p_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            PadicScalar s = PadicScalar::exact_zero(p_);
            for (int k = 0; k < cols_; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

PadicMatrix PadicMatrix::operator+(const PadicMatrix& o) const {
    PadicMatrix r(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
    return r;
}

PadicMatrix PadicMatrix::operator-(const PadicMatrix& o) const {
    PadicMatrix r(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

PadicMatrix PadicMatrix::scaled(const PadicScalar& c) const {
    PadicMatrix r(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * c;
    return r;
}

bool PadicMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (!at(i, j).eq(at(j, i))) return false;
    return true;
}

bool PadicMatrix::is_zero_to(std::int64_t cap) const {
    for (const auto& x : a_)
        if (x.valuation_bound() < cap) return false;
    return true;
}

PadicScalar PadicMatrix::det() const {
    if (rows_ != cols_) throw DimensionMismatch("det of non-square matrix");
    PadicMatrix M = *this;
    int n = rows_;
    PadicScalar d(p_, 1, working_precision());
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        std::int64_t best = PadicScalar::exact_zero_cap();
        for (int r = c; r < n; ++r) {
            const PadicScalar& x = M.at(r, c);
            if (!x.is_zero_like() && x.valuation() < best) { best = x.valuation(); piv = r; }
        }
        if (piv < 0) {
            bool exact = true;
            for (int r = c; r < n; ++r) exact = exact && M.at(r, c).is_exact_zero();
            if (exact) return PadicScalar::exact_zero(p_);
            throw PrecisionExhausted("det: pivot column indistinguishable from zero");
        }
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
            sign = -sign;
        }
        PadicScalar pinv = M.at(c, c).inv();
        for (int r = c + 1; r < n; ++r) {
            if (M.at(r, c).is_zero_like()) continue;
            PadicScalar f = M.at(r, c) * pinv;
            for (int j = c; j < n; ++j) M.at(r, j) = M.at(r, j) - f * M.at(c, j);
        }
        d = d * M.at(c, c);
    }
    if (sign < 0) d = -d;
    return d;
}

std::vector<PadicScalar> PadicMatrix::solve(const std::vector<PadicScalar>& b) const {
    if (rows_ != cols_ || static_cast<int>(b.size()) != rows_)
        throw DimensionMismatch("solve shape");
    PadicMatrix M = *this;
    std::vector<PadicScalar> y = b;
    int n = rows_;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        std::int64_t best = PadicScalar::exact_zero_cap();
        for (int r = c; r < n; ++r) {
            const PadicScalar& x = M.at(r, c);
            if (!x.is_zero_like() && x.valuation() < best) { best = x.valuation(); piv = r; }
        }
        if (piv < 0) throw SingularMatrix("solve: singular (or precision exhausted)");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
            std::swap(y[piv], y[c]);
        }
        PadicScalar pinv = M.at(c, c).inv();
        for (int r = 0; r < n; ++r) {
            if (r == c || M.at(r, c).is_zero_like()) continue;
            PadicScalar f = M.at(r, c) * pinv;
            for (int j = c; j < n; ++j) M.at(r, j) = M.at(r, j) - f * M.at(c, j);
            y[r] = y[r] - f * y[c];
        }
    }
    std::vector<PadicScalar> x(n, PadicScalar::exact_zero(p_));
    for (int i = 0; i < n; ++i) x[i] = y[i] / M.at(i, i);
    return x;
}

PadicMatrix PadicMatrix::inverse() const {
    int n = rows_;
    PadicMatrix inv(p_, n, n);
    int prec = working_precision();
    for (int j = 0; j < n; ++j) {
        std::vector<PadicScalar> e(n, PadicScalar::exact_zero(p_, prec));
        e[j] = PadicScalar(p_, 1, prec);
        auto col = solve(e);
        for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    return inv;
}

DiagonalizeResult diagonalize(const PadicMatrix& A) {
    if (!A.is_symmetric()) throw Error("diagonalize: matrix not symmetric");
    const std::int64_t p = A.p();
    const int n = A.rows();
    const int prec = A.working_precision();
    PadicMatrix M = A;
    PadicMatrix g = PadicMatrix::identity(p, n, prec);

    // column operation col_i += c * col_j applied congruently (rows too)
    auto add_into = [&](PadicMatrix& X, int i, int j, const PadicScalar& c) {
        for (int r = 0; r < n; ++r) X.at(r, i) = X.at(r, i) + c * X.at(r, j);
        for (int r = 0; r < n; ++r) X.at(i, r) = X.at(i, r) + c * X.at(j, r);
    };
    auto g_add = [&](int i, int j, const PadicScalar& c) {
        for (int r = 0; r < n; ++r) g.at(r, i) = g.at(r, i) + c * g.at(r, j);
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(M.at(r, i), M.at(r, j));
        for (int r = 0; r < n; ++r) std::swap(M.at(i, r), M.at(j, r));
        for (int r = 0; r < n; ++r) std::swap(g.at(r, i), g.at(r, j));
    };

    for (int k = 0; k < n; ++k) {
        // find minimal valuation in the trailing block
        std::int64_t best = PadicScalar::exact_zero_cap();
        int bi = -1, bj = -1;
        for (int i = k; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const PadicScalar& x = M.at(i, j);
                if (!x.is_zero_like() && x.valuation() < best) {
                    best = x.valuation(); bi = i; bj = j;
                }
            }
        if (bi < 0) {
            bool exact = true;
            for (int i = k; i < n; ++i)
                for (int j = i; j < n; ++j) exact = exact && M.at(i, j).is_exact_zero();
            if (exact) throw SingularMatrix("diagonalize: singular input");
            throw PrecisionExhausted("diagonalize: trailing block indistinguishable from zero");
        }
        // ensure a diagonal entry attains the minimum
        bool diag_min = false;
        for (int i = k; i < n; ++i)
            if (!M.at(i, i).is_zero_like() && M.at(i, i).valuation() == best) {
                bi = bj = i; diag_min = true; break;
            }
        if (!diag_min) {
            PadicScalar one(p, 1, prec);
            add_into(M, bi, bj, one);  // row/col j into i; 2*a_ij now leads
            g_add(bi, bj, one);
            bj = bi;
        }
        if (bi != k) swap_cols(k, bi);
        PadicScalar pivinv = M.at(k, k).inv();
        for (int j = k + 1; j < n; ++j) {
            if (M.at(k, j).is_zero_like()) continue;
            PadicScalar c = -(M.at(k, j) * pivinv);
            add_into(M, j, k, c);
            g_add(j, k, c);
        }
    }
    DiagonalizeResult res;
    res.diag.reserve(n);
    for (int i = 0; i < n; ++i) res.diag.push_back(M.at(i, i));
    res.transform = g;
    return res;
}

} // namespace pf
