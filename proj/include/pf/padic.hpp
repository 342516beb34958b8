#pragma once

#include <cstdint>
#include <vector>

#include "pf/errors.hpp"
#include "pf/symbols.hpp"

namespace pf {

/// Default working precision: 12 p-adic digits. Every acceptance computation
/// needs at most 6; the rest is slack. Overridable per value and via the
/// FORMS_PRECISION env variable at the CLI layer.
inline constexpr int kDefaultPrecision = 12;

/// Largest number of digits whose unit parts still fit in int64 for this p.
int max_precision(std::int64_t p);

/// A finite-precision element of Q_p, p odd, in capped-relative form:
///   nonzero:   p^val * (unit + O(p^prec)),  unit a unit mod p^prec
///   zero-like: O(p^cap) -- all digits cancelled; only a valuation lower
///              bound is known. Exact zero has cap = +infinity (sentinel).
/// Arithmetic never reports more digits than the inputs justify: addition
/// may lose digits to cancellation (recorded in the result), multiplication
/// and inversion preserve relative precision.
class PadicScalar {
public:
    PadicScalar() = default;
    /// Exact integer (or p-power-denominator rational via val shifts).
    PadicScalar(std::int64_t p, std::int64_t value, int prec = kDefaultPrecision);
    static PadicScalar from_unit(std::int64_t p, std::int64_t val, std::int64_t unit,
                                 int prec = kDefaultPrecision);
    static PadicScalar exact_zero(std::int64_t p, int prec = kDefaultPrecision);
    /// Zero to absolute precision p^cap.
    static PadicScalar zero_to(std::int64_t p, std::int64_t cap, int prec = kDefaultPrecision);

    std::int64_t p() const { return p_; }
    bool is_zero_like() const { return zero_like_; }
    bool is_exact_zero() const;
    /// Exact valuation. Throws PrecisionExhausted on a zero-like value
    /// (indistinguishable from zero at this precision).
    std::int64_t valuation() const;
    /// Lower bound on the valuation (= valuation when not zero-like).
    std::int64_t valuation_bound() const;
    /// Unit part mod p^prec. Throws PrecisionExhausted on zero-like.
    std::int64_t unit() const;
    int precision() const { return prec_; }
    /// First digit of the unit part (residue mod p).
    std::int64_t residue() const;
    /// Class in Q_p^x / squares. Throws PrecisionExhausted on zero-like.
    SquareClass square_class() const;

    PadicScalar operator-() const;
    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const;
    PadicScalar inv() const;
    /// Canonical square root: the lift whose first digit lies in
    /// {1, ..., (p-1)/2}. Throws SqrtOfNonSquare / PrecisionExhausted.
    PadicScalar sqrt() const;

    /// Equal to given precision (both zero-like counts as equal).
    bool eq(const PadicScalar& o) const;

    /// Truncate known digits to at most n.
    PadicScalar truncated(int n) const;

private:
    std::int64_t p_ = 3;
    std::int64_t val_ = 0;
    std::int64_t unit_ = 0;      // 0 iff zero_like_
    int prec_ = kDefaultPrecision;
    bool zero_like_ = true;
    std::int64_t cap_ = kExactZeroCap;

    static constexpr std::int64_t kExactZeroCap = INT64_C(1) << 62;

public:
    static constexpr std::int64_t exact_zero_cap() { return kExactZeroCap; }
};

/// Dense matrix over Q_p. Value semantics; entries carry their own precision.
class PadicMatrix {
public:
    PadicMatrix() = default;
    PadicMatrix(std::int64_t p, int rows, int cols, int prec = kDefaultPrecision);
    static PadicMatrix identity(std::int64_t p, int n, int prec = kDefaultPrecision);

    std::int64_t p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    PadicScalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const PadicScalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    /// Max precision field across entries; integer literals created inside
    /// matrix algorithms adopt this so they never cap the data.
    int working_precision() const;

    PadicMatrix transpose() const;
    PadicMatrix operator*(const PadicMatrix& o) const;
    PadicMatrix operator+(const PadicMatrix& o) const;
    PadicMatrix operator-(const PadicMatrix& o) const;
    PadicMatrix scaled(const PadicScalar& c) const;
    bool is_symmetric() const;
    /// max over entries of (entry is zero-like ? cap : valuation); the whole
    /// matrix is zero to this absolute precision if all entries are.
    bool is_zero_to(std::int64_t cap) const;

    /// Determinant by p-adic LU with minimal-valuation pivoting.
    PadicScalar det() const;
    /// Solve A x = b (A square invertible).
    std::vector<PadicScalar> solve(const std::vector<PadicScalar>& b) const;
    PadicMatrix inverse() const;

private:
    std::int64_t p_ = 3;
    int rows_ = 0, cols_ = 0;
    std::vector<PadicScalar> a_;
};

struct DiagonalizeResult {
    std::vector<PadicScalar> diag;
    PadicMatrix transform;  // g with g^t A g = diag, g in GL(Z_p)
};

/// Symmetric congruence diagonalization by integral row/column operations
/// with unit pivots: pivot on a minimal-valuation entry; if the minimum
/// occurs only off-diagonal at (i,j), first add row/column j into i (char != 2
/// guarantees a diagonal entry then attains the minimum). The returned g is
/// integral with unit determinant, so the GL(o)-orbit is preserved.
DiagonalizeResult diagonalize(const PadicMatrix& A);

} // namespace pf
