#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "pf/errors.hpp"

namespace pf {

/// Arithmetic in a small finite field F_{p^r} (p odd, q = p^r bounded by the
/// desk-scale uses: residue fields up to 13 and the F_{q^2} needed by the
/// finite GL2 layer). Elements are encoded as integers in [0, q): the base-p
/// digits are the coefficients of the polynomial basis 1, x, ..., x^{r-1}
/// modulo the lexicographically smallest monic irreducible of degree r.
class Gf {
public:
    Gf(std::int64_t p, int r);
    Gf(const Gf& o) : p_(o.p_), r_(o.r_), q_(o.q_), mod_(o.mod_), gen_(o.gen_.load()) {}
    Gf& operator=(const Gf& o) {
        p_ = o.p_; r_ = o.r_; q_ = o.q_; mod_ = o.mod_;
        gen_.store(o.gen_.load());
        return *this;
    }

    std::int64_t p() const { return p_; }
    int r() const { return r_; }
    std::int64_t q() const { return q_; }
    /// Modulus coefficients c_0..c_{r-1} of x^r + c_{r-1}x^{r-1} + ... + c_0.
    const std::vector<std::int64_t>& modulus() const { return mod_; }

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t inv(std::int64_t a) const;
    std::int64_t pow(std::int64_t a, std::int64_t n) const;

    std::int64_t zero() const { return 0; }
    std::int64_t one() const { return 1; }
    /// Image of the integer n under Z -> F_p -> F_q.
    std::int64_t from_int(std::int64_t n) const;

    /// A fixed generator of F_q^x (smallest in element encoding order).
    std::int64_t generator() const;
    /// Smallest non-square of F_q^x in encoding order.
    std::int64_t nonsquare() const;
    /// x in (F_q^x)^2, decided by x^((q-1)/2) == 1. Throws ZeroInput on 0.
    bool is_square(std::int64_t x) const;
    /// Discrete log against generator(); linear scan, fine at these sizes.
    std::int64_t dlog(std::int64_t x) const;

private:
    std::int64_t p_;
    int r_;
    std::int64_t q_;
    std::vector<std::int64_t> mod_;
    // lazily discovered; recomputation is idempotent, so a relaxed atomic
    // keeps concurrent readers safe without a lock
    mutable std::atomic<std::int64_t> gen_{-1};

    std::vector<std::int64_t> digits(std::int64_t a) const;
    std::int64_t undigits(const std::vector<std::int64_t>& d) const;
};

/// true iff q = p^r for an odd prime p; on success fills p and r.
bool odd_prime_power(std::int64_t q, std::int64_t& p, int& r);

} // namespace pf
