#include "pf/gf.hpp"

namespace pf {

namespace {

std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& b,
                                   std::int64_t p) {
    // b monic
    while (true) {
        while (!a.empty() && a.back() % p == 0) a.pop_back();
        if (a.size() < b.size()) break;
        std::int64_t c = a.back() % p;
        std::size_t sh = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[sh + i] = ((a[sh + i] - c * b[i]) % p + p) % p;
    }
    for (auto& x : a) x = ((x % p) + p) % p;
    return a;
}

bool poly_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p) {
    // poly monic of degree r; trial division by all monic polys of degree <= r/2
    int r = static_cast<int>(poly.size()) - 1;
    for (int deg = 1; deg <= r / 2; ++deg) {
        std::int64_t count = 1;
        for (int i = 0; i < deg; ++i) count *= p;
        for (std::int64_t t = 0; t < count; ++t) {
            std::vector<std::int64_t> d(deg + 1, 0);
            std::int64_t tt = t;
            for (int i = 0; i < deg; ++i) { d[i] = tt % p; tt /= p; }
            d[deg] = 1;
            auto rem = poly_mod(poly, d, p);
            bool zero = true;
            for (auto x : rem) if (x % p != 0) { zero = false; break; }
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

bool odd_prime_power(std::int64_t q, std::int64_t& p, int& r) {
    if (q < 3 || q % 2 == 0) return false;
    std::int64_t d = 3;
    while (d * d <= q && q % d != 0) d += 2;
    p = (d * d <= q) ? d : q;
    std::int64_t m = q;
    r = 0;
    while (m % p == 0) { m /= p; ++r; }
    return m == 1;
}

Gf::Gf(std::int64_t p, int r) : p_(p), r_(r) {
    if (p < 3 || p % 2 == 0) throw Error("Gf: p must be an odd prime");
    q_ = 1;
    for (int i = 0; i < r; ++i) q_ *= p;
    if (r == 1) {
        mod_ = {0};
        return;
    }
    // lexicographically smallest monic irreducible x^r + c_{r-1}x^{r-1}+...+c_0
    std::int64_t count = q_;
    for (std::int64_t t = 0; t < count; ++t) {
        std::vector<std::int64_t> cand(r + 1, 0);
        std::int64_t tt = t;
        for (int i = 0; i < r; ++i) { cand[i] = tt % p; tt /= p; }
        cand[r] = 1;
        if (poly_irreducible(cand, p)) {
            mod_.assign(cand.begin(), cand.end() - 1);
            return;
        }
    }
    throw NoIrreduciblePolynomial("Gf: no irreducible polynomial found (bug)");
}

std::vector<std::int64_t> Gf::digits(std::int64_t a) const {
    std::vector<std::int64_t> d(r_, 0);
    for (int i = 0; i < r_; ++i) { d[i] = a % p_; a /= p_; }
    return d;
}

std::int64_t Gf::undigits(const std::vector<std::int64_t>& d) const {
    std::int64_t a = 0;
    for (int i = r_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
}

std::int64_t Gf::add(std::int64_t a, std::int64_t b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < r_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da);
}

std::int64_t Gf::sub(std::int64_t a, std::int64_t b) const { return add(a, neg(b)); }

std::int64_t Gf::neg(std::int64_t a) const {
    auto d = digits(a);
    for (auto& x : d) x = (p_ - x) % p_;
    return undigits(d);
}

std::int64_t Gf::mul(std::int64_t a, std::int64_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::int64_t> prod(2 * r_ - 1, 0);
    for (int i = 0; i < r_; ++i)
        if (da[i])
            for (int j = 0; j < r_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (int k = 2 * r_ - 2; k >= r_; --k) {
        std::int64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (int i = 0; i < r_; ++i)
            prod[k - r_ + i] = ((prod[k - r_ + i] - c * mod_[i]) % p_ + p_) % p_;
    }
    prod.resize(r_);
    return undigits(prod);
}

std::int64_t Gf::pow(std::int64_t a, std::int64_t n) const {
    std::int64_t res = 1, base = a;
    n %= (q_ - 1);
    if (n < 0) n += q_ - 1;
    while (n) {
        if (n & 1) res = mul(res, base);
        base = mul(base, base);
        n >>= 1;
    }
    return res;
}

std::int64_t Gf::inv(std::int64_t a) const {
    if (a == 0) throw ZeroInput("Gf::inv of zero");
    return pow(a, q_ - 2);
}

std::int64_t Gf::from_int(std::int64_t n) const {
    std::int64_t x = ((n % p_) + p_) % p_;
    return x;
}

std::int64_t Gf::generator() const {
    std::int64_t cached = gen_.load(std::memory_order_relaxed);
    if (cached >= 0) return cached;
    for (std::int64_t a = 1; a < q_; ++a) {
        std::int64_t x = a, order = 1;
        while (x != 1) { x = mul(x, a); ++order; }
        if (order == q_ - 1) {
            gen_.store(a, std::memory_order_relaxed);
            return a;
        }
    }
    throw Error("Gf::generator: none found (bug)");
}

std::int64_t Gf::nonsquare() const {
    for (std::int64_t a = 2; a < q_; ++a)
        if (!is_square(a)) return a;
    throw Error("Gf::nonsquare: none found (bug)");
}

bool Gf::is_square(std::int64_t x) const {
    if (x == 0) throw ZeroInput("Gf::is_square of zero");
    return pow(x, (q_ - 1) / 2) == 1;
}

std::int64_t Gf::dlog(std::int64_t x) const {
    if (x == 0) throw ZeroInput("Gf::dlog of zero");
    std::int64_t g = generator(), y = 1;
    for (std::int64_t k = 0; k < q_ - 1; ++k) {
        if (y == x) return k;
        y = mul(y, g);
    }
    throw Error("Gf::dlog: not found (bug)");
}

} // namespace pf
