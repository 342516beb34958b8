#include "pf/finitegl.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace pf {

namespace {

// exact division of integer polynomials (num divisible by den, den monic-ish)
std::vector<std::int64_t> polydiv_exact(std::vector<std::int64_t> num,
                                        const std::vector<std::int64_t>& den) {
    std::vector<std::int64_t> out(num.size() - den.size() + 1, 0);
    while (num.size() >= den.size()) {
        std::int64_t c = num.back() / den.back();
        std::size_t sh = num.size() - den.size();
        out[sh] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[sh + i] -= c * den[i];
        while (!num.empty() && num.back() == 0) num.pop_back();
        if (num.empty()) break;
    }
    return out;
}

std::vector<std::int64_t> cyclotomic_poly(std::int64_t n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) poly = polydiv_exact(poly, cyclotomic_poly(d));
    return poly;
}

} // namespace

CycInt CycInt::zeta_pow(std::int64_t L, std::int64_t k) {
    CycInt z(L);
    k %= L;
    if (k < 0) k += L;
    z.c_[k] = 1;
    return z;
}

CycInt CycInt::integer(std::int64_t L, std::int64_t n) {
    CycInt z(L);
    z.c_[0] = n;
    return z;
}

CycInt CycInt::operator+(const CycInt& o) const {
    CycInt r(L_);
    for (std::int64_t i = 0; i < L_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    CycInt r(L_);
    for (std::int64_t i = 0; i < L_; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    CycInt r(L_);
    for (std::int64_t i = 0; i < L_; ++i) {
        if (!c_[i]) continue;
        for (std::int64_t j = 0; j < L_; ++j) {
            if (!o.c_[j]) continue;
            r.c_[(i + j) % L_] += c_[i] * o.c_[j];
        }
    }
    return r;
}

CycInt CycInt::scaled(std::int64_t s) const {
    CycInt r(L_);
    for (std::int64_t i = 0; i < L_; ++i) r.c_[i] = c_[i] * s;
    return r;
}

CycInt CycInt::conj() const {
    CycInt r(L_);
    for (std::int64_t i = 0; i < L_; ++i) r.c_[(L_ - i) % L_] = c_[i];
    return r;
}

std::optional<std::int64_t> CycInt::to_integer() const {
    static std::mutex cache_mutex;
    static std::map<std::int64_t, std::vector<std::int64_t>> cache;
    std::vector<std::int64_t> phi;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(L_);
        if (it == cache.end()) it = cache.emplace(L_, cyclotomic_poly(L_)).first;
        phi = it->second;
    }
    std::vector<std::int64_t> v = c_;
    while (v.size() >= phi.size()) {
        std::int64_t c = v.back();
        if (c) {
            std::size_t sh = v.size() - phi.size();
            for (std::size_t i = 0; i < phi.size(); ++i) v[sh + i] -= c * phi[i];
        }
        v.pop_back();
    }
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    if (v.size() == 1) return v[0];
    return std::nullopt;
}

namespace {
Gf make_field(std::int64_t q, int ext) {
    std::int64_t p;
    int r;
    if (!odd_prime_power(q, p, r)) throw Error("Gl2: q must be an odd prime power");
    return Gf(p, r * ext);
}
} // namespace

Gl2::Gl2(std::int64_t q) : Fq_(make_field(q, 1)), Fq2_(make_field(q, 2)) {
    std::int64_t p;
    int r;
    odd_prime_power(q, p, r);
    // embed F_q into F_{q^2}: both are generated over F_p by their modulus
    // roots; map the F_q generator wq to an element of F_{q^2} with the same
    // minimal polynomial (a root of the F_q modulus in F_{q^2})
    emb_.assign(q, 0);
    if (r == 1) {
        for (std::int64_t a = 0; a < q; ++a) emb_[a] = a;  // prime field: digits agree
    } else {
        // find a root of the degree-r modulus of F_q inside F_{q^2}
        const auto& mod = Fq_.modulus();
        std::int64_t root = -1;
        for (std::int64_t x = 0; x < Fq2_.q(); ++x) {
            std::int64_t acc = 0, xp = 1;
            for (int i = 0; i < r; ++i) {
                acc = Fq2_.add(acc, Fq2_.mul(Fq2_.from_int(mod[i]), xp));
                xp = Fq2_.mul(xp, x);
            }
            acc = Fq2_.add(acc, xp);  // + x^r
            if (acc == 0) { root = x; break; }
        }
        if (root < 0) throw Error("Gl2: no embedding root (bug)");
        for (std::int64_t a = 0; a < q; ++a) {
            // a = sum digit_i * wq^i -> sum digit_i * root^i
            std::int64_t acc = 0, rp = 1, aa = a;
            for (int i = 0; i < r; ++i) {
                std::int64_t digit = aa % p;
                aa /= p;
                acc = Fq2_.add(acc, Fq2_.mul(Fq2_.from_int(digit), rp));
                rp = Fq2_.mul(rp, root);
            }
            emb_[a] = acc;
        }
    }
    for (std::int64_t a = 0; a < q; ++a)
        for (std::int64_t b = 0; b < q; ++b)
            for (std::int64_t c = 0; c < q; ++c)
                for (std::int64_t d = 0; d < q; ++d) {
                    Mat2 m{a, b, c, d};
                    if (det(m) != 0) elems_.push_back(m);
                }
}

Mat2 Gl2::mul(const Mat2& a, const Mat2& b) const {
    const Gf& F = Fq_;
    return {F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])),
            F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
            F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])),
            F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3]))};
}

std::int64_t Gl2::det(const Mat2& a) const {
    return Fq_.sub(Fq_.mul(a[0], a[3]), Fq_.mul(a[1], a[2]));
}

Mat2 Gl2::inverse(const Mat2& a) const {
    std::int64_t di = Fq_.inv(det(a));
    return {Fq_.mul(di, a[3]), Fq_.mul(di, Fq_.neg(a[1])),
            Fq_.mul(di, Fq_.neg(a[2])), Fq_.mul(di, a[0])};
}

std::int64_t Gl2::embed(std::int64_t a) const { return emb_[a]; }

Gl2Class Gl2::class_of(const Mat2& g) const {
    const Gf& F = Fq_;
    std::int64_t tr = F.add(g[0], g[3]);
    std::int64_t dt = det(g);
    std::int64_t disc = F.sub(F.mul(tr, tr), F.mul(F.from_int(4), dt));
    std::int64_t half = F.inv(F.from_int(2));
    if (disc == 0) {
        std::int64_t lam = F.mul(tr, half);
        if (g[1] == 0 && g[2] == 0 && g[0] == g[3]) return {Gl2Class::central, lam, 0};
        return {Gl2Class::jordan, lam, 0};
    }
    if (F.is_square(disc)) {
        std::int64_t s = 0;
        for (std::int64_t x = 1; x < F.q(); ++x)
            if (F.mul(x, x) == disc) { s = x; break; }
        std::int64_t l1 = F.mul(F.add(tr, s), half);
        std::int64_t l2 = F.mul(F.sub(tr, s), half);
        if (l2 < l1) std::swap(l1, l2);
        return {Gl2Class::split, l1, l2};
    }
    // elliptic: eigenvalue (tr + sqrt(disc))/2 in F_{q^2}, keyed by the
    // Frobenius orbit of its dlog
    std::int64_t disc2 = embed(disc);
    std::int64_t sd = 0;
    for (std::int64_t x = 1; x < Fq2_.q(); ++x)
        if (Fq2_.mul(x, x) == disc2) { sd = x; break; }
    std::int64_t half2 = Fq2_.inv(Fq2_.from_int(2));
    std::int64_t ev = Fq2_.mul(Fq2_.add(embed(tr), sd), half2);
    std::int64_t j = Fq2_.dlog(ev);
    std::int64_t L = Fq2_.q() - 1;
    std::int64_t jq = (j * q()) % L;
    return {Gl2Class::elliptic, std::min(j, jq), 0};
}

Mat2 Gl2::elliptic_generator() const {
    // multiplication by the F_{q^2} generator on the basis {1, w2}: columns
    // are the coordinates of g2*1 and g2*w2 over F_q
    std::int64_t g2 = Fq2_.generator();
    // coordinates: x in F_{q^2} = a + b w2 with a, b in F_q (w2 = class of x
    // in the polynomial basis of F_{q^2} over F_q). We only need r = 1 or 2
    // over F_p; for q = p^r with r > 1 we work with the abstract
    // two-dimensional F_q-structure found by linear algebra.
    // Build coordinates by solving over F_q: basis {1, t} with t = any
    // element of F_{q^2} outside the image of embed.
    std::int64_t t = 0;
    std::set<std::int64_t> im;
    for (std::int64_t a = 0; a < Fq_.q(); ++a) im.insert(emb_[a]);
    for (std::int64_t x = 0; x < Fq2_.q(); ++x)
        if (!im.count(x)) { t = x; break; }
    // coords(x): x = embed(a) + embed(b)*t
    auto coords = [&](std::int64_t x) -> std::pair<std::int64_t, std::int64_t> {
        for (std::int64_t a = 0; a < Fq_.q(); ++a)
            for (std::int64_t b = 0; b < Fq_.q(); ++b)
                if (Fq2_.add(emb_[a], Fq2_.mul(emb_[b], t)) == x) return {a, b};
        throw Error("Gl2::elliptic_generator: coordinates not found (bug)");
    };
    auto [a0, b0] = coords(Fq2_.mul(g2, Fq2_.one()));
    auto [a1, b1] = coords(Fq2_.mul(g2, t));
    return {a0, a1, b0, b1};
}

const CycInt& FiniteCuspidal::value(const Gl2Class& c) const {
    auto it = classFunction.find(c);
    if (it == classFunction.end()) throw Error("FiniteCuspidal::value: unknown class");
    return it->second;
}

FiniteCuspidal cuspidalCharacter(const Gl2& G, std::int64_t thetaExp) {
    std::int64_t q = G.q(), L = q * q - 1;
    std::int64_t k = ((thetaExp % L) + L) % L;
    if ((k * q) % L == k) throw SingularTheta("cuspidalCharacter: theta^q == theta");
    FiniteCuspidal rho;
    rho.q = q;
    rho.thetaExp = k;
    const Gf& F2 = G.field2();
    auto theta_at = [&](std::int64_t x2) { return CycInt::zeta_pow(L, k * F2.dlog(x2)); };
    std::set<Gl2Class> seen;
    for (const auto& g : G.elements()) {
        Gl2Class c = G.class_of(g);
        if (!seen.insert(c).second) continue;
        CycInt v(L);
        switch (c.kind) {
            case Gl2Class::central:
                v = theta_at(G.embed(c.x1)).scaled(q - 1);
                break;
            case Gl2Class::jordan:
                v = theta_at(G.embed(c.x1)).scaled(-1);
                break;
            case Gl2Class::split:
                v = CycInt(L);  // zero
                break;
            case Gl2Class::elliptic: {
                std::int64_t j = c.x1;
                v = (CycInt::zeta_pow(L, k * j) + CycInt::zeta_pow(L, k * j * q)).scaled(-1);
                break;
            }
        }
        rho.classFunction.emplace(c, v);
    }
    return rho;
}

bool FiniteOrthogonalGroup::is_split() const {
    return static_cast<std::int64_t>(elements.size()) == 2 * (q - 1);
}

FiniteOrthogonalGroup orthogonalGroup(const Gl2& G, const Mat2& gram) {
    FiniteOrthogonalGroup H;
    H.q = G.q();
    H.gram = gram;
    for (const auto& g : G.elements()) {
        Mat2 t = G.mul(G.transpose(g), G.mul(gram, g));
        if (t == gram) H.elements.push_back(g);
    }
    std::int64_t n = static_cast<std::int64_t>(H.elements.size());
    if (n != 2 * (H.q - 1) && n != 2 * (H.q + 1))
        throw Error("orthogonalGroup: unexpected order (degenerate gram?)");
    return H;
}

std::pair<QuadraticCharacter, QuadraticCharacter> canonicalQuadraticCharacters(
    const Gl2& G, const FiniteOrthogonalGroup& H) {
    QuadraticCharacter triv(H.elements.size(), 1), det(H.elements.size(), 1);
    for (std::size_t i = 0; i < H.elements.size(); ++i) {
        std::int64_t d = G.det(H.elements[i]);
        det[i] = (d == G.field().one()) ? 1 : -1;  // det of an orthogonal element is +-1
    }
    return {triv, det};
}

std::vector<QuadraticCharacter> allQuadraticCharacters(const Gl2& G,
                                                       const FiniteOrthogonalGroup& H) {
    // K = subgroup generated by squares and commutators; characters of H/K
    std::set<Mat2> K;
    std::vector<Mat2> gens;
    for (const auto& a : H.elements) gens.push_back(G.mul(a, a));
    for (const auto& a : H.elements)
        for (const auto& b : H.elements)
            gens.push_back(G.mul(G.mul(a, b), G.inverse(G.mul(b, a))));
    K.insert(Gl2::ident());
    std::vector<Mat2> frontier{Gl2::ident()};
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Mat2 y = G.mul(x, g);
                if (K.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    // cosets
    std::vector<std::vector<std::size_t>> cosets;  // indices into H.elements
    std::vector<int> coset_of(H.elements.size(), -1);
    for (std::size_t i = 0; i < H.elements.size(); ++i) {
        if (coset_of[i] >= 0) continue;
        int id = static_cast<int>(cosets.size());
        cosets.emplace_back();
        for (std::size_t j = 0; j < H.elements.size(); ++j) {
            if (coset_of[j] >= 0) continue;
            Mat2 rel = G.mul(G.inverse(H.elements[i]), H.elements[j]);
            if (K.count(rel)) { coset_of[j] = id; cosets[id].push_back(j); }
        }
    }
    int nq = static_cast<int>(cosets.size());
    // multiplication table on coset representatives
    std::vector<std::vector<int>> tbl(nq, std::vector<int>(nq));
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nq; ++j) {
            Mat2 prod = G.mul(H.elements[cosets[i][0]], H.elements[cosets[j][0]]);
            for (std::size_t t = 0; t < H.elements.size(); ++t)
                if (prod == H.elements[t]) { tbl[i][j] = coset_of[t]; break; }
        }
    int id_coset = coset_of[static_cast<std::size_t>(
        std::find(H.elements.begin(), H.elements.end(), Gl2::ident()) - H.elements.begin())];
    std::vector<QuadraticCharacter> out;
    for (std::int64_t mask = 0; mask < (INT64_C(1) << nq); ++mask) {
        std::vector<int> assign(nq);
        for (int i = 0; i < nq; ++i) assign[i] = (mask >> i) & 1 ? -1 : 1;
        if (assign[id_coset] != 1) continue;
        bool ok = true;
        for (int i = 0; i < nq && ok; ++i)
            for (int j = 0; j < nq && ok; ++j)
                ok = assign[tbl[i][j]] == assign[i] * assign[j];
        if (!ok) continue;
        QuadraticCharacter chi(H.elements.size());
        for (std::size_t t = 0; t < H.elements.size(); ++t) chi[t] = assign[coset_of[t]];
        out.push_back(std::move(chi));
    }
    return out;
}

int chiAtMinusOne(const Gl2& G, const FiniteOrthogonalGroup& H, const QuadraticCharacter& chi) {
    std::int64_t m1 = G.field().neg(G.field().one());
    Mat2 minusI{m1, 0, 0, m1};
    for (std::size_t i = 0; i < H.elements.size(); ++i)
        if (H.elements[i] == minusI) return chi[i];
    throw Error("chiAtMinusOne: -I not in H (bug)");
}

int homDimension(const Gl2& G, const FiniteCuspidal& rho, const FiniteOrthogonalGroup& H,
                 const QuadraticCharacter& chi) {
    std::int64_t L = rho.q * rho.q - 1;
    CycInt sum(L);
    for (std::size_t i = 0; i < H.elements.size(); ++i) {
        CycInt v = rho.value(G.class_of(H.elements[i]));
        sum = sum + (chi[i] == 1 ? v : v.scaled(-1));
    }
    auto n = sum.to_integer();
    if (!n) throw NonIntegralResult("homDimension: sum is not a rational integer");
    std::int64_t order = static_cast<std::int64_t>(H.elements.size());
    if (*n % order != 0 || *n < 0)
        throw NonIntegralResult("homDimension: |H| does not divide the character sum");
    return static_cast<int>(*n / order);
}

std::optional<TorusWitness> tauSplitTorusWitness(const Gl2& G, const FiniteOrthogonalGroup& H) {
    Mat2 C = G.elliptic_generator();
    Mat2 graminv = G.inverse(H.gram);
    for (const auto& g : G.elements()) {
        Mat2 x = G.mul(g, G.mul(C, G.inverse(g)));
        // tau(x) = x^{-1} iff gram^{-1} x^t gram == x
        Mat2 lhs = G.mul(graminv, G.mul(G.transpose(x), H.gram));
        if (lhs == x) return TorusWitness{g, x};
    }
    return std::nullopt;
}

} // namespace pf
