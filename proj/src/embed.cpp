#include "pf/embed.hpp"

#include <algorithm>
#include <set>

namespace pf {

TameTower::TameTower(int e, int f, std::int64_t p, int prec)
    : e_(e), f_(f), d_(e * f), p_(p), prec_(prec) {
    if (e < 1 || f < 1) throw Error("TameTower: e, f >= 1 required");
    if (e % p == 0) throw Error("TameTower: not tame (p | e)");
    residue_ = std::make_unique<Gf>(p, f);
    fpoly_ = residue_->modulus();  // lift of the f-part, coeffs in [0, p)
    if (f_ == 1) fpoly_ = {0};

    // structure constants for basis monomials zeta^i w^j
    structure_.resize(static_cast<std::size_t>(d_) * d_);
    for (int i1 = 0; i1 < f_; ++i1)
        for (int j1 = 0; j1 < e_; ++j1)
            for (int i2 = 0; i2 < f_; ++i2)
                for (int j2 = 0; j2 < e_; ++j2) {
                    // zeta^{i1+i2} w^{j1+j2}
                    std::int64_t scale = 1;
                    int j = j1 + j2;
                    if (j >= e_) { j -= e_; scale = p_; }
                    // reduce zeta^{i1+i2} mod fpoly via integer polynomial division
                    std::vector<std::int64_t> poly(i1 + i2 + 1, 0);
                    poly[i1 + i2] = 1;
                    while (static_cast<int>(poly.size()) > f_) {
                        std::int64_t c = poly.back();
                        poly.pop_back();
                        if (c)
                            for (int t = 0; t < f_; ++t)
                                poly[poly.size() - f_ + t] -= c * fpoly_[t];
                    }
                    auto& entry = structure_[static_cast<std::size_t>(bidx(i1, j1)) * d_ +
                                             bidx(i2, j2)];
                    for (int t = 0; t < static_cast<int>(poly.size()); ++t)
                        if (poly[t]) entry.push_back({bidx(t, j), scale * poly[t]});
                }
}

TameTower::Elem TameTower::zero() const {
    return Elem(d_, PadicScalar::exact_zero(p_, prec_));
}

TameTower::Elem TameTower::one() const {
    Elem x = zero();
    x[0] = PadicScalar(p_, 1, prec_);
    return x;
}

TameTower::Elem TameTower::zeta() const {
    if (f_ == 1) return one();
    Elem x = zero();
    x[bidx(1, 0)] = PadicScalar(p_, 1, prec_);
    return x;
}

TameTower::Elem TameTower::uniformizer() const {
    Elem x = zero();
    if (e_ == 1)
        x[0] = PadicScalar(p_, p_, prec_);
    else
        x[bidx(0, 1)] = PadicScalar(p_, 1, prec_);
    return x;
}

TameTower::Elem TameTower::from_int(std::int64_t n) const {
    Elem x = zero();
    x[0] = PadicScalar(p_, n, prec_);
    return x;
}

TameTower::Elem TameTower::lift_residue(std::int64_t r) const {
    Elem x = zero();
    for (int i = 0; i < f_; ++i) {
        std::int64_t digit = r % p_;
        r /= p_;
        if (digit) x[bidx(i, 0)] = PadicScalar(p_, digit, prec_);
    }
    return x;
}

TameTower::Elem TameTower::eps0() const { return lift_residue(residue_->nonsquare()); }

TameTower::Elem TameTower::add(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (int i = 0; i < d_; ++i) c[i] = a[i] + b[i];
    return c;
}

TameTower::Elem TameTower::neg(const Elem& a) const {
    Elem c = zero();
    for (int i = 0; i < d_; ++i) c[i] = -a[i];
    return c;
}

TameTower::Elem TameTower::mul(const Elem& a, const Elem& b) const {
    Elem c = zero();
    for (int i = 0; i < d_; ++i) {
        if (a[i].is_exact_zero()) continue;
        for (int j = 0; j < d_; ++j) {
            if (b[j].is_exact_zero()) continue;
            PadicScalar prod = a[i] * b[j];
            for (const auto& [k, coeff] : structure_[static_cast<std::size_t>(i) * d_ + j])
                c[k] = c[k] + prod * PadicScalar(p_, coeff, prec_);
        }
    }
    return c;
}

TameTower::Elem TameTower::inv(const Elem& a) const {
    PadicMatrix M = mult_matrix(a);
    std::vector<PadicScalar> e1(d_, PadicScalar::exact_zero(p_, prec_));
    e1[0] = PadicScalar(p_, 1, prec_);
    return M.solve(e1);
}

PadicMatrix TameTower::mult_matrix(const Elem& x) const {
    PadicMatrix M(p_, d_, d_, prec_);
    for (int j = 0; j < d_; ++j) {
        Elem bj = zero();
        bj[j] = PadicScalar(p_, 1, prec_);
        Elem col = mul(x, bj);
        for (int i = 0; i < d_; ++i) M.at(i, j) = col[i];
    }
    return M;
}

PadicScalar TameTower::trace(const Elem& x) const {
    PadicMatrix M = mult_matrix(x);
    PadicScalar t = PadicScalar::exact_zero(p_, prec_);
    for (int i = 0; i < d_; ++i) t = t + M.at(i, i);
    return t;
}

PadicScalar TameTower::norm(const Elem& x) const { return mult_matrix(x).det(); }

std::int64_t TameTower::valuation(const Elem& x) const {
    // the monomial basis is valuation-triangular: v_T = min(e * v_p(c_ij) + j)
    std::int64_t best = PadicScalar::exact_zero_cap();
    bool found = false;
    for (int j = 0; j < e_; ++j)
        for (int i = 0; i < f_; ++i) {
            const PadicScalar& c = x[bidx(i, j)];
            if (c.is_zero_like()) continue;
            best = std::min(best, e_ * c.valuation() + j);
            found = true;
        }
    if (!found) throw PrecisionExhausted("TameTower::valuation: zero-like element");
    return best;
}

std::int64_t TameTower::residue(const Elem& x) const {
    if (valuation(x) != 0) throw Error("TameTower::residue: not a unit");
    std::int64_t r = 0, pk = 1;
    for (int i = 0; i < f_; ++i) {
        const PadicScalar& c = x[bidx(i, 0)];
        std::int64_t digit = 0;
        if (!c.is_zero_like() && c.valuation() == 0) digit = c.residue();
        r += digit * pk;
        pk *= p_;
    }
    return r;
}

SquareClass TameTower::square_class(const Elem& x) const {
    std::int64_t v = valuation(x);
    // strip w^v: multiply by w^{-v} = w^{(e - v%e) % e} / p^{ceil(v/e)}
    Elem y = x;
    std::int64_t vw = ((v % e_) + e_) % e_;
    if (vw) {
        Elem wpow = one();
        for (int t = 0; t < e_ - vw; ++t) wpow = mul(wpow, uniformizer());
        y = mul(y, wpow);  // now valuation divisible by e
        v += e_ - vw;
    }
    std::int64_t vp = v / e_;
    Elem scale = zero();
    scale[0] = PadicScalar::from_unit(p_, -vp, 1, prec_);
    y = mul(y, scale);
    std::int64_t r = residue(y);
    bool sq = residue_->is_square(r);
    return SquareClass(static_cast<int>(((valuation(x) % 2) + 2) % 2),
                       sq ? UnitClass::square : UnitClass::nonsquare);
}

std::vector<std::pair<SquareClass, TameTower::Elem>> TameTower::square_class_reps() const {
    Elem w = uniformizer(), e0 = eps0();
    return {{SquareClass::one(), one()},
            {SquareClass::u(), e0},
            {SquareClass::pi(), w},
            {SquareClass::u_pi(), mul(w, e0)}};
}

PadicMatrix traceFormGram(const TameTower& tower, const TameTower::Elem& c) {
    int d = tower.d();
    PadicMatrix H(tower.p(), d, d, tower.precision());
    std::vector<TameTower::Elem> basis;
    for (int j = 0; j < d; ++j) {
        TameTower::Elem b = tower.zero();
        b[j] = PadicScalar(tower.p(), 1, tower.precision());
        basis.push_back(b);
    }
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            PadicScalar t = tower.trace(tower.mul(c, tower.mul(basis[i], basis[j])));
            H.at(i, j) = t;
            H.at(j, i) = t;
        }
    return H;
}

namespace {

PadicMatrix match_diagonals(std::vector<PadicScalar> a, std::vector<PadicScalar> b,
                            std::int64_t bound);

// core matching step; caller guarantees entry valuations in {0, 1} on both
// sides, which keeps the per-level precision loss bounded
PadicMatrix match_diagonals_core(std::vector<PadicScalar> a, const std::vector<PadicScalar>& b,
                                 std::int64_t bound) {
    const std::int64_t p = a[0].p();
    const int n = static_cast<int>(a.size());
    if (n == 0) throw Error("match_diagonals: empty");
    int prec = 1;
    for (const auto& x : a) prec = std::max(prec, x.precision());
    for (const auto& x : b) prec = std::max(prec, x.precision());
    PadicMatrix h(p, n, n, prec);
    if (n == 1) {
        // a0 s^2 = b0: s = sqrt(b0/a0)
        PadicScalar ratio = b[0] / a[0];
        h.at(0, 0) = ratio.sqrt();
        return h;
    }
    // find integer vector v with Q_a(v) in the square class of b[0]
    std::vector<std::int64_t> v(n, 0);
    auto qval = [&](const std::vector<std::int64_t>& vec) {
        PadicScalar s = PadicScalar::exact_zero(p, prec);
        for (int i = 0; i < n; ++i)
            if (vec[i]) s = s + a[i] * PadicScalar(p, vec[i] * vec[i], prec);
        return s;
    };
    bool found = false;
    std::vector<std::int64_t> best;
    // grow the search radius; the p^3 budget is far beyond what these small
    // dimensions need
    for (std::int64_t radius = 1; radius <= bound && !found; ++radius) {
        std::vector<std::int64_t> idx(n, 0);
        while (true) {
            for (int i = 0; i < n; ++i) v[i] = idx[i];
            bool attains = false;
            for (int i = 0; i < n; ++i) attains = attains || (v[i] == radius);
            if (attains || radius == 1) {
                PadicScalar q = qval(v);
                if (!q.is_zero_like()) {
                    PadicScalar ratio = b[0] / q;
                    if (ratio.valuation() % 2 == 0) {
                        ResidueField k(p);
                        if (isSquareResidue(k, ratio.residue())) {
                            best = v; found = true; break;
                        }
                    }
                }
            }
            int i = n - 1;
            while (i >= 0 && idx[i] == radius) { idx[i] = 0; --i; }
            if (i < 0) break;
            ++idx[i];
        }
    }
    if (!found) throw SearchExhausted("match_diagonals: represented-value search exhausted");
    PadicScalar q = qval(best);
    PadicScalar s = (b[0] / q).sqrt();
    // first column: s * best
    std::vector<PadicScalar> col(n, PadicScalar::exact_zero(p, prec));
    for (int i = 0; i < n; ++i) col[i] = PadicScalar(p, best[i], prec) * s;
    // complete with the Q_a-orthogonal complement of col: e_i - (B(e_i, col)/b0) col,
    // skipping the pivot coordinate (minimal valuation of a_i * col_i)
    int skip = -1;
    std::int64_t bestval = PadicScalar::exact_zero_cap();
    for (int i = 0; i < n; ++i) {
        PadicScalar t = a[i] * col[i];
        if (!t.is_zero_like() && t.valuation() < bestval) { bestval = t.valuation(); skip = i; }
    }
    std::vector<std::vector<PadicScalar>> comp;
    for (int i = 0; i < n; ++i) {
        if (i == skip) continue;
        std::vector<PadicScalar> u(n, PadicScalar::exact_zero(p, prec));
        u[i] = PadicScalar(p, 1, prec);
        PadicScalar coeff = (a[i] * col[i]) / b[0];  // B(e_i, col) / Q(col)
        for (int t = 0; t < n; ++t) u[t] = u[t] - coeff * col[t];
        comp.push_back(u);
    }
    // Gram of the complement w.r.t. diag(a)
    int m = n - 1;
    PadicMatrix G(p, m, m, prec);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            PadicScalar s2 = PadicScalar::exact_zero(p, prec);
            for (int t = 0; t < n; ++t) s2 = s2 + a[t] * comp[i][t] * comp[j][t];
            G.at(i, j) = s2;
        }
    auto sub = diagonalize(G);
    // recurse: match sub.diag to b[1..]
    std::vector<PadicScalar> brest(b.begin() + 1, b.end());
    PadicMatrix hs = match_diagonals(sub.diag, brest, bound);
    // columns of h: col, then comp * sub.transform * hs
    PadicMatrix rest(p, n, m, prec);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            PadicScalar s3 = PadicScalar::exact_zero(p, prec);
            for (int t = 0; t < m; ++t) s3 = s3 + comp[t][i] * sub.transform.at(t, j);
            rest.at(i, j) = s3;
        }
    PadicMatrix tail = rest * hs;
    for (int i = 0; i < n; ++i) {
        h.at(i, 0) = col[i];
        for (int j = 0; j < m; ++j) h.at(i, j + 1) = tail.at(i, j);
    }
    return h;
}

// h with h^t diag(a) h = diag(b): rescale both sides to valuations {0, 1} by
// even-power square scalings (which cost no precision), match, and fold the
// scalings back in. Keeping valuations bounded at every recursion level
// prevents the matching from pumping p-powers, so the total precision loss
// stays linear in the dimension.
PadicMatrix match_diagonals(std::vector<PadicScalar> a, std::vector<PadicScalar> b,
                            std::int64_t bound) {
    const std::int64_t p = a[0].p();
    const int n = static_cast<int>(a.size());
    std::vector<std::int64_t> ka(n), kb(n);
    for (int i = 0; i < n; ++i) {
        std::int64_t va = a[i].valuation(), vb = b[i].valuation();
        ka[i] = (va >= 0) ? va / 2 : (va - 1) / 2;  // floor division
        kb[i] = (vb >= 0) ? vb / 2 : (vb - 1) / 2;
        if (ka[i]) a[i] = a[i] * PadicScalar::from_unit(p, -2 * ka[i], 1, a[i].precision());
        if (kb[i]) b[i] = b[i] * PadicScalar::from_unit(p, -2 * kb[i], 1, b[i].precision());
    }
    PadicMatrix core = match_diagonals_core(a, b, bound);
    // h = S_a * core * S_b^{-1} with S_a = diag(p^{-ka}), S_b = diag(p^{-kb})
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t shift = -ka[i] + kb[j];
            if (shift)
                core.at(i, j) =
                    core.at(i, j) * PadicScalar::from_unit(p, shift, 1, core.at(i, j).precision());
        }
    return core;
}

} // namespace

PadicMatrix congruenceTransform(const PadicMatrix& A, const PadicMatrix& B,
                                std::int64_t searchBound) {
    if (A.rows() != B.rows()) throw NotEquivalent("congruenceTransform: dimension mismatch");
    FormInvariants ia = matrix_invariants(A), ib = matrix_invariants(B);
    bool same = (A.rows() == 1) ? (ia.disc == ib.disc) : (ia == ib);
    if (!same) throw NotEquivalent("congruenceTransform: invariants differ");
    if (searchBound <= 0) {
        searchBound = A.p() * A.p() * A.p();  // coordinate budget |v_i| <= p^3
    }
    auto da = diagonalize(A);
    auto db = diagonalize(B);
    PadicMatrix h = match_diagonals(da.diag, db.diag, searchBound);
    // g = gA h gB^{-1}
    PadicMatrix g = da.transform * h * db.transform.inverse();
    return g;
}

SymmetricEmbedding::SymmetricEmbedding(const TameTower& tower)
    : tower_(tower), g_(tower.p(), tower.d(), tower.d()), ginv_(g_) {
    const int d = tower.d();
    int work_prec = std::min(tower.precision() + 2 * d + 4, max_precision(tower.p()));
    work_ = std::make_unique<TameTower>(tower.e(), tower.f(), tower.p(), work_prec);
    PadicMatrix J = j_matrix(tower.p(), d, work_prec);
    FormInvariants jinv = matrix_invariants(J);
    // scan c over the square classes with the inverse-different valuation
    // parity e-1; a match always exists for a tame tower
    int want = (tower.e() - 1) % 2;
    auto caller_reps = tower.square_class_reps();
    auto work_reps = work_->square_class_reps();
    bool found = false;
    for (std::size_t i = 0; i < work_reps.size(); ++i) {
        const auto& [cls, rep] = work_reps[i];
        if (cls.valParity != want) continue;
        PadicMatrix H = traceFormGram(*work_, rep);
        FormInvariants hinv = matrix_invariants(H);
        bool match = (d == 1) ? (hinv.disc == jinv.disc) : (hinv == jinv);
        if (match) {
            c_class_ = cls;
            c_ = caller_reps[i].second;
            g_ = congruenceTransform(J, H);
            ginv_ = g_.inverse();
            found = true;
            break;
        }
    }
    if (!found)
        throw NoClassFound("jSymmetricEmbedding: no trace-form class matches J_d (bug or wild input)");
}

PadicMatrix SymmetricEmbedding::image(const TameTower::Elem& x) const {
    return g_ * tower_.mult_matrix(x) * ginv_;
}

PadicMatrix SymmetricEmbedding::j_times_image(const TameTower::Elem& x) const {
    PadicMatrix img = image(x);
    PadicMatrix J = j_matrix(tower_.p(), tower_.d(), img.working_precision());
    return J * img;
}

bool SymmetricEmbedding::is_persymmetric(const PadicMatrix& M, std::int64_t min_cap) const {
    PadicMatrix J = j_matrix(tower_.p(), tower_.d(), M.working_precision());
    PadicMatrix D = J.inverse() * M.transpose() * J - M;
    // equal to working precision: every entry cancels completely, and the
    // certified bound did not degrade below min_cap
    for (int i = 0; i < D.rows(); ++i)
        for (int j = 0; j < D.cols(); ++j) {
            const PadicScalar& x = D.at(i, j);
            if (!x.is_zero_like()) return false;
            if (x.valuation_bound() < min_cap) return false;
        }
    return true;
}

SymmetricEmbedding jSymmetricEmbedding(const TameTower& tower) {
    return SymmetricEmbedding(tower);
}

bool LemmaReport::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

int LemmaReport::failures() const {
    int n = 0;
    for (const auto& c : cases)
        if (!c.pass) ++n;
    return n;
}

namespace {

int hasse_of_blocks(const std::vector<PadicMatrix>& blocks) {
    const std::int64_t p = blocks[0].p();
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    PadicMatrix M(p, n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.rows(); ++j) M.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return matrix_invariants(M).hasse;
}

} // namespace

LemmaReport verifyHasseLemmas(const LemmaGrid& grid) {
    LemmaReport rep;
    for (std::int64_t p : grid.primes) {
        ResidueField k(p);
        bool minus1sq = k.minus_one_is_square();
        for (int e = 1; e <= grid.max_ef; ++e) {
            if (e % p == 0) continue;
            for (int f = 1; f * e <= grid.max_ef; ++f) {
                TameTower T(e, f, p, grid.precision);
                SymmetricEmbedding emb(T);
                const int d = T.d();
                auto W = T.uniformizer();
                auto E0 = T.eps0();
                auto WE = T.mul(W, E0);
                auto JX = [&](const TameTower::Elem& x) { return emb.j_times_image(x); };
                auto note = [&](const std::string& lemma, int m, bool pass,
                                const std::string& detail) {
                    rep.cases.push_back({lemma, p, e, f, m, pass, detail});
                };

                if (e % 2 == 0 && f % 2 == 0) {
                    // some uniformizer class gives (Hasse(J_d w), Hasse(J_d w e0)) = (1, -1)
                    int h1 = hasse_of_blocks({JX(W)});
                    int h2 = hasse_of_blocks({JX(WE)});
                    note("uniformizer-pair(e,f even)", 1,
                         (h1 == 1 && h2 == -1) || (h1 == -1 && h2 == 1),
                         "Hasse(J_d w)=" + std::to_string(h1) + " Hasse(J_d w eps0)=" + std::to_string(h2));
                }
                if (e % 2 == 0 && f % 2 == 1) {
                    int h1 = hasse_of_blocks({JX(W)});
                    int h2 = hasse_of_blocks({JX(WE)});
                    note("unit-twist-flips-hasse(e even, f odd)", 1, h1 != h2,
                         "Hasse(J_d w)=" + std::to_string(h1) + " Hasse(J_d w eps0)=" + std::to_string(h2));
                    for (int m = 1; m <= grid.max_m; ++m) {
                        std::vector<PadicMatrix> A(m, JX(W));
                        std::vector<PadicMatrix> B(m - 1, JX(W));
                        B.push_back(JX(WE));
                        note("block-unit-twist(e even, f odd)", m,
                             hasse_of_blocks(A) != hasse_of_blocks(B), "");
                    }
                }
                if (e % 2 == 1 && f % 2 == 0) {
                    // m odd: the square-norm uniformizer wE' closes the first
                    // display at +1 and its unit twist at -1; both wE choices
                    std::vector<TameTower::Elem> wprimes;
                    for (const auto& cand : {W, WE})
                        if (T.norm(cand).square_class().is_one()) wprimes.push_back(cand);
                    for (int m = 1; m <= grid.max_m; m += 2)
                        for (const auto& wp : wprimes)
                            for (const auto& wn : {W, WE}) {
                                std::vector<PadicMatrix> A(m - 1, JX(wn));
                                A.push_back(JX(wp));
                                bool okA = hasse_of_blocks(A) == 1;
                                std::vector<PadicMatrix> B(m - 1, JX(T.mul(wn, E0)));
                                B.push_back(JX(T.mul(wp, E0)));
                                bool okB = hasse_of_blocks(B) == -1;
                                note("square-norm-uniformizer(e odd, f even)", m, okA && okB,
                                     "first=" + std::to_string(hasse_of_blocks(A)) +
                                         " second=" + std::to_string(hasse_of_blocks(B)));
                            }
                }
                if (e % 2 == 1) {
                    // m even with 2|d, 4|m, or -1 a square: twisted last block
                    for (int m = 2; m <= grid.max_m; m += 2) {
                        bool applicable = (d % 2 == 0) || (m % 4 == 0) || minus1sq;
                        if (!applicable) continue;
                        for (const auto& wn : {W, WE}) {
                            std::vector<PadicMatrix> A(m - 1, JX(wn));
                            A.push_back(JX(T.mul(wn, E0)));
                            int h = hasse_of_blocks(A);
                            note("last-block-twist(e odd, m even)", m, h == -1,
                                 "Hasse=" + std::to_string(h));
                        }
                    }
                }
                if (d % 2 == 1 && !minus1sq) {
                    // d odd, m = 2 mod 4, -1 a nonsquare: uniform pi blocks
                    for (int m = 2; m <= grid.max_m; ++m) {
                        if (m % 2 != 0 || m % 4 == 0) continue;
                        for (const auto& wn : {W, WE}) {
                            std::vector<PadicMatrix> A(m, JX(wn));
                            int h = hasse_of_blocks(A);
                            note("uniform-pi-blocks(d odd, m=2 mod 4)", m, h == -1,
                                 "Hasse=" + std::to_string(h));
                        }
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace pf
