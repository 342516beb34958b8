#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pf/forms.hpp"
#include "pf/gf.hpp"
#include "pf/padic.hpp"
#include "pf/tame.hpp"

namespace pf {

/// Concrete arithmetic for the tame tower T = Q_p(zeta, w), zeta a root of
/// the lifted smallest-lex irreducible of degree f over F_p and w^e = p
/// (Eisenstein X^e - p, Abhyankar uniformizer convention). Elements are
/// coefficient vectors over the basis zeta^i w^j. Immutable after
/// construction; all operations are pure.
class TameTower {
public:
    TameTower(int e, int f, std::int64_t p, int prec = kDefaultPrecision);

    int e() const { return e_; }
    int f() const { return f_; }
    int d() const { return d_; }
    std::int64_t p() const { return p_; }
    int precision() const { return prec_; }
    const Gf& residue_field() const { return *residue_; }
    /// Lifted f-part modulus coefficients (degree f, monic; c_0..c_{f-1}).
    const std::vector<std::int64_t>& f_polynomial() const { return fpoly_; }

    using Elem = std::vector<PadicScalar>;  // length d, index i + f*j

    Elem zero() const;
    Elem one() const;
    Elem zeta() const;
    Elem uniformizer() const;
    Elem from_int(std::int64_t n) const;
    /// Unit lift of a residue-field element (given in Gf encoding).
    Elem lift_residue(std::int64_t x) const;
    /// A unit whose residue is the smallest nonsquare of F_{p^f}.
    Elem eps0() const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;

    /// Matrix of multiplication by x on the fixed basis.
    PadicMatrix mult_matrix(const Elem& x) const;
    PadicScalar trace(const Elem& x) const;
    PadicScalar norm(const Elem& x) const;

    /// Valuation in T (w-adic; v_T(p) = e). Throws PrecisionExhausted when
    /// indistinguishable from zero.
    std::int64_t valuation(const Elem& x) const;
    /// Residue of a unit x in F_{p^f} (Gf encoding).
    std::int64_t residue(const Elem& x) const;
    /// Class of x in T^x / T^x2.
    SquareClass square_class(const Elem& x) const;

    /// The four square-class representatives 1, eps0, w, w*eps0 in order.
    std::vector<std::pair<SquareClass, Elem>> square_class_reps() const;

private:
    int e_, f_, d_;
    std::int64_t p_;
    int prec_;
    std::vector<std::int64_t> fpoly_;
    std::unique_ptr<Gf> residue_;
    // structure constants: monomial (i1,j1)*(i2,j2) = sum coeff * basis
    std::vector<std::vector<std::pair<int, std::int64_t>>> structure_;

    int bidx(int i, int j) const { return i + f_ * j; }
};

/// Explicit g with g^t A g = B, A and B symmetric with equal invariants.
/// Found by diagonalizing both sides and matching diagonals through
/// represented-value search (bounded integer vectors, then an exact square
/// root rescaling). Throws NotEquivalent / SearchExhausted.
PadicMatrix congruenceTransform(const PadicMatrix& A, const PadicMatrix& B,
                                std::int64_t searchBound = 0);

/// Gram matrix H_c with (H_c)_{ij} = Tr_{T/F}(c b_i b_j).
PadicMatrix traceFormGram(const TameTower& tower, const TameTower::Elem& c);

/// An algebra embedding T -> M_d(F) whose image is J_d-symmetric
/// (persymmetric): x -> g M_x g^{-1} with g^t J_d g = H_c. The scan for c
/// runs over the square classes with valuation parity e-1 mod 2 (the
/// inverse-different parity, matching the block structure the Hasse lemmas
/// assume) and picks the first with invariants(H_c) = invariants(J_d).
class SymmetricEmbedding {
public:
    SymmetricEmbedding(const TameTower& tower);

    const TameTower& tower() const { return tower_; }
    const SquareClass& chosen_class() const { return c_class_; }
    const TameTower::Elem& chosen_rep() const { return c_; }
    const PadicMatrix& conjugator() const { return g_; }

    /// Image matrix of a tower element.
    PadicMatrix image(const TameTower::Elem& x) const;
    /// J_d * image(x): symmetric when the embedding is J-symmetric.
    PadicMatrix j_times_image(const TameTower::Elem& x) const;

    /// J_d^{-1} M^t J_d = M to working precision: every entry of the
    /// difference cancels completely and the certified zero bound stays at
    /// or above min_cap.
    bool is_persymmetric(const PadicMatrix& M, std::int64_t min_cap) const;

private:
    const TameTower& tower_;
    // congruence search runs in an elevated-precision copy of the tower (the
    // trace grams are exact integer matrices, so lifting is honest); the
    // per-level mod-p cancellations of the diagonal matching then land the
    // conjugator at or above the caller's precision
    std::unique_ptr<TameTower> work_;
    SquareClass c_class_;
    TameTower::Elem c_;
    PadicMatrix g_, ginv_;
};

SymmetricEmbedding jSymmetricEmbedding(const TameTower& tower);

/// One verified Hasse sign relation, identified by its hypothesis shape.
struct LemmaCase {
    std::string lemma;   // e.g. "uniformizer-pair(e,f even)"
    std::int64_t p;
    int e, f, m;
    bool pass;
    std::string detail;
};

struct LemmaReport {
    std::vector<LemmaCase> cases;
    bool all_pass() const;
    int failures() const;
};

struct LemmaGrid {
    std::vector<std::int64_t> primes{3, 5};
    int max_ef = 4;
    int max_m = 3;
    int precision = kDefaultPrecision;
};

/// Machine verification of the Hasse sign table for tame extensions: block
/// matrices diag(J_d x, ..., J_d x') are built via the J-symmetric
/// embedding, their Hasse invariants computed by integral diagonalization,
/// and compared with the asserted signs. Existential uniformizer choices are
/// resolved by searching both uniformizer classes.
LemmaReport verifyHasseLemmas(const LemmaGrid& grid);

} // namespace pf
