#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pf/gf.hpp"

namespace pf {

/// Exact arithmetic in Z[zeta_L]: integer coefficient vectors of length L
/// against the (redundant) power basis 1, zeta, ..., zeta^{L-1}, reduced
/// modulo the L-th cyclotomic polynomial when an integer answer is needed.
class CycInt {
public:
    explicit CycInt(std::int64_t L) : L_(L), c_(L, 0) {}
    static CycInt zeta_pow(std::int64_t L, std::int64_t k);
    static CycInt integer(std::int64_t L, std::int64_t n);

    std::int64_t L() const { return L_; }
    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;  // convolution mod x^L - 1
    CycInt scaled(std::int64_t s) const;
    /// Galois conjugate zeta -> zeta^{-1}.
    CycInt conj() const;

    /// Reduce modulo Phi_L; nullopt when not a rational integer.
    std::optional<std::int64_t> to_integer() const;

private:
    std::int64_t L_;
    std::vector<std::int64_t> c_;
};

/// 2x2 matrices over F_q in Gf element encoding.
using Mat2 = std::array<std::int64_t, 4>;  // row major a b / c d

/// Conjugacy class data of GL_2(F_q): central / non-semisimple (jordan) /
/// split semisimple / elliptic, keyed by eigenvalue data.
struct Gl2Class {
    enum Kind { central, jordan, split, elliptic } kind;
    std::int64_t x1;  // central/jordan: the eigenvalue in F_q;
                      // split: smaller eigenvalue; elliptic: dlog orbit min in F_{q^2}
    std::int64_t x2;  // split: larger eigenvalue

    bool operator<(const Gl2Class& o) const {
        return std::tie(kind, x1, x2) < std::tie(o.kind, o.x1, o.x2);
    }
};

/// The group GL_2(F_q) with its class map; shared by the cuspidal characters
/// and the orthogonal subgroups.
class Gl2 {
public:
    explicit Gl2(std::int64_t q);

    std::int64_t q() const { return Fq_.q(); }
    const Gf& field() const { return Fq_; }
    const Gf& field2() const { return Fq2_; }
    const std::vector<Mat2>& elements() const { return elems_; }

    Mat2 mul(const Mat2& a, const Mat2& b) const;
    Mat2 inverse(const Mat2& a) const;
    Mat2 transpose(const Mat2& a) const { return {a[0], a[2], a[1], a[3]}; }
    std::int64_t det(const Mat2& a) const;
    static Mat2 ident() { return {1, 0, 0, 1}; }

    Gl2Class class_of(const Mat2& g) const;
    /// Embedding F_q -> F_{q^2} compatible with the residue towers.
    std::int64_t embed(std::int64_t a) const;
    /// Multiplication-by-generator matrix of F_{q^2} acting on itself: a
    /// fixed elliptic torus generator.
    Mat2 elliptic_generator() const;

private:
    Gf Fq_, Fq2_;
    std::vector<Mat2> elems_;
    std::vector<std::int64_t> emb_;  // F_q -> F_{q^2}
};

/// The cuspidal character of GL_2(F_q) attached to a nonsingular character
/// theta of F_{q^2}^x (theta = zeta_L^{k . dlog}): degree q - 1, values in
/// Z[zeta_L], L = q^2 - 1.
struct FiniteCuspidal {
    std::int64_t q;
    std::int64_t thetaExp;  // k, with k*q != k mod L
    std::map<Gl2Class, CycInt> classFunction;

    const CycInt& value(const Gl2Class& c) const;
    /// w_rho(-1) = theta(-1) = (-1)^k.
    int central_sign() const { return thetaExp % 2 == 0 ? 1 : -1; }
};

FiniteCuspidal cuspidalCharacter(const Gl2& G, std::int64_t thetaExp);

/// An orthogonal subgroup O(gram) of GL_2(F_q) with its explicit elements.
struct FiniteOrthogonalGroup {
    std::int64_t q;
    Mat2 gram;
    std::vector<Mat2> elements;
    bool is_split() const;  // |O| = 2(q-1)
};

FiniteOrthogonalGroup orthogonalGroup(const Gl2& G, const Mat2& gram);

/// A +-1-valued character of H given by its values aligned with H.elements.
using QuadraticCharacter = std::vector<int>;

/// The two canonical quadratic characters: trivial and det (h -> det(h) as
/// +-1). The distinction criterion w_rho(-1) = chi(-1) holds exactly for
/// these on every O_2; the two characters that are nontrivial on SO_2
/// violate it on non-split O_2.
std::pair<QuadraticCharacter, QuadraticCharacter> canonicalQuadraticCharacters(
    const Gl2& G, const FiniteOrthogonalGroup& H);

/// All characters chi of H with chi^2 = 1 (computed from the quotient by
/// the subgroup generated by squares and commutators).
std::vector<QuadraticCharacter> allQuadraticCharacters(const Gl2& G,
                                                       const FiniteOrthogonalGroup& H);

int chiAtMinusOne(const Gl2& G, const FiniteOrthogonalGroup& H, const QuadraticCharacter& chi);

/// dim Hom_H(rho, chi) = (1/|H|) sum_h rho(h) chi(h), exactly in cyclotomic
/// arithmetic. Throws NonIntegralResult when the sum is not |H| times a
/// nonnegative integer.
int homDimension(const Gl2& G, const FiniteCuspidal& rho, const FiniteOrthogonalGroup& H,
                 const QuadraticCharacter& chi);

/// A tau-split embedding of F_{q^2} into M_2(F_q), found by brute-force
/// search over conjugates of the fixed elliptic torus: tau(x) = x^{-1} for
/// every torus element, i.e. the image is gram-symmetric.
struct TorusWitness {
    Mat2 conjugator;
    Mat2 generatorImage;
};

std::optional<TorusWitness> tauSplitTorusWitness(const Gl2& G, const FiniteOrthogonalGroup& H);

} // namespace pf
