#pragma once

#include <set>
#include <vector>

#include "pf/symbols.hpp"

namespace pf {

/// A tamely ramified extension T/F described by its ramification index e and
/// inertia degree f over a base with residue field q. gcd(e, q) = 1.
struct TameExtension {
    int e;
    int f;
    ResidueField base;

    TameExtension(int e_, int f_, const ResidueField& k);
    int degree() const { return e * f; }
};

/// A subgroup of the four square classes; always contains 1.
struct NormSubgroup {
    std::set<SquareClass> members;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(const SquareClass& c) const { return members.count(c) > 0; }
    /// The nontrivial class when order() == 2.
    SquareClass nontrivial() const;
};

/// N_{T/F}(T^x) F^x2 / F^x2, computed from generators: the unit classes
/// ({1,u} for e odd, {1} for e even) and the class of (-1)^{f(e+1)} pi^f
/// (uniformizer convention pi_T^e = pi_L = pi_F). The order is
/// cross-validated against the trichotomy: 4 iff ef odd, 2 iff exactly one
/// of e, f even, 1 iff both even.
NormSubgroup normSquareClassImage(const TameExtension& T);

/// Square class of N_{T/F}(x) for x given by its square class in T.
SquareClass normClassOf(const TameExtension& T, const SquareClass& xT);

/// 3 iff e, f both even; 0 iff ef odd; 1 otherwise.
int quadraticSubextensionCount(const TameExtension& T);

/// |T^x / (T^x2 F^x)| = 4 / order(normSquareClassImage) = 1 + #quadratic
/// subextensions.
int yCardinality(const TameExtension& T);

/// The induced bijection L^x/L^x2 = E^x/E^x2 for an odd-degree extension:
/// identity on the four class labels once uniformizers are compatibly chosen.
struct SquareClassTransfer {
    std::int64_t degree;
    SquareClass apply(const SquareClass& c) const { return c; }
};

SquareClassTransfer oddDegreeSquareClassTransfer(std::int64_t degree);

} // namespace pf
