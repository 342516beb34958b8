#include "pf/tame.hpp"

#include <numeric>

namespace pf {

TameExtension::TameExtension(int e_, int f_, const ResidueField& k)
    : e(e_), f(f_), base(k) {
    if (e < 1 || f < 1) throw Error("TameExtension: e, f >= 1 required");
    if (std::gcd(static_cast<std::int64_t>(e), k.p) != 1)
        throw Error("TameExtension: not tame (p | e)");
}

SquareClass NormSubgroup::nontrivial() const {
    for (const auto& c : members)
        if (!c.is_one()) return c;
    throw Error("NormSubgroup::nontrivial: group is trivial");
}

SquareClass normClassOf(const TameExtension& T, const SquareClass& xT) {
    // decompose through the unramified part L (degree f) under T (degree e over L):
    //   N_{T/L}: units land in the e-th power residue classes, pi_T -> (-1)^{e+1} pi_L
    //   N_{L/F}: unit nonsquares stay nonsquare (residue norm is surjective),
    //            pi_L = pi_F -> pi_F^f
    SquareClass out = SquareClass::one();
    if (xT.unit == UnitClass::nonsquare && T.e % 2 == 1)
        out = out * SquareClass::u();
    if (xT.valParity == 1) {
        SquareClass npi = SquareClass::minus_one_pow(
                              static_cast<std::int64_t>(T.f) * (T.e + 1), T.base) *
                          SquareClass(T.f % 2, UnitClass::square);
        out = out * npi;
    }
    return out;
}

NormSubgroup normSquareClassImage(const TameExtension& T) {
    NormSubgroup g;
    g.members.insert(SquareClass::one());
    std::vector<SquareClass> gens;
    for (const auto& c : {SquareClass::u(), SquareClass::pi(), SquareClass::u_pi()})
        gens.push_back(normClassOf(T, c));
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& a : std::set<SquareClass>(g.members))
            for (const auto& b : gens) {
                if (g.members.insert(a * b).second) grew = true;
            }
    }
    // Cross-check the order against the parity trichotomy on every call.
    int expect = (T.e % 2 == 1 && T.f % 2 == 1)   ? 4
                 : (T.e % 2 == 0 && T.f % 2 == 0) ? 1
                                                  : 2;
    if (g.order() != expect)
        throw Error("normSquareClassImage: order disagrees with the trichotomy (bug)");
    return g;
}

int quadraticSubextensionCount(const TameExtension& T) {
    if (T.e % 2 == 0 && T.f % 2 == 0) return 3;
    if ((static_cast<std::int64_t>(T.e) * T.f) % 2 == 1) return 0;
    return 1;
}

int yCardinality(const TameExtension& T) {
    int y = 4 / normSquareClassImage(T).order();
    if (y != 1 + quadraticSubextensionCount(T))
        throw Error("yCardinality: inconsistent with subextension count (bug)");
    return y;
}

SquareClassTransfer oddDegreeSquareClassTransfer(std::int64_t degree) {
    if (degree % 2 == 0)
        throw EvenDegree("oddDegreeSquareClassTransfer: degree must be odd");
    return SquareClassTransfer{degree};
}

} // namespace pf
