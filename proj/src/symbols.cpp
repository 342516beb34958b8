#include "pf/symbols.hpp"

namespace pf {

ResidueField::ResidueField(std::int64_t q_) : q(q_) {
    if (!odd_prime_power(q_, p, r))
        throw Error("ResidueField: q must be an odd prime power, got " + std::to_string(q_));
}

std::string SquareClass::str() const {
    if (valParity == 0)
        return unit == UnitClass::square ? "1" : "u";
    return unit == UnitClass::square ? "pi" : "u*pi";
}

SquareClass SquareClass::parse(const std::string& s) {
    if (s == "1") return one();
    if (s == "u") return u();
    if (s == "pi") return pi();
    if (s == "u*pi" || s == "upi" || s == "pi*u") return u_pi();
    throw Error("SquareClass: cannot parse '" + s + "' (want 1|u|pi|u*pi)");
}

bool isSquareResidue(const ResidueField& k, std::int64_t x) {
    Gf F(k.p, k.r);
    return F.is_square(x);
}

int hilbert(const SquareClass& a, const SquareClass& b, const ResidueField& k) {
    // Both units: ax^2 + by^2 = 1 always solvable for p odd.
    if (a.valParity == 0 && b.valParity == 0) return 1;
    // Unit against uniformizer class: decided by squareness of the unit.
    if (a.valParity == 0) return a.unit == UnitClass::square ? 1 : -1;
    if (b.valParity == 0) return b.unit == UnitClass::square ? 1 : -1;
    // Both uniformizer classes: +1 iff -e1/e2 is a residue square.
    UnitClass c = a.unit * b.unit;
    if (!k.minus_one_is_square()) c = c * UnitClass::nonsquare;
    return c == UnitClass::square ? 1 : -1;
}

} // namespace pf
