#pragma once

#include <cstdint>
#include <string>

#include "pf/gf.hpp"

namespace pf {

/// Residue field descriptor of a local field: q = p^r odd.
struct ResidueField {
    std::int64_t q;
    std::int64_t p;
    int r;

    explicit ResidueField(std::int64_t q_);
    /// Square iff q = 1 mod 4; this single bit drives the pi-pi case of the
    /// Hilbert symbol.
    bool minus_one_is_square() const { return q % 4 == 1; }
    bool operator==(const ResidueField& o) const { return q == o.q; }
};

enum class UnitClass { square, nonsquare };

inline UnitClass operator*(UnitClass a, UnitClass b) {
    return a == b ? UnitClass::square : UnitClass::nonsquare;
}

/// An element of F^x / F^x2 = {1, u, pi, u*pi}: valuation parity plus the
/// square class of the unit part. Multiplication is componentwise in (Z/2)^2.
struct SquareClass {
    int valParity = 0;  // 0 or 1
    UnitClass unit = UnitClass::square;

    SquareClass() = default;
    SquareClass(int vp, UnitClass u) : valParity(((vp % 2) + 2) % 2), unit(u) {}

    bool is_one() const { return valParity == 0 && unit == UnitClass::square; }
    SquareClass operator*(const SquareClass& o) const {
        return SquareClass(valParity ^ o.valParity, unit * o.unit);
    }
    bool operator==(const SquareClass& o) const {
        return valParity == o.valParity && unit == o.unit;
    }
    bool operator<(const SquareClass& o) const {
        if (valParity != o.valParity) return valParity < o.valParity;
        return unit == UnitClass::square && o.unit == UnitClass::nonsquare;
    }

    static SquareClass one() { return {0, UnitClass::square}; }
    static SquareClass u() { return {0, UnitClass::nonsquare}; }
    static SquareClass pi() { return {1, UnitClass::square}; }
    static SquareClass u_pi() { return {1, UnitClass::nonsquare}; }
    /// Class of -1 in the field with residue field k.
    static SquareClass minus_one(const ResidueField& k) {
        return {0, k.minus_one_is_square() ? UnitClass::square : UnitClass::nonsquare};
    }
    /// Power of minus_one; n may be any integer.
    static SquareClass minus_one_pow(std::int64_t n, const ResidueField& k) {
        return (n % 2) ? minus_one(k) : one();
    }

    /// Serialized as one of "1", "u", "pi", "u*pi".
    std::string str() const;
    static SquareClass parse(const std::string& s);
};

/// x in (F_q^x)^2 decided by x^((q-1)/2) = 1. x is an element encoding of
/// Gf(q). Throws ZeroInput.
bool isSquareResidue(const ResidueField& k, std::int64_t x);

/// Hilbert symbol on square classes of a local field with residue field k
/// (p odd). Total on the 4x4 table; symmetric and bimultiplicative.
int hilbert(const SquareClass& a, const SquareClass& b, const ResidueField& k);

} // namespace pf
