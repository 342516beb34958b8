#pragma once

#include <vector>

#include "pf/forms.hpp"

namespace pf {

/// GL_m(o)-orbit canonical form of a symmetric matrix: Jordan splitting into
/// scaled unimodular blocks pi^{a_i} diag(1,...,1,eps_i), a_1 > ... > a_r,
/// eps_i the residue discriminant class of the block.
struct JordanType {
    struct Block {
        std::int64_t a;
        int m;
        UnitClass eps;
        bool operator==(const Block& o) const { return a == o.a && m == o.m && eps == o.eps; }
    };
    std::vector<Block> blocks;  // strictly decreasing a

    bool operator==(const JordanType& o) const { return blocks == o.blocks; }
    bool operator<(const JordanType& o) const;
};

/// Group entries by valuation (descending); per group m_i = count and
/// eps_i = eps0 iff the product of the group's unit classes is nonsquare.
JordanType canonicalForm(const DiagonalForm& f);

/// Canonical form of a symmetric invertible p-adic matrix; the integral
/// unit-pivot diagonalization preserves the GL(o)-orbit.
JordanType matrixCanonicalForm(const PadicMatrix& A);

} // namespace pf
