#pragma once

#include <optional>
#include <vector>

#include "pf/padic.hpp"
#include "pf/symbols.hpp"

namespace pf {

/// Symbolic nondegenerate symmetric form over a local field with residue
/// field k: an ordered list of diagonal entries (valuation, unit class).
struct DiagonalForm {
    ResidueField k;
    struct Entry {
        std::int64_t val;
        UnitClass unit;
        SquareClass square_class() const {
            return SquareClass(static_cast<int>(((val % 2) + 2) % 2), unit);
        }
    };
    std::vector<Entry> entries;

    int dim() const { return static_cast<int>(entries.size()); }
};

/// Complete GL_m-orbit data for m >= 2 (for m = 1 the square class itself).
struct FormInvariants {
    int dim;
    SquareClass disc;
    int hasse;  // +1 / -1

    bool operator==(const FormInvariants& o) const {
        return dim == o.dim && disc == o.disc && hasse == o.hasse;
    }
    bool operator<(const FormInvariants& o) const {
        if (dim != o.dim) return dim < o.dim;
        if (!(disc == o.disc)) return disc < o.disc;
        return hasse < o.hasse;
    }
};

/// disc = product of entry classes, hasse = prod_{i<j} Hil(a_i, a_j)
/// (strictly i < j). Order-independent.
FormInvariants invariants(const DiagonalForm& f);

/// Same GL-orbit: same dim and (m = 1: same square class; m >= 2: same disc
/// and Hasse). Dimension mismatch is a false return, not an error.
bool equivalent(const DiagonalForm& f1, const DiagonalForm& f2);

/// Realizable (disc, hasse) pairs: 4 / 7 / 8 / 8 ... for m = 1, 2, >= 3.
std::vector<FormInvariants> orbitCensus(int m, const ResidueField& k);

/// A diagonal form with the requested invariants, or nullopt when not
/// realizable: (m = 1, hasse = -1) and (m = 2, disc = class(-1), hasse = -1).
/// Deterministic: lexicographic search over (valuation in {0,1}, unitClass).
std::optional<DiagonalForm> representative(int m, const SquareClass& disc, int hasse,
                                           const ResidueField& k);

/// Every entry multiplied by (the representative of) c; invariants of the
/// result are recomputed from the scaled entries, never via a closed form.
DiagonalForm scale(const DiagonalForm& f, const SquareClass& c);

/// Entries of a p-adic diagonalization classified into a symbolic form.
DiagonalForm classify_diagonal(const std::vector<PadicScalar>& diag);

/// Invariants of a symmetric p-adic matrix via integral congruence
/// diagonalization.
FormInvariants matrix_invariants(const PadicMatrix& A);

/// disc of J_m (antidiagonal ones): class of (-1)^{m(m-1)/2}.
SquareClass disc_of_J(int m, const ResidueField& k);

/// The J_m form as a p-adic matrix.
PadicMatrix j_matrix(std::int64_t p, int m, int prec = kDefaultPrecision);

} // namespace pf
