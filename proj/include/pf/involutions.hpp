#pragma once

#include <string>
#include <vector>

#include "pf/forms.hpp"

namespace pf {

enum class SplitType { split, quasisplitNotSplit, notQuasisplit, dimOne };

std::string to_string(SplitType t);

/// A GL_m-orbit of S/F^x, i.e. an orthogonal involution class: the GL-orbits
/// of symmetric matrices mapping to it under scaling, with its split label.
struct InvolutionOrbit {
    int m;
    SplitType splitType;
    std::vector<FormInvariants> memberMatrixClasses;

    int fiber_size() const { return static_cast<int>(memberMatrixClasses.size()); }
    bool contains(const FormInvariants& inv) const;
};

struct OrthogonalClass {
    InvolutionOrbit orbit;
    SplitType splitType;  // = orbit.splitType
};

/// All GL_m-orbits of involutions: 1 / 4 / 2 / 5 for m = 1, 2, odd >= 3,
/// even >= 4. Computed constructively from the census by the scaling action
/// on explicit diagonal representatives (invariants recomputed, no closed
/// form).
std::vector<InvolutionOrbit> involutionOrbits(int m, const ResidueField& k);

/// Conjugacy class of the orthogonal group attached to a symmetric form.
OrthogonalClass classify(const FormInvariants& inv, const ResidueField& k);
OrthogonalClass classify(const DiagonalForm& f);

} // namespace pf
