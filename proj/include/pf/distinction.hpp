#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pf/involutions.hpp"
#include "pf/tame.hpp"

namespace pf {

enum class Case { I, II, III };

std::string to_string(Case c);

/// The invariants that determine distinction for a supercuspidal of GL_n(F):
/// n = m d, the tame parameter field T (given by (e, f) over the residue
/// field), with t = ef dividing d and d/t a power of p, and the central sign
/// w_pi(-1).
struct ReprInvariants {
    int n;
    int d;
    int m;
    TameExtension T;
    int centralSign;  // +1 / -1

    ReprInvariants(int n_, int d_, int m_, TameExtension T_, int centralSign_);
    /// T_m: the unramified extension of degree m over T, i.e. (e, f*m).
    TameExtension Tm() const { return TameExtension(T.e, T.f * m, T.base); }
};

struct ClassVerdict {
    OrthogonalClass cls;
    bool distinguished;
    int dim;              // 0..3
    int matrixClassCount; // fiber size of the involution orbit
    int doubleCosets;     // 0..3
};

struct DistinctionReport {
    Case caseLabel;
    int centralSign;
    std::vector<ClassVerdict> perClass;
    int totalDim;  // sum of dim * matrixClassCount
};

/// Case I/II/III according to the norm image of T_m having order 4/2/1.
Case caseOf(const ReprInvariants& rep);

/// The per-orthogonal-class distinction verdicts and Hom dimensions:
/// nothing when w_pi(-1) = -1; otherwise split gets dim 1/2/3 by case, the
/// case II class with disc = (-1)^{n(n-1)/2} * (nontrivial norm class) gets
/// dim 1, and in case III the non-quasisplit class gets dim 1.
DistinctionReport distinguishedClasses(const ReprInvariants& rep);

/// Double cosets contributing to distinction for one class: case I split 1;
/// case II split 2, special quasisplit 1; case III split 3, non-quasisplit 1.
int doubleCosetCount(const ReprInvariants& rep, const OrthogonalClass& cls);

/// Symbolic block descriptor for the representative symmetric matrices; the
/// per-block scalars are square-class labels in E.
struct EpsilonDescriptor {
    int d;
    int m;
    std::vector<SquareClass> blockScalars;  // length m; entry i scales the i-th J_d block
    std::string sideCondition;
    // case III.b writes "eps0 in o_E^x" without a nonsquare constraint: the
    // last block's unit twist is pinned only through the recorded Hasse
    // condition, so instantiation may toggle it
    bool lastUnitFree = false;

    std::string str() const;
};

/// The representative family for a distinguished (or case-defining) class,
/// following the case table: J_{d,m}; diag(J_d,...,J_d,J_d eps0);
/// diag(J_d eps,...,J_d eps); diag(J_d piE,...,J_d piE eps0). In case II.b
/// both qualifying eps are emitted when both satisfy the norm condition.
std::vector<EpsilonDescriptor> epsilonZeroRepresentatives(const ReprInvariants& rep,
                                                          const OrthogonalClass& cls);

/// |O^{E_m}|: the number of E_m^x-orbits of involutions tau with E_m
/// tau-split = yCardinality(T_m) = 1 / 2 / 4 in cases I / II / III.
int tauSplitOrbitCount(const ReprInvariants& rep);

/// Concrete post-check of a descriptor when construction is feasible (E = T
/// tame, d <= 6): build diag(J_d iota(x_1), ..., J_d iota(x_m)) through the
/// J-symmetric embedding, trying both uniformizer orientations where the
/// side condition permits a choice, and confirm that some instantiation
/// classifies to the intended split type. nullopt when not feasible.
std::optional<bool> verifyEpsilonDescriptor(const ReprInvariants& rep,
                                            const OrthogonalClass& cls,
                                            const EpsilonDescriptor& desc);

} // namespace pf
