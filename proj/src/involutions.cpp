#include "pf/involutions.hpp"

#include <algorithm>

namespace pf {

std::string to_string(SplitType t) {
    switch (t) {
        case SplitType::split: return "split";
        case SplitType::quasisplitNotSplit: return "quasisplitNotSplit";
        case SplitType::notQuasisplit: return "notQuasisplit";
        case SplitType::dimOne: return "dimOne";
    }
    return "?";
}

bool InvolutionOrbit::contains(const FormInvariants& inv) const {
    return std::find(memberMatrixClasses.begin(), memberMatrixClasses.end(), inv) !=
           memberMatrixClasses.end();
}

namespace {

const std::vector<SquareClass>& all_classes() {
    static const std::vector<SquareClass> cs = {SquareClass::one(), SquareClass::u(),
                                                SquareClass::pi(), SquareClass::u_pi()};
    return cs;
}

/// invariants of scale(representative(inv), c); scaling acts on an explicit
/// diagonal representative and invariants are recomputed
FormInvariants scaled_invariants(const FormInvariants& inv, const SquareClass& c,
                                 const ResidueField& k) {
    auto rep = representative(inv.dim, inv.disc, inv.hasse, k);
    if (!rep) throw Error("scaled_invariants: non-realizable class");
    return invariants(scale(*rep, c));
}

SplitType split_type_of(const FormInvariants& inv, const ResidueField& k) {
    const int m = inv.dim;
    if (m == 1) return SplitType::dimOne;
    if (m == 2)
        return (inv.disc == SquareClass::minus_one(k)) ? SplitType::split
                                                       : SplitType::quasisplitNotSplit;
    if (m % 2 == 1) {
        // scale to the disc of J_m (possible, m odd), then compare Hasse with
        // Hasse(J_m) = +1 (integral form)
        SquareClass target = disc_of_J(m, k);
        for (const auto& c : all_classes()) {
            FormInvariants got = scaled_invariants(inv, c, k);
            if (got.disc == target)
                return (got.hasse == 1) ? SplitType::split : SplitType::notQuasisplit;
        }
        throw Error("split_type_of: odd-m scaling failed (bug)");
    }
    SquareClass jd = disc_of_J(m, k);
    if (inv.disc == jd)
        return (inv.hasse == 1) ? SplitType::split : SplitType::notQuasisplit;
    return SplitType::quasisplitNotSplit;
}

} // namespace

std::vector<InvolutionOrbit> involutionOrbits(int m, const ResidueField& k) {
    auto census = orbitCensus(m, k);
    std::vector<InvolutionOrbit> orbits;
    std::vector<bool> used(census.size(), false);
    for (std::size_t i = 0; i < census.size(); ++i) {
        if (used[i]) continue;
        InvolutionOrbit orb;
        orb.m = m;
        for (const auto& c : all_classes()) {
            FormInvariants got = scaled_invariants(census[i], c, k);
            for (std::size_t j = 0; j < census.size(); ++j) {
                bool same = (m == 1) ? (census[j].disc == got.disc) : (census[j] == got);
                if (same && !used[j]) {
                    used[j] = true;
                    orb.memberMatrixClasses.push_back(census[j]);
                }
            }
        }
        orb.splitType = split_type_of(census[i], k);
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

OrthogonalClass classify(const FormInvariants& inv, const ResidueField& k) {
    if (inv.dim == 2 && inv.disc == SquareClass::minus_one(k) && inv.hasse == -1)
        throw Error("classify: (m=2, disc=-1, hasse=-1) is not realizable");
    OrthogonalClass out;
    out.splitType = split_type_of(inv, k);
    for (auto& orb : involutionOrbits(inv.dim, k)) {
        bool member = false;
        for (const auto& mc : orb.memberMatrixClasses) {
            bool same = (inv.dim == 1) ? (mc.disc == inv.disc) : (mc == inv);
            if (same) { member = true; break; }
        }
        if (member) {
            out.orbit = std::move(orb);
            return out;
        }
    }
    throw Error("classify: invariants not in the census");
}

OrthogonalClass classify(const DiagonalForm& f) { return classify(invariants(f), f.k); }

} // namespace pf
