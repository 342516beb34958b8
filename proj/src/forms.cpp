#include "pf/forms.hpp"

namespace pf {

FormInvariants invariants(const DiagonalForm& f) {
    if (f.entries.empty()) throw Error("invariants: empty form");
    SquareClass disc = SquareClass::one();
    for (const auto& e : f.entries) disc = disc * e.square_class();
    int h = 1;
    for (std::size_t i = 0; i < f.entries.size(); ++i)
        for (std::size_t j = i + 1; j < f.entries.size(); ++j)
            h *= hilbert(f.entries[i].square_class(), f.entries[j].square_class(), f.k);
    return {f.dim(), disc, h};
}

bool equivalent(const DiagonalForm& f1, const DiagonalForm& f2) {
    if (!(f1.k == f2.k)) throw Error("equivalent: different residue fields");
    if (f1.dim() != f2.dim()) return false;
    FormInvariants a = invariants(f1), b = invariants(f2);
    if (f1.dim() == 1) return a.disc == b.disc;
    return a == b;
}

std::vector<FormInvariants> orbitCensus(int m, const ResidueField& k) {
    if (m < 1) throw Error("orbitCensus: m >= 1 required");
    std::vector<SquareClass> classes = {SquareClass::one(), SquareClass::u(),
                                        SquareClass::pi(), SquareClass::u_pi()};
    std::vector<FormInvariants> out;
    if (m == 1) {
        for (const auto& d : classes) out.push_back({1, d, 1});
        return out;
    }
    SquareClass minus1 = SquareClass::minus_one(k);
    for (const auto& d : classes)
        for (int h : {1, -1}) {
            if (m == 2 && d == minus1 && h == -1) continue;
            out.push_back({m, d, h});
        }
    return out;
}

std::optional<DiagonalForm> representative(int m, const SquareClass& disc, int hasse,
                                           const ResidueField& k) {
    if (m < 1) throw Error("representative: m >= 1 required");
    if (m == 1) {
        if (hasse != 1) return std::nullopt;
        DiagonalForm f{k, {{disc.valParity, disc.unit}}};
        return f;
    }
    if (m == 2 && disc == SquareClass::minus_one(k) && hasse == -1) return std::nullopt;
    // search entry tuples lexicographically: (val in {0,1}, unit in {sq, nsq})
    std::vector<DiagonalForm::Entry> opts = {{0, UnitClass::square},
                                             {0, UnitClass::nonsquare},
                                             {1, UnitClass::square},
                                             {1, UnitClass::nonsquare}};
    std::vector<int> idx(m, 0);
    while (true) {
        DiagonalForm f{k, {}};
        for (int i = 0; i < m; ++i) f.entries.push_back(opts[idx[i]]);
        FormInvariants got = invariants(f);
        if (got.disc == disc && got.hasse == hasse) return f;
        int i = m - 1;
        while (i >= 0 && idx[i] == 3) { idx[i] = 0; --i; }
        if (i < 0) break;
        ++idx[i];
    }
    return std::nullopt;  // unreachable for realizable inputs
}

DiagonalForm scale(const DiagonalForm& f, const SquareClass& c) {
    DiagonalForm g{f.k, {}};
    for (const auto& e : f.entries)
        g.entries.push_back({e.val + c.valParity, e.unit * c.unit});
    return g;
}

DiagonalForm classify_diagonal(const std::vector<PadicScalar>& diag) {
    if (diag.empty()) throw Error("classify_diagonal: empty");
    ResidueField k(diag[0].p());
    DiagonalForm f{k, {}};
    for (const auto& d : diag) {
        SquareClass c = d.square_class();
        f.entries.push_back({d.valuation(), c.unit});
    }
    return f;
}

FormInvariants matrix_invariants(const PadicMatrix& A) {
    auto res = diagonalize(A);
    return invariants(classify_diagonal(res.diag));
}

SquareClass disc_of_J(int m, const ResidueField& k) {
    return SquareClass::minus_one_pow(static_cast<std::int64_t>(m) * (m - 1) / 2, k);
}

PadicMatrix j_matrix(std::int64_t p, int m, int prec) {
    PadicMatrix J(p, m, m, prec);
    for (int i = 0; i < m; ++i) J.at(i, m - 1 - i) = PadicScalar(p, 1, prec);
    return J;
}

} // namespace pf
