#include "pf/integral.hpp"

#include <algorithm>
#include <map>

namespace pf {

bool JordanType::operator<(const JordanType& o) const {
    auto key = [](const Block& b) {
        return std::tuple<std::int64_t, int, int>(b.a, b.m, b.eps == UnitClass::nonsquare);
    };
    return std::lexicographical_compare(
        blocks.begin(), blocks.end(), o.blocks.begin(), o.blocks.end(),
        [&](const Block& x, const Block& y) { return key(x) < key(y); });
}

JordanType canonicalForm(const DiagonalForm& f) {
    std::map<std::int64_t, std::pair<int, UnitClass>, std::greater<>> groups;
    for (const auto& e : f.entries) {
        auto& g = groups.try_emplace(e.val, 0, UnitClass::square).first->second;
        g.first += 1;
        g.second = g.second * e.unit;
    }
    JordanType jt;
    for (const auto& [a, g] : groups) jt.blocks.push_back({a, g.first, g.second});
    return jt;
}

JordanType matrixCanonicalForm(const PadicMatrix& A) {
    auto res = diagonalize(A);
    return canonicalForm(classify_diagonal(res.diag));
}

} // namespace pf
