#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pf/symbols.hpp"

using namespace pf;
using namespace pf::testing;

namespace {
const std::vector<SquareClass>& classes() {
    static std::vector<SquareClass> cs = {SquareClass::one(), SquareClass::u(),
                                          SquareClass::pi(), SquareClass::u_pi()};
    return cs;
}
} // namespace

TEST_CASE("residue squareness") {
    ResidueField k3(3);
    CHECK(isSquareResidue(k3, 1));
    CHECK_FALSE(isSquareResidue(k3, 2));  // squares mod 3 = {1}
    CHECK_THROWS_AS(isSquareResidue(k3, 0), ZeroInput);
    ResidueField k9(9);
    Gf F9(3, 2);
    std::int64_t g = F9.generator();
    CHECK(isSquareResidue(k9, F9.mul(g, g)));
    CHECK_FALSE(isSquareResidue(k9, g));
}

TEST_CASE("square class algebra and tokens") {
    CHECK(SquareClass::parse("u*pi") == SquareClass::u() * SquareClass::pi());
    CHECK((SquareClass::pi() * SquareClass::pi()).is_one());
    CHECK(SquareClass::minus_one(ResidueField(5)) == SquareClass::one());
    CHECK(SquareClass::minus_one(ResidueField(3)) == SquareClass::u());
    for (const auto& c : classes()) CHECK(SquareClass::parse(c.str()) == c);
}

TEST_CASE("hilbert symbol pinned values") {
    ResidueField k3(3), k5(5);
    for (const auto& x : classes()) {
        CHECK(hilbert(SquareClass::one(), x, k3) == 1);
        CHECK(hilbert(SquareClass::one(), x, k5) == 1);
    }
    CHECK(hilbert(SquareClass::u(), SquareClass::pi(), k3) == -1);
    CHECK(hilbert(SquareClass::u(), SquareClass::pi(), k5) == -1);
    CHECK(hilbert(SquareClass::pi(), SquareClass::pi(), k3) == -1);  // -1 nonsquare mod 3
    CHECK(hilbert(SquareClass::pi(), SquareClass::pi(), k5) == 1);   // -1 = 4 square mod 5
}

TEST_CASE("bimultiplicativity, symmetry, Hil(a,-a)=1, nondegeneracy") {
    for (std::int64_t q : {3, 5, 7, 9, 13}) {
        ResidueField k(q);
        for (const auto& a : classes())
            for (const auto& b : classes()) {
                CHECK(hilbert(a, b, k) == hilbert(b, a, k));
                for (const auto& c : classes())
                    CHECK(hilbert(a, b * c, k) == hilbert(a, b, k) * hilbert(a, c, k));
            }
        SquareClass m1 = SquareClass::minus_one(k);
        for (const auto& a : classes()) CHECK(hilbert(a, m1 * a, k) == 1);
        for (const auto& a : classes()) {
            if (a.is_one()) continue;
            bool hit = false;
            for (const auto& b : classes()) hit = hit || hilbert(a, b, k) == -1;
            CHECK(hit);
        }
    }
}

TEST_CASE("agreement with the Hensel-liftable solvability oracle") {
    for (std::int64_t p : {3, 5, 7, 13}) {
        ResidueField k(p);
        for (const auto& a : classes())
            for (const auto& b : classes()) {
                bool solvable = hilbert_solvable(p, rep_of_class(p, a), rep_of_class(p, b));
                INFO("p=", p, " a=", a.str(), " b=", b.str());
                CHECK((hilbert(a, b, k) == 1) == solvable);
            }
    }
}
