#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pf/involutions.hpp"
#include "pf/padic.hpp"

using namespace pf;

TEST_CASE("involution orbit counts and fiber sizes") {
    for (std::int64_t q : {3, 5}) {
        ResidueField k(q);
        CHECK(involutionOrbits(1, k).size() == 1);
        CHECK(involutionOrbits(2, k).size() == 4);
        CHECK(involutionOrbits(3, k).size() == 2);
        CHECK(involutionOrbits(4, k).size() == 5);
        CHECK(involutionOrbits(5, k).size() == 2);
        // fiber bookkeeping: orbit sizes sum to the census
        std::vector<std::size_t> censusSizes = {4, 7, 8, 8};
        for (int m = 1; m <= 4; ++m) {
            auto orbits = involutionOrbits(m, k);
            std::size_t total = 0;
            for (const auto& o : orbits) total += o.memberMatrixClasses.size();
            CHECK(total == censusSizes[m - 1]);
        }
        // m=3: two orbits of four classes each
        for (const auto& o : involutionOrbits(3, k)) CHECK(o.fiber_size() == 4);
        // m=4: fiber sizes (1,1,2,2,2)
        std::multiset<int> sizes;
        for (const auto& o : involutionOrbits(4, k)) sizes.insert(o.fiber_size());
        CHECK(sizes == std::multiset<int>{1, 1, 2, 2, 2});
    }
}

TEST_CASE("classification table") {
    for (std::int64_t q : {3, 5}) {
        ResidueField k(q);
        // J_m is split for every m >= 2
        for (int m = 2; m <= 6; ++m) {
            FormInvariants j{m, disc_of_J(m, k), 1};
            CHECK(classify(j, k).splitType == SplitType::split);
        }
        // m=1
        CHECK(classify(FormInvariants{1, SquareClass::u(), 1}, k).splitType == SplitType::dimOne);
        // m=4 with disc of J but hasse -1: not quasisplit
        CHECK(classify(FormInvariants{4, disc_of_J(4, k), -1}, k).splitType ==
              SplitType::notQuasisplit);
        // m=2 off the J-disc: quasisplit but not split
        SquareClass off = SquareClass::minus_one(k) * SquareClass::pi();
        CHECK(classify(FormInvariants{2, off, 1}, k).splitType == SplitType::quasisplitNotSplit);
    }
    // m=3 identity form over Q_3: scaling lands on J_3's class
    ResidueField k3(3);
    DiagonalForm id3{k3, {{0, UnitClass::square}, {0, UnitClass::square}, {0, UnitClass::square}}};
    CHECK(classify(id3).splitType == SplitType::split);
}

TEST_CASE("classify rejects the non-realizable binary combination") {
    ResidueField k(3);
    CHECK_THROWS(classify(FormInvariants{2, SquareClass::minus_one(k), -1}, k));
}

TEST_CASE("classify is scaling invariant") {
    std::mt19937_64 rng(61);
    std::vector<SquareClass> cs = {SquareClass::one(), SquareClass::u(), SquareClass::pi(),
                                   SquareClass::u_pi()};
    for (std::int64_t q : {3, 5}) {
        ResidueField k(q);
        for (int t = 0; t < 100; ++t) {
            int m = 1 + static_cast<int>(rng() % 4);
            auto census = orbitCensus(m, k);
            const FormInvariants& inv = census[rng() % census.size()];
            auto f = representative(m, inv.disc, inv.hasse, k);
            REQUIRE(f.has_value());
            SplitType base = classify(*f).splitType;
            for (const auto& c : cs) CHECK(classify(scale(*f, c)).splitType == base);
        }
    }
}

TEST_CASE("concrete scaling respects the orbit partition") {
    // scale explicit p-adic diagonal matrices by concrete class representatives
    // and check the matrix-level invariants land inside the same orbit
    for (std::int64_t p : {3, 5}) {
        ResidueField k(p);
        Gf F(p, 1);
        std::int64_t u = F.nonsquare();
        for (int m = 1; m <= 4; ++m) {
            auto orbits = involutionOrbits(m, k);
            for (const auto& inv : orbitCensus(m, k)) {
                auto f = representative(m, inv.disc, inv.hasse, k);
                REQUIRE(f.has_value());
                PadicMatrix A(p, m, m);
                for (int i = 0; i < m; ++i) {
                    std::int64_t val = 1;
                    for (int t = 0; t < f->entries[i].val; ++t) val *= p;
                    if (f->entries[i].unit == UnitClass::nonsquare) val *= u;
                    A.at(i, i) = PadicScalar(p, val);
                }
                const InvolutionOrbit* home = nullptr;
                for (const auto& o : orbits)
                    if (o.contains(m == 1 ? FormInvariants{1, inv.disc, 1} : inv)) home = &o;
                REQUIRE(home != nullptr);
                for (std::int64_t c : {std::int64_t(1), u, p, u * p}) {
                    FormInvariants got = matrix_invariants(A.scaled(PadicScalar(p, c)));
                    if (m == 1) got.hasse = 1;
                    CHECK(home->contains(got));
                }
            }
        }
    }
}

TEST_CASE("exactly one split class; one non-quasisplit for even m >= 4") {
    for (std::int64_t q : {3, 5, 9}) {
        ResidueField k(q);
        for (int m = 2; m <= 6; ++m) {
            auto orbits = involutionOrbits(m, k);
            int splits = 0, nqs = 0;
            for (const auto& o : orbits) {
                splits += o.splitType == SplitType::split;
                nqs += o.splitType == SplitType::notQuasisplit;
            }
            CHECK(splits == 1);
            if (m >= 4 && m % 2 == 0) CHECK(nqs == 1);
            if (m == 2) CHECK(nqs == 0);
        }
    }
}
