#include <doctest.h>

#include <numeric>

#include "hk/intarith.hpp"
#include "hk/moduli.hpp"
#include "hk/oracle.hpp"

using namespace hk;
using namespace hk::lattice;
using namespace hk::moduli;

TEST_CASE("polarization validation") {
    CHECK_NOTHROW(polarization(k3m(145), 144, 12));
    CHECK_THROWS_AS(polarization(k3m(2), 1, 8), std::invalid_argument);   // 8 does not divide 2
    CHECK_THROWS_AS(polarization(og6(), 2, 3), std::invalid_argument);    // OG6: gamma in {1,2}
    CHECK_THROWS_AS(polarization(og10(), 6, 2), std::invalid_argument);   // OG10: gamma in {1,3}
    CHECK_THROWS_AS(polarization(k3m(2), 0, 1), std::invalid_argument);
}

TEST_CASE("local_census rejects raw numerics violating the divisibility hypothesis") {
    CHECK_THROWS_AS(local_census(k3m(4), PolarizationNumerics{1, 3}), std::invalid_argument);
    CHECK(local_census(k3m(4), polarization(k3m(4), 3, 3)).size() == 1);
}

TEST_CASE("existence on fixed inputs") {
    CHECK(exists_polarization(k3m(145), polarization(k3m(145), 144, 12)));
    CHECK(exists_polarization(og10(), polarization(og10(), 6, 3)));
    CHECK_FALSE(exists_polarization(og10(), polarization(og10(), 7, 3)));
    CHECK(exists_polarization(k3m(2), polarization(k3m(2), 3, 2)));
    CHECK_FALSE(exists_polarization(k3m(2), polarization(k3m(2), 1, 2)));
}

TEST_CASE("OG existence congruences over a sweep") {
    for (long n = 1; n <= 100; ++n) {
        CHECK(exists_polarization(og6(), polarization(og6(), n, 1)));
        CHECK(exists_polarization(og10(), polarization(og10(), n, 1)));
        CHECK(exists_polarization(og6(), polarization(og6(), n, 2)) ==
              (n % 4 == 2 || n % 4 == 3));
        CHECK(exists_polarization(og10(), polarization(og10(), n, 3)) == (n % 9 == 6));
    }
}

TEST_CASE("type counts on fixed inputs") {
    CHECK(count_polarization_types(k3m(145), polarization(k3m(145), 144, 12)) == 1);
    CHECK(count_polarization_types(k3m(7), polarization(k3m(7), 1, 1)) == 1);
    CHECK(count_polarization_types(og6(), polarization(og6(), 2, 2)) == 1);
    CHECK(count_polarization_types(og6(), polarization(og6(), 1, 2)) == 0);
}

TEST_CASE("component and orbit counts on fixed inputs") {
    CHECK(count_components(k3m(145), 12) == 2);
    CHECK(count_components(k3m(145), 1) == 1);
    CHECK(count_components(kumm(5), 1) == 1);
    CHECK(count_components(og6(), 2) == 1);
    CHECK(count_components(og10(), 3) == 1);
    CHECK(count_otilde_orbits(12) == 4);
    CHECK(count_otilde_orbits(1) == 1);
    CHECK(count_otilde_orbits(2) == 1);
}

TEST_CASE("component enumeration for the worked examples") {
    SUBCASE("K3^[145], square 288, div 12: one type with two components") {
        const auto dt = k3m(145);
        const auto classes = enumerate_components(dt, polarization(dt, 144, 12));
        REQUIRE(classes.size() == 1);
        REQUIRE(classes[0].size() == 2);
        CHECK(classes[0][0].residues_b == std::vector<Int>{1, 11});
        CHECK(classes[0][1].residues_b == std::vector<Int>{5, 7});
        CHECK(classes[0][0].h_star == std::vector<Int>{24, 264});
        CHECK(classes[0][1].h_star == std::vector<Int>{120, 168});
    }
    SUBCASE("K3^[7], square 2, div 1: connected") {
        const auto dt = k3m(7);
        const auto classes = enumerate_components(dt, polarization(dt, 1, 1));
        REQUIRE(classes.size() == 1);
        REQUIRE(classes[0].size() == 1);
        CHECK(classes[0][0].residues_b == std::vector<Int>{0});
        CHECK(classes[0][0].h_star == std::vector<Int>{0});
    }
    SUBCASE("K3^[2], square 6, div 2: b = 1") {
        const auto dt = k3m(2);
        const auto classes = enumerate_components(dt, polarization(dt, 3, 2));
        REQUIRE(classes.size() == 1);
        REQUIRE(classes[0].size() == 1);
        CHECK(classes[0][0].residues_b == std::vector<Int>{1});
    }
    SUBCASE("empty iff nonexistent") {
        const auto dt = k3m(2);
        CHECK(enumerate_components(dt, polarization(dt, 1, 2)).empty());
    }
}

TEST_CASE("census agrees with the brute-force oracle on a sweep") {
    // Both families for each mtilde; formulas depend only on mtilde but
    // the component grouping is asserted family by family.
    for (long mt = 1; mt <= 40; ++mt) {
        std::vector<DeformationType> dts{k3m(mt + 1)};
        if (mt >= 3) dts.push_back(kumm(mt - 1));
        for (const auto& dt : dts) {
            for (long n = 1; n <= 40; ++n) {
                const Int g = intarith::gcd(2 * Int(mt), 2 * Int(n));
                for (Int gamma = 1; gamma <= g; ++gamma) {
                    if (g % gamma != 0) continue;
                    const auto pn = polarization(dt, n, gamma);
                    const auto brute = oracle::brute_residues(mt, n, gamma);
                    const bool exists = exists_polarization(dt, pn);
                    REQUIRE(exists == !brute.empty());
                    REQUIRE(count_admissible_residues(dt, pn) == Int(brute.size()));

                    const auto classes = enumerate_components(dt, pn);
                    REQUIRE(Int(classes.size()) == count_polarization_types(dt, pn));
                    std::vector<Int> all_b;
                    for (const auto& cls : classes) {
                        REQUIRE(Int(cls.size()) == count_components(dt, gamma));
                        Int residues_in_class = 0;
                        for (const auto& comp : cls) {
                            residues_in_class += comp.residues_b.size();
                            for (const Int& b : comp.residues_b) all_b.push_back(b);
                            // residues are coprime, satisfy the census
                            // congruence, and close under negation;
                            // their h_* have exact order gamma
                            for (const Int& b : comp.residues_b) {
                                REQUIRE(intarith::gcd(b, gamma) == 1);
                                REQUIRE(Int(b * b * mt + n) % Int(gamma * gamma) == 0);
                                const Int nb = intarith::mod_floor(-b, gamma);
                                REQUIRE(std::find(comp.residues_b.begin(),
                                                  comp.residues_b.end(),
                                                  nb) != comp.residues_b.end());
                            }
                            for (const Int& h : comp.h_star) {
                                const Int ord = (2 * mt) / intarith::gcd(h, 2 * mt);
                                REQUIRE(ord == gamma);
                            }
                        }
                        REQUIRE(residues_in_class == count_otilde_orbits(gamma));
                    }
                    std::sort(all_b.begin(), all_b.end());
                    REQUIRE(all_b == brute);
                }
            }
        }
    }
}
