#include <doctest.h>

#include "hk/jsonio.hpp"

using namespace hk;
using nlohmann::json;

TEST_CASE("big integers render as decimal strings, small ones as numbers") {
    CHECK(json_int(Int(42)).is_number_integer());
    CHECK(json_int(Int(-7)).is_number_integer());
    const Int big = Int("9223372036854775807") + 1;  // 2^63
    CHECK(json_int(big).is_string());
    CHECK(json_int(big).get<std::string>() == "9223372036854775808");
    CHECK(int_from_json(json_int(big)) == big);
    CHECK(int_from_json(json_int(Int(-123))) == -123);
}

TEST_CASE("wall type round-trip") {
    const auto w = walls::make_wall(lattice::k3m(145), 84, -1);
    const json j = w;
    CHECK(j.at("square") == -15264);
    CHECK(j.at("k") == 84);
    const auto back = j.get<walls::WallType>();
    CHECK(back == w);
}

TEST_CASE("component class round-trip") {
    const auto dt = lattice::k3m(145);
    const auto classes =
        moduli::enumerate_components(dt, moduli::polarization(dt, 144, 12));
    for (const auto& cls : classes)
        for (const auto& comp : cls) {
            const json j = comp;
            CHECK(j.get<moduli::ComponentClass>() == comp);
        }
}

TEST_CASE("Heegner class round-trip") {
    const auto dt = lattice::k3m(2);
    for (const auto& h : periodmap::avoided_heegner(dt, moduli::polarization(dt, 5, 1))) {
        const json j = h;
        CHECK(j.get<periodmap::HeegnerClass>() == h);
    }
}

TEST_CASE("image comparison report round-trip") {
    const auto dt = lattice::k3m(7);
    for (const auto& rep : periodmap::compare_images(dt, moduli::polarization(dt, 1, 1))) {
        const json j = rep;
        CHECK(j.at("verdict") == "not-G-invariant");
        CHECK(j.get<periodmap::ImageComparisonReport>() == rep);
    }
}

TEST_CASE("surrogate witness round-trip") {
    const auto w = oracle::surrogate_wall_search(1, 3, 2, 0, -1, 4);
    REQUIRE(w.has_value());
    const json j = *w;
    CHECK(j.get<oracle::SurrogateWitness>() == *w);
}

TEST_CASE("prime local data round-trip") {
    const auto dt = lattice::k3m(145);
    for (const auto& loc : moduli::local_census(dt, moduli::polarization(dt, 144, 12))) {
        const json j = loc;
        CHECK(j.get<moduli::PrimeLocal>() == loc);
    }
}

TEST_CASE("deformation type round-trip") {
    for (const auto& dt : {lattice::k3m(37), lattice::kumm(4), lattice::og6(), lattice::og10()}) {
        const json j = dt;
        CHECK(j.get<lattice::DeformationType>() == dt);
    }
}
