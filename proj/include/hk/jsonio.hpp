#pragma once

#include <cstdint>
#include <json.hpp>

#include "hk/intarith.hpp"
#include "hk/lattice.hpp"
#include "hk/moduli.hpp"
#include "hk/oracle.hpp"
#include "hk/periodmap.hpp"
#include "hk/walls.hpp"

// JSON mapping for the domain types: lower_snake_case keys, integers as
// plain JSON numbers when they fit in 64 bits and as decimal strings
// beyond that, so consumers without big-integer support stay safe.

namespace hk {

inline nlohmann::json json_int(const Int& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

inline Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(static_cast<long>(j.get<std::int64_t>()));
}

}  // namespace hk

namespace hk::intarith {

inline void to_json(nlohmann::json& j, const PrimePower& pp) {
    j = {{"p", json_int(pp.p)}, {"e", pp.e}};
}

inline void from_json(const nlohmann::json& j, PrimePower& pp) {
    pp.p = int_from_json(j.at("p"));
    pp.e = j.at("e").get<unsigned long>();
}

}  // namespace hk::intarith

namespace hk::lattice {

inline void to_json(nlohmann::json& j, const DeformationType& dt) {
    j = {{"family", family_name(dt.family)}};
    if (dt.family == Family::K3m || dt.family == Family::Kumm) j["m"] = json_int(dt.m);
}

inline void from_json(const nlohmann::json& j, DeformationType& dt) {
    const std::string fam = j.at("family").get<std::string>();
    if (fam == "k3m")
        dt = k3m(int_from_json(j.at("m")));
    else if (fam == "kumm")
        dt = kumm(int_from_json(j.at("m")));
    else if (fam == "og6")
        dt = og6();
    else if (fam == "og10")
        dt = og10();
    else
        throw std::invalid_argument("unknown family: " + fam);
}

inline void to_json(nlohmann::json& j, const MonodromySummary& s) {
    j = {{"family", s.family},
         {"lattice", s.lattice},
         {"discriminant_group", s.discriminant_group},
         {"monodromy", s.monodromy}};
}

inline void from_json(const nlohmann::json& j, MonodromySummary& s) {
    s.family = j.at("family").get<std::string>();
    s.lattice = j.at("lattice").get<std::string>();
    s.discriminant_group = j.at("discriminant_group").get<std::string>();
    s.monodromy = j.at("monodromy").get<std::string>();
}

}  // namespace hk::lattice

namespace hk::moduli {

inline void to_json(nlohmann::json& j, const PolarizationNumerics& pn) {
    j = {{"square", json_int(2 * pn.n)}, {"n", json_int(pn.n)}, {"div", json_int(pn.gamma)}};
}

inline void from_json(const nlohmann::json& j, PolarizationNumerics& pn) {
    pn.n = int_from_json(j.at("n"));
    pn.gamma = int_from_json(j.at("div"));
}

inline void to_json(nlohmann::json& j, const ComponentClass& c) {
    nlohmann::json rb = nlohmann::json::array();
    for (const Int& b : c.residues_b) rb.push_back(json_int(b));
    nlohmann::json hs = nlohmann::json::array();
    for (const Int& h : c.h_star) hs.push_back(json_int(h));
    j = {{"residues_b", rb}, {"h_star", hs}, {"t_index", c.t_index}};
}

inline void from_json(const nlohmann::json& j, ComponentClass& c) {
    c.residues_b.clear();
    for (const auto& b : j.at("residues_b")) c.residues_b.push_back(int_from_json(b));
    c.h_star.clear();
    for (const auto& h : j.at("h_star")) c.h_star.push_back(int_from_json(h));
    c.t_index = j.at("t_index").get<int>();
}

inline void to_json(nlohmann::json& j, const PrimeLocal& loc) {
    j = {{"p", json_int(loc.p)},   {"v_mtilde", loc.v_mt}, {"v_n", loc.v_n},
         {"alpha", loc.alpha},     {"beta", loc.beta},     {"exists", loc.exists},
         {"m_p", json_int(loc.m_p)}, {"n_p", json_int(loc.n_p)}};
}

inline void from_json(const nlohmann::json& j, PrimeLocal& loc) {
    loc.p = int_from_json(j.at("p"));
    loc.v_mt = j.at("v_mtilde").get<unsigned long>();
    loc.v_n = j.at("v_n").get<unsigned long>();
    loc.alpha = j.at("alpha").get<unsigned long>();
    loc.beta = j.at("beta").get<unsigned long>();
    loc.exists = j.at("exists").get<bool>();
    loc.m_p = int_from_json(j.at("m_p"));
    loc.n_p = int_from_json(j.at("n_p"));
}

}  // namespace hk::moduli

namespace hk::walls {

inline void to_json(nlohmann::json& j, const WallType& w) {
    j = {{"k", json_int(w.k)},
         {"c", json_int(w.c)},
         {"l", json_int(w.l)},
         {"d", json_int(w.d)},
         {"div_kappa", json_int(w.div_kappa)},
         {"square", json_int(2 * w.l)}};
}

inline void from_json(const nlohmann::json& j, WallType& w) {
    w.k = int_from_json(j.at("k"));
    w.c = int_from_json(j.at("c"));
    w.l = int_from_json(j.at("l"));
    w.d = int_from_json(j.at("d"));
    w.div_kappa = int_from_json(j.at("div_kappa"));
}

inline void to_json(nlohmann::json& j, const OgWallEntry& e) {
    j = {{"square", json_int(e.square)}};
    if (e.required_div)
        j["div"] = json_int(*e.required_div);
    else
        j["div"] = nullptr;
}

inline void from_json(const nlohmann::json& j, OgWallEntry& e) {
    e.square = int_from_json(j.at("square"));
    if (j.at("div").is_null())
        e.required_div = std::nullopt;
    else
        e.required_div = int_from_json(j.at("div"));
}

}  // namespace hk::walls

namespace hk::periodmap {

inline void to_json(nlohmann::json& j, const HeegnerClass& h) {
    j = {{"wall", h.wall}, {"disc", json_int(h.disc)}};
}

inline void from_json(const nlohmann::json& j, HeegnerClass& h) {
    h.wall = j.at("wall").get<walls::WallType>();
    h.disc = int_from_json(j.at("disc"));
}

inline void to_json(nlohmann::json& j, const BrokenWall& b) {
    j = {{"k", json_int(b.k)},
         {"c", json_int(b.c)},
         {"l", json_int(b.l)},
         {"k_prime", json_int(b.k_prime)},
         {"c_prime", json_int(b.c_prime)}};
}

inline void from_json(const nlohmann::json& j, BrokenWall& b) {
    b.k = int_from_json(j.at("k"));
    b.c = int_from_json(j.at("c"));
    b.l = int_from_json(j.at("l"));
    b.k_prime = int_from_json(j.at("k_prime"));
    b.c_prime = int_from_json(j.at("c_prime"));
}

inline void to_json(nlohmann::json& j, const ImageComparisonReport& r) {
    j = {{"unit", json_int(r.unit)},
         {"t_index", r.t_index},
         {"component_action", action_name(r.action)},
         {"broken_walls", r.broken_walls},
         {"broken_total", json_int(r.broken_total)},
         {"verdict", verdict_name(r.verdict)},
         {"deck_group_bound", json_int(r.deck_bound)}};
}

inline void from_json(const nlohmann::json& j, ImageComparisonReport& r) {
    r.unit = int_from_json(j.at("unit"));
    r.t_index = j.at("t_index").get<int>();
    r.action = j.at("component_action").get<std::string>() == "fix" ? ComponentAction::Fix
                                                                    : ComponentAction::Swap;
    r.broken_walls = j.at("broken_walls").get<std::vector<BrokenWall>>();
    r.broken_total = int_from_json(j.at("broken_total"));
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "identical-images")
        r.verdict = Verdict::IdenticalImages;
    else if (v == "different-images")
        r.verdict = Verdict::DifferentImages;
    else if (v == "not-G-invariant")
        r.verdict = Verdict::NotGInvariant;
    else
        r.verdict = Verdict::Inconclusive;
    r.deck_bound = int_from_json(j.at("deck_group_bound"));
}

}  // namespace hk::periodmap

namespace hk::oracle {

inline void to_json(nlohmann::json& j, const SurrogateWitness& w) {
    nlohmann::json h = nlohmann::json::array(), kappa = nlohmann::json::array();
    for (const Int& x : w.h) h.push_back(json_int(x));
    for (const Int& x : w.kappa) kappa.push_back(json_int(x));
    j = {{"h", h}, {"kappa", kappa}};
}

inline void from_json(const nlohmann::json& j, SurrogateWitness& w) {
    for (int i = 0; i < 5; ++i) {
        w.h[i] = int_from_json(j.at("h").at(i));
        w.kappa[i] = int_from_json(j.at("kappa").at(i));
    }
}

}  // namespace hk::oracle
