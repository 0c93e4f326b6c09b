// hk: census, wall and period-map invariants for polarized hyperkähler
// moduli, over exact arbitrary-precision arithmetic.
//
// Exit codes: 0 success, 1 domain nonexistence, 2 usage error,
// 3 internal invariant breach.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>

#include "hk/jsonio.hpp"

using namespace hk;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonexistent = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Args {
    std::string family;
    std::string m;
    std::string square;
    std::string div;
    std::string format = "table";
    // oracle-only raw parameters
    std::string mt;
    std::string n;
    std::string k;
    std::string l;
    long bound = 8;
};

Int parse_int(const std::string& s, const std::string& what) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(what, "not an integer: " + s);
    }
}

lattice::DeformationType deformation_type(const Args& a) {
    const bool needs_m = a.family == "k3m" || a.family == "kumm";
    if (needs_m && a.m.empty())
        throw CLI::RequiredError("--m (required for k3m/kumm)");
    if (!needs_m && !a.m.empty())
        throw CLI::ValidationError("--m", "not applicable for " + a.family);
    if (a.family == "k3m") return lattice::k3m(parse_int(a.m, "--m"));
    if (a.family == "kumm") return lattice::kumm(parse_int(a.m, "--m"));
    if (a.family == "og6") return lattice::og6();
    if (a.family == "og10") return lattice::og10();
    throw CLI::ValidationError("--family", "unknown family " + a.family);
}

Int half_square(const Args& a) {
    const Int square = parse_int(a.square, "--square");
    if (square <= 0 || square % 2 != 0)
        throw CLI::ValidationError("--square", "must be an even positive integer (h^2 = 2n)");
    return square / 2;
}

moduli::PolarizationNumerics numerics(const Args& a, const lattice::DeformationType& dt) {
    return moduli::polarization(dt, half_square(a), parse_int(a.div, "--div"));
}

bool json_mode(const Args& a) {
    return a.format == "json";
}

void emit(const json& j) {
    std::cout << j.dump(2) << "\n";
}

int cmd_info(const Args& a) {
    const auto dt = deformation_type(a);
    const auto s = lattice::monodromy_summary(dt);
    if (json_mode(a)) {
        json j = s;
        const auto dg = lattice::discriminant_group(dt);
        j["discriminant_order"] = json_int(dg.order);
        j["discriminant_cyclic"] = dg.cyclic;
        emit(j);
    } else {
        std::printf("family:              %s\n", s.family.c_str());
        std::printf("lattice:             %s\n", s.lattice.c_str());
        std::printf("discriminant group:  %s\n", s.discriminant_group.c_str());
        std::printf("monodromy group:     %s\n", s.monodromy.c_str());
    }
    return kExitOk;
}

json polarization_report(const lattice::DeformationType& dt,
                         const moduli::PolarizationNumerics& pn) {
    json j;
    j["family"] = lattice::family_name(dt.family);
    if (dt.family == lattice::Family::K3m || dt.family == lattice::Family::Kumm)
        j["m"] = json_int(dt.m);
    j["square"] = json_int(2 * pn.n);
    j["div"] = json_int(pn.gamma);
    j["exists"] = moduli::exists_polarization(dt, pn);
    j["polarization_types"] = json_int(moduli::count_polarization_types(dt, pn));
    if (dt.family == lattice::Family::K3m || dt.family == lattice::Family::Kumm) {
        j["mtilde"] = json_int(lattice::mtilde(dt));
        j["otilde_orbits_per_type"] = json_int(moduli::count_otilde_orbits(pn.gamma));
        j["admissible_residues"] = json_int(moduli::count_admissible_residues(dt, pn));
        j["primes"] = moduli::local_census(dt, pn);
    }
    return j;
}

int cmd_polarizations(const Args& a) {
    const auto dt = deformation_type(a);
    const auto pn = numerics(a, dt);
    const json j = polarization_report(dt, pn);
    if (json_mode(a)) {
        emit(j);
    } else {
        std::printf("%s, square %s, divisibility %s\n", lattice::display_name(dt).c_str(),
                    Int(2 * pn.n).get_str().c_str(), pn.gamma.get_str().c_str());
        std::printf("exists:              %s\n", j["exists"].get<bool>() ? "yes" : "no");
        std::cout << "polarization types:  " << j["polarization_types"] << "\n";
        if (j.contains("primes") && !j["primes"].empty()) {
            std::printf("  %-8s %-6s %-6s %-7s %-6s %-7s %-8s %-8s\n", "p", "v_mt", "v_n",
                        "alpha", "beta", "exists", "M_p", "N_p");
            for (const auto& loc : j["primes"])
                std::printf("  %-8s %-6lu %-6lu %-7lu %-6lu %-7s %-8s %-8s\n",
                            loc["p"].dump().c_str(), loc["v_mtilde"].get<unsigned long>(),
                            loc["v_n"].get<unsigned long>(), loc["alpha"].get<unsigned long>(),
                            loc["beta"].get<unsigned long>(),
                            loc["exists"].get<bool>() ? "yes" : "no",
                            loc["m_p"].dump().c_str(), loc["n_p"].dump().c_str());
        }
    }
    return j["exists"].get<bool>() ? kExitOk : kExitNonexistent;
}

int cmd_components(const Args& a) {
    const auto dt = deformation_type(a);
    const auto pn = numerics(a, dt);
    if (!moduli::exists_polarization(dt, pn)) {
        std::fprintf(stderr, "no such polarization type\n");
        return kExitNonexistent;
    }
    const bool enumerable =
        dt.family == lattice::Family::K3m || dt.family == lattice::Family::Kumm;
    json j;
    j["family"] = lattice::family_name(dt.family);
    if (enumerable) j["m"] = json_int(dt.m);
    j["square"] = json_int(2 * pn.n);
    j["div"] = json_int(pn.gamma);
    j["polarization_types"] = json_int(moduli::count_polarization_types(dt, pn));
    j["components_per_type"] = json_int(moduli::count_components(dt, pn.gamma));
    if (enumerable) {
        json classes = json::array();
        for (const auto& cls : moduli::enumerate_components(dt, pn)) classes.push_back(cls);
        j["t_classes"] = classes;
    }
    if (json_mode(a)) {
        emit(j);
        return kExitOk;
    }
    std::printf("%s, square %s, divisibility %s\n", lattice::display_name(dt).c_str(),
                Int(2 * pn.n).get_str().c_str(), pn.gamma.get_str().c_str());
    std::cout << "polarization types:  " << j["polarization_types"] << "\n";
    std::cout << "components per type: " << j["components_per_type"] << "\n";
    if (enumerable) {
        for (const auto& cls : j["t_classes"]) {
            for (const auto& comp : cls) {
                std::printf("T-class %d component: b in {", comp["t_index"].get<int>());
                const auto& rb = comp["residues_b"];
                for (size_t i = 0; i < rb.size(); ++i)
                    std::cout << (i ? ", " : "") << rb[i];
                std::cout << "} (mod " << pn.gamma << "), h_* in {";
                const auto& hs = comp["h_star"];
                for (size_t i = 0; i < hs.size(); ++i)
                    std::cout << (i ? ", " : "") << hs[i];
                std::cout << "}\n";
            }
        }
    }
    return kExitOk;
}

int cmd_walls(const Args& a) {
    const auto dt = deformation_type(a);
    json j;
    j["family"] = lattice::family_name(dt.family);
    if (dt.family == lattice::Family::OG6 || dt.family == lattice::Family::OG10) {
        j["walls"] = walls::og_wall_list(dt);
        if (json_mode(a)) {
            emit(j);
            return kExitOk;
        }
        std::printf("%-8s %s\n", "square", "div");
        for (const auto& e : j["walls"])
            std::printf("%-8s %s\n", e["square"].dump().c_str(),
                        e["div"].is_null() ? "any" : e["div"].dump().c_str());
        return kExitOk;
    }
    j["m"] = json_int(dt.m);
    j["mtilde"] = json_int(lattice::mtilde(dt));
    j["walls"] = walls::enumerate_wall_types(dt);
    if (json_mode(a)) {
        emit(j);
        return kExitOk;
    }
    std::printf("%-8s %-8s %-10s %-10s %-6s %s\n", "k", "c", "l", "square", "d", "div");
    for (const auto& w : j["walls"])
        std::printf("%-8s %-8s %-10s %-10s %-6s %s\n", w["k"].dump().c_str(),
                    w["c"].dump().c_str(), w["l"].dump().c_str(), w["square"].dump().c_str(),
                    w["d"].dump().c_str(), w["div_kappa"].dump().c_str());
    return kExitOk;
}

int cmd_heegner(const Args& a) {
    const auto dt = deformation_type(a);
    const auto pn = numerics(a, dt);
    if (!moduli::exists_polarization(dt, pn)) {
        std::fprintf(stderr, "no such polarization type\n");
        return kExitNonexistent;
    }
    const auto classes = periodmap::avoided_heegner(dt, pn);
    if (json_mode(a)) {
        json j;
        j["family"] = lattice::family_name(dt.family);
        j["m"] = json_int(dt.m);
        j["square"] = json_int(2 * pn.n);
        j["div"] = json_int(pn.gamma);
        j["classes"] = classes;
        json discs = json::array();
        for (const auto& h : classes) discs.push_back(json_int(h.disc));
        j["discs"] = discs;
        emit(j);
        return kExitOk;
    }
    std::printf("%-8s %-8s %-10s %-10s %s\n", "k", "c", "l", "square", "disc");
    for (const auto& h : classes)
        std::printf("%-8s %-8s %-10s %-10s %s\n", h.wall.k.get_str().c_str(),
                    h.wall.c.get_str().c_str(), h.wall.l.get_str().c_str(),
                    Int(2 * h.wall.l).get_str().c_str(), h.disc.get_str().c_str());
    if (classes.empty()) std::printf("(no orthogonal wall types)\n");
    return kExitOk;
}

int cmd_compare(const Args& a) {
    const auto dt = deformation_type(a);
    const auto pn = numerics(a, dt);
    if (!moduli::exists_polarization(dt, pn)) {
        std::fprintf(stderr, "no such polarization type\n");
        return kExitNonexistent;
    }
    const auto reports = periodmap::compare_images(dt, pn);
    if (json_mode(a)) {
        json j;
        j["family"] = lattice::family_name(dt.family);
        j["m"] = json_int(dt.m);
        j["square"] = json_int(2 * pn.n);
        j["div"] = json_int(pn.gamma);
        j["reports"] = reports;
        emit(j);
        return kExitOk;
    }
    for (const auto& rep : reports) {
        std::printf("T-class %d, unit %s: action %s, deck bound %s, verdict %s\n", rep.t_index,
                    rep.unit.get_str().c_str(), periodmap::action_name(rep.action).c_str(),
                    rep.deck_bound.get_str().c_str(),
                    periodmap::verdict_name(rep.verdict).c_str());
        if (!rep.broken_walls.empty()) {
            std::printf("  broken walls (%s total):\n", rep.broken_total.get_str().c_str());
            for (const auto& b : rep.broken_walls)
                std::printf("    (k=%s, c=%s, l=%s) -> (k'=%s, c'=%s)\n", b.k.get_str().c_str(),
                            b.c.get_str().c_str(), b.l.get_str().c_str(),
                            b.k_prime.get_str().c_str(), b.c_prime.get_str().c_str());
        }
    }
    return kExitOk;
}

int cmd_oracle_units(const Args& a) {
    const Int mt = parse_int(a.mt, "--mt");
    const auto units = oracle::brute_units(mt);
    if (json_mode(a)) {
        json arr = json::array();
        for (const Int& u : units) arr.push_back(json_int(u));
        emit(json{{"mt", json_int(mt)}, {"units", arr}});
    } else {
        for (const Int& u : units) std::cout << u << "\n";
    }
    return kExitOk;
}

int cmd_oracle_residues(const Args& a) {
    const Int mt = parse_int(a.mt, "--mt");
    const Int n = parse_int(a.n, "--n");
    const Int gamma = parse_int(a.div, "--div");
    const auto residues = oracle::brute_residues(mt, n, gamma);
    if (json_mode(a)) {
        json arr = json::array();
        for (const Int& b : residues) arr.push_back(json_int(b));
        emit(json{{"mt", json_int(mt)},
                  {"n", json_int(n)},
                  {"div", json_int(gamma)},
                  {"residues", arr}});
    } else {
        for (const Int& b : residues) std::cout << b << "\n";
    }
    return kExitOk;
}

int cmd_oracle_unit_image(const Args& a) {
    const Int mt = parse_int(a.mt, "--mt");
    const Int gamma = parse_int(a.div, "--div");
    const Int image = oracle::brute_unit_image(mt, gamma);
    if (json_mode(a))
        emit(json{{"mt", json_int(mt)}, {"div", json_int(gamma)}, {"image", json_int(image)}});
    else
        std::cout << image << "\n";
    return kExitOk;
}

int cmd_oracle_wall_search(const Args& a) {
    const Int mt = parse_int(a.mt, "--mt");
    const Int n = parse_int(a.n, "--n");
    const Int gamma = parse_int(a.div, "--div");
    const Int k = parse_int(a.k, "--k");
    const Int l = parse_int(a.l, "--l");
    const auto witness = oracle::surrogate_wall_search(mt, n, gamma, k, l, a.bound);
    if (json_mode(a)) {
        json j{{"mt", json_int(mt)},    {"n", json_int(n)}, {"div", json_int(gamma)},
               {"k", json_int(k)},      {"l", json_int(l)}, {"bound", a.bound},
               {"found", witness.has_value()}};
        if (witness)
            j["witness"] = *witness;
        else
            j["reason"] = "search exhausted";
        emit(j);
    } else if (witness) {
        std::cout << "h     = (" << witness->h[0] << ", " << witness->h[1] << ", "
                  << witness->h[2] << ", " << witness->h[3] << ", " << witness->h[4] << ")\n";
        std::cout << "kappa = (" << witness->kappa[0] << ", " << witness->kappa[1] << ", "
                  << witness->kappa[2] << ", " << witness->kappa[3] << ", " << witness->kappa[4]
                  << ")\n";
    } else {
        std::cout << "search exhausted (bound " << a.bound << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Args args;
    CLI::App app{
        "hk: numerical invariants of moduli of polarized hyperkähler manifolds\n"
        "(polarization census, wall types, avoided Heegner divisors, period-map\n"
        "image comparison). All arithmetic is exact; JSON output renders integers\n"
        "beyond 64 bits as decimal strings."};
    app.require_subcommand(1);

    auto add_family = [&](CLI::App* cmd, bool with_numerics) {
        cmd->add_option("--family", args.family, "k3m | kumm | og6 | og10")->required();
        cmd->add_option("--m", args.m, "m for k3m/kumm (>= 2)");
        if (with_numerics) {
            cmd->add_option("--square", args.square, "square h^2 = 2n (even, positive)")
                ->required();
            cmd->add_option("--div", args.div, "divisibility gamma")->required();
        }
        cmd->add_option("--format", args.format, "table | json")
            ->check(CLI::IsMember({"table", "json"}));
    };

    auto* info = app.add_subcommand("info", "lattice and monodromy data of a family");
    add_family(info, false);

    auto* pol = app.add_subcommand("polarizations",
                                   "existence and number of polarization types");
    add_family(pol, true);

    auto* comp = app.add_subcommand("components",
                                    "connected components of the polarized moduli space");
    add_family(comp, true);

    auto* wallsc = app.add_subcommand("walls", "wall-class numerical types of a family");
    add_family(wallsc, false);

    auto* heeg = app.add_subcommand("heegner",
                                    "Heegner divisors avoided by the period map");
    add_family(heeg, true);

    auto* cmp = app.add_subcommand("compare",
                                   "compare period-map images across components");
    add_family(cmp, true);

    auto* orc = app.add_subcommand("oracle", "brute-force verifiers");
    orc->require_subcommand(1);
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", args.format, "table | json")
            ->check(CLI::IsMember({"table", "json"}));
    };
    auto* o_units = orc->add_subcommand("units", "scan for a^2 == 1 (mod 4*mt)");
    o_units->add_option("--mt", args.mt, "half the discriminant group order")->required();
    add_format(o_units);
    auto* o_res = orc->add_subcommand("residues", "scan for gamma^2 | b^2*mt + n");
    o_res->add_option("--mt", args.mt)->required();
    o_res->add_option("--n", args.n)->required();
    o_res->add_option("--div", args.div)->required();
    add_format(o_res);
    auto* o_img = orc->add_subcommand("unit-image", "count unit residues mod gamma");
    o_img->add_option("--mt", args.mt)->required();
    o_img->add_option("--div", args.div)->required();
    add_format(o_img);
    auto* o_search = orc->add_subcommand(
        "wall-search", "search U+U+<-2mt> for h and an orthogonal wall vector");
    o_search->add_option("--mt", args.mt)->required();
    o_search->add_option("--n", args.n)->required();
    o_search->add_option("--div", args.div)->required();
    o_search->add_option("--k", args.k)->required();
    o_search->add_option("--l", args.l)->required();
    o_search->add_option("--bound", args.bound, "coordinate bound (default 8)");
    add_format(o_search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(info)) return cmd_info(args);
        if (app.got_subcommand(pol)) return cmd_polarizations(args);
        if (app.got_subcommand(comp)) return cmd_components(args);
        if (app.got_subcommand(wallsc)) return cmd_walls(args);
        if (app.got_subcommand(heeg)) return cmd_heegner(args);
        if (app.got_subcommand(cmp)) return cmd_compare(args);
        if (app.got_subcommand(orc)) {
            if (orc->got_subcommand("units")) return cmd_oracle_units(args);
            if (orc->got_subcommand("residues")) return cmd_oracle_residues(args);
            if (orc->got_subcommand("unit-image")) return cmd_oracle_unit_image(args);
            if (orc->got_subcommand("wall-search")) return cmd_oracle_wall_search(args);
        }
        std::fprintf(stderr, "no subcommand selected\n");
        return kExitUsage;
    } catch (const hk::internal_error& e) {
        std::fprintf(stderr, "internal invariant breach: %s\n", e.what());
        return kExitInternal;
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInternal;
    }
}
