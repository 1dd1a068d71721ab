// Command line front end.  Four subcommands: atlas (enumerate component
// labels), check (cross-validation sweeps), twist (unit action on a branching
// datum), kummer (branch data of a rational function divisor).
//
// Exit codes: 0 success, 2 bad input, 3 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/check.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/io.hpp"

namespace {

using hurwitz::BranchingDatum;
using hurwitz::CyclicOrder;
using hurwitz::HurwitzDatum;
using hurwitz::Int;
using hurwitz::MarkingVector;
using ordered_json = nlohmann::ordered_json;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw hurwitz::InvalidDatum("cannot open output file '" + path + "'");
    file << text;
}

unsigned thread_count_from_env() {
    const char* raw = std::getenv("ATLAS_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;
    Int value = 0;
    try {
        value = hurwitz::io::detail::parse_int(raw);
    } catch (const hurwitz::InvalidDatum&) {
        value = 0;
    }
    if (value < 1 || value > 4096)
        throw hurwitz::InvalidDatum("ATLAS_THREADS must be an integer in 1..4096, got '" +
                                    std::string(raw) + "'");
    return static_cast<unsigned>(value);
}

struct AtlasArgs {
    Int genus = 0;
    Int marks = 0;
    Int order = 2;
    bool no_etale_only = false;
    std::string format = "json";
    std::string out;
};

int run_atlas(const AtlasArgs& args) {
    const CyclicOrder order(args.order);
    const auto atlas =
        hurwitz::enumerate_components(args.genus, args.marks, order, args.no_etale_only);
    write_output(args.format == "csv" ? hurwitz::io::atlas_to_csv(atlas)
                                      : hurwitz::io::atlas_to_json_string(atlas),
                 args.out);
    return 0;
}

struct CheckArgs {
    Int max_genus = 4;
    Int max_marks = 4;
    Int max_order = 8;
    bool corrupt_gcd = false;
};

int run_check(const CheckArgs& args) {
    hurwitz::check::CheckOptions opts;
    opts.max_genus = args.max_genus;
    opts.max_marks = args.max_marks;
    opts.max_order = args.max_order;
    opts.corrupt_gcd = args.corrupt_gcd;
    opts.threads = thread_count_from_env();

    const hurwitz::check::CheckResult result = hurwitz::check::run_checks(opts);
    for (int p = 0; p < hurwitz::check::kPropertyCount; ++p)
        std::cout << hurwitz::check::property_name(p) << ": " << result.cases[p] << " cases\n";
    if (result.failure) {
        std::cout << "FAIL: " << result.failure->property << "\n"
                  << "counterexample: " << result.failure->counterexample << "\n";
        return 3;
    }
    std::cout << "all " << static_cast<int>(hurwitz::check::kPropertyCount)
              << " properties hold (" << result.total_cases() << " cases total)\n";
    return 0;
}

struct TwistArgs {
    Int order = 2;
    std::vector<Int> k;
    std::vector<Int> r;
    Int unit = 1;
};

int run_twist(const TwistArgs& args) {
    const CyclicOrder order(args.order);
    const Int n = order.value();
    const HurwitzDatum k(order, args.k);
    const MarkingVector r =
        args.r.empty() ? MarkingVector(order) : MarkingVector(order, args.r);
    const BranchingDatum kr(k, r);
    const BranchingDatum twisted = hurwitz::unit_twist(kr, args.unit);
    const BranchingDatum canonical = hurwitz::canonicalize(kr);

    ordered_json out;
    out["order"] = n;
    out["unit"] = hurwitz::mod_norm(args.unit, n);
    out["k"] = kr.k().exponents();
    out["r"] = kr.r().counts();
    out["twisted"]["k"] = twisted.k().exponents();
    out["twisted"]["r"] = twisted.r().counts();
    out["canonical"]["k"] = canonical.k().exponents();
    out["canonical"]["r"] = canonical.r().counts();
    out["aut_orbit_size"] = static_cast<Int>(hurwitz::unit_orbit(kr).size());
    out["etale_part"] = hurwitz::etale_part(order, k);
    if (k.exponents().empty()) {
        // An etale cover pins nothing: no modulus, no solution set.
        out["exponent_modulus"] = nullptr;
        out["solutions"] = nullptr;
    } else {
        out["exponent_modulus"] = hurwitz::galois::determined_exponent_modulus(order, k);
        out["solutions"] = hurwitz::galois::inertia_exponent_solutions(order, k, args.unit);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct KummerArgs {
    Int order = 2;
    std::string divisor;
};

int run_kummer(const KummerArgs& args) {
    const CyclicOrder order(args.order);
    const Int n = order.value();
    const auto divisor = hurwitz::io::parse_divisor(order, args.divisor);
    const auto [points, k] = hurwitz::kummer::branch_data(divisor);

    ordered_json out;
    out["order"] = n;
    out["divisor"] = ordered_json::array();
    for (const auto& entry : divisor.support()) {
        ordered_json e;
        e["point"] = entry.point;
        e["multiplicity"] = entry.multiplicity;
        out["divisor"].push_back(e);
    }
    out["branch_points"] = ordered_json::array();
    for (const auto& bp : points) {
        ordered_json e;
        e["point"] = bp.point;
        e["exponent"] = bp.exponent;
        out["branch_points"].push_back(e);
    }
    out["k"] = k.exponents();
    out["nu"] = k.nu();
    const Int d = hurwitz::etale_part(order, k);
    out["etale_part"] = d;
    out["connected"] = d == 1;
    if (d == 1) {
        out["genus"] = hurwitz::rh_genus(order, 0, k);
    } else {
        out["genus"] = nullptr;
        out["genus_note"] = "the cover cut out by this divisor is disconnected";
    }
    try {
        out["generic_galois_group_order"] = hurwitz::kummer::generic_galois_group_order(k);
    } catch (const std::overflow_error&) {
        out["generic_galois_group_order"] = nullptr;
        out["galois_note"] = "group order exceeds 64 bits";
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int classify(const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (dynamic_cast<const hurwitz::ConsistencyFailure*>(&e) != nullptr ||
        dynamic_cast<const hurwitz::NonIntegralGenus*>(&e) != nullptr ||
        dynamic_cast<const hurwitz::OddEulerCharacteristic*>(&e) != nullptr)
        return 3;
    if (dynamic_cast<const hurwitz::Error*>(&e) != nullptr ||
        dynamic_cast<const std::overflow_error*>(&e) != nullptr)
        return 2;
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atlas of irreducible special loci for cyclic covers of marked curves"};
    app.require_subcommand(1);

    AtlasArgs atlas_args;
    CLI::App* atlas = app.add_subcommand("atlas", "Enumerate component labels for (g, m, n)");
    atlas->add_option("--genus", atlas_args.genus, "Genus of the covering curve")->required();
    atlas->add_option("--marks", atlas_args.marks, "Total marked degree")->required();
    atlas->add_option("--order", atlas_args.order, "Order of the cyclic group")->required();
    atlas->add_flag("--no-etale-only", atlas_args.no_etale_only,
                    "Keep only components with no intermediate etale factorization");
    atlas->add_option("--format", atlas_args.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    atlas->add_option("--out", atlas_args.out, "Write to this file instead of stdout");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "Run the cross-validation sweeps");
    check->add_option("--max-genus", check_args.max_genus, "Genus bound for the component sweep")
        ->capture_default_str();
    check->add_option("--max-marks", check_args.max_marks, "Marked degree bound")
        ->capture_default_str();
    check->add_option("--max-order", check_args.max_order, "Group order bound")
        ->capture_default_str();
    check->add_flag("--corrupt-gcd", check_args.corrupt_gcd)->group("");

    TwistArgs twist_args;
    CLI::App* twist = app.add_subcommand("twist", "Apply a unit twist to a branching datum");
    twist->add_option("--order", twist_args.order, "Order of the cyclic group")->required();
    twist->add_option("--k", twist_args.k, "Branch exponents, comma separated")->delimiter(',');
    twist->add_option("--r", twist_args.r, "Marking vector of length n, comma separated")
        ->delimiter(',');
    twist->add_option("--unit", twist_args.unit, "Unit mod n to twist by")->capture_default_str();

    KummerArgs kummer_args;
    CLI::App* kummer =
        app.add_subcommand("kummer", "Read branch data off a rational function divisor");
    kummer->add_option("--order", kummer_args.order, "Order of the cyclic group")->required();
    kummer
        ->add_option("--divisor", kummer_args.divisor,
                     "Divisor as label:multiplicity,... ('inf' is the point at infinity)")
        ->required();

    int exit_code = 0;
    atlas->callback([&] { exit_code = run_atlas(atlas_args); });
    check->callback([&] { exit_code = run_check(check_args); });
    twist->callback([&] { exit_code = run_twist(twist_args); });
    kummer->callback([&] { exit_code = run_kummer(kummer_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        return classify(e);
    }
    return exit_code;
}
