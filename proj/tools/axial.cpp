// Command-line front end: construct, inspect and verify structure-constant
// algebras and their idempotent axes.
//
// Exit codes: 0 = all requested checks passed (or were vacuous),
//             1 = a verified property failed,
//             2 = input or usage error.

#include "axial/axis.hpp"
#include "axial/constructions.hpp"
#include "axial/error.hpp"
#include "axial/io.hpp"
#include "axial/miyamoto.hpp"
#include "axial/polynomial.hpp"
#include "axial/verifier.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define AXIAL_ISATTY _isatty
#define AXIAL_FILENO _fileno
#else
#include <unistd.h>
#define AXIAL_ISATTY isatty
#define AXIAL_FILENO fileno
#endif

namespace {

using namespace axial;

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

bool use_color()
{
    const char* env = std::getenv("AXIAL_COLOR");
    if (env && std::string(env) == "0")
        return false;
    return AXIAL_ISATTY(AXIAL_FILENO(stdout)) != 0;
}

std::string passfail(bool ok)
{
    if (!use_color())
        return ok ? "PASS" : "FAIL";
    return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

std::string yesno(bool b)
{
    return b ? "yes" : "no";
}

std::vector<std::string> split_csv(const std::string& csv)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    return out;
}

// Axis selector: basis label, basis index, or an explicit comma-separated
// rational coefficient vector.
Element parse_axis_selector(const AlgebraTable& table, const std::string& sel)
{
    for (std::size_t i = 0; i < table.dim(); ++i)
        if (table.basis()[i] == sel)
            return table.basis_element(i);
    if (sel.find(',') != std::string::npos) {
        std::vector<std::string> parts = split_csv(sel);
        if (parts.size() != table.dim())
            throw input_error("coefficient vector '" + sel + "' needs "
                              + std::to_string(table.dim()) + " entries");
        Element v(table.dim());
        for (std::size_t i = 0; i < table.dim(); ++i)
            v[i] = parse_rational(parts[i]);
        return v;
    }
    if (!sel.empty() && sel.find_first_not_of("0123456789") == std::string::npos) {
        std::size_t idx = std::stoul(sel);
        if (idx >= table.dim())
            throw input_error("basis index " + sel + " out of range for dimension "
                              + std::to_string(table.dim()));
        return table.basis_element(idx);
    }
    throw input_error("unknown axis selector '" + sel
                      + "' (expected a basis label, index, or coefficient vector)");
}

void print_report(const VerificationReport& report, bool json)
{
    if (json) {
        std::cout << report_to_json(report).dump(2) << '\n';
        return;
    }
    for (const auto& e : report.entries) {
        std::cout << "  [" << passfail(e.passed) << "] " << e.identity_id;
        if (!e.note.empty())
            std::cout << "  (" << e.note << ")";
        std::cout << '\n';
    }
    std::cout << report.entries.size() << " checks, " << report.failure_count() << " failed\n";
}

int cmd_classify(const std::string& algebra_path, const std::string& axis_sel, bool json)
{
    AlgebraTable table = load_algebra(algebra_path);
    Element axis = parse_axis_selector(table, axis_sel);
    AxisProfile p = classify_axis(table, axis);
    if (json) {
        std::cout << profile_to_json(p).dump(2) << '\n';
        return p.primitive_two_sided() ? exit_ok : exit_check_failed;
    }
    std::cout << "element: " << element_str(table, axis) << '\n';
    if (!p.primitive_two_sided()) {
        std::cout << "not a primitive two-sided axis: " << p.failure << '\n';
        if (p.idempotent && !vec_is_zero(axis)) {
            std::cout << "  min poly (left):  " << p.minpoly_left.str() << '\n';
            std::cout << "  min poly (right): " << p.minpoly_right.str() << '\n';
        }
        return exit_check_failed;
    }
    auto eig = [](const std::optional<Rational>& q) {
        return q ? rational_str(*q) : std::string("absent");
    };
    std::cout << "primitive two-sided axis of type (" << eig(p.lambda) << ", " << eig(p.delta)
              << ")\n";
    std::cout << "  min poly (left):  " << p.minpoly_left.str() << '\n';
    std::cout << "  min poly (right): " << p.minpoly_right.str() << '\n';
    std::cout << "  operators commute: " << yesno(p.operators_commute) << '\n';
    std::cout << "  eigenspace dims [A11 A00 AL0 A0D ALD]: " << p.spaces.s11.dim() << ' '
              << p.spaces.s00.dim() << ' ' << p.spaces.sL0.dim() << ' ' << p.spaces.s0D.dim()
              << ' ' << p.spaces.sLD.dim() << '\n';
    std::cout << "  jordan type: " << yesno(p.jordan_type) << '\n';
    return exit_ok;
}

int cmd_verify(const std::string& algebra_path, std::vector<std::string> axis_sels,
               bool all_axes, std::optional<std::size_t> random_count, std::uint64_t seed,
               bool json)
{
    if (random_count) {
        VerificationReport report = verify_random(seed, *random_count);
        if (!json)
            std::cout << "random parameter sweep: " << *random_count << " cases, seed " << seed
                      << '\n';
        print_report(report, json);
        return report.all_passed() ? exit_ok : exit_check_failed;
    }

    if (algebra_path.empty())
        throw input_error("verify needs --algebra (or --random N)");
    AlgebraTable table = load_algebra(algebra_path);

    VerificationReport report;
    if (all_axes) {
        std::vector<Element> axes = find_axes(table);
        if (axes.size() < 2)
            throw input_error("--all-axes found " + std::to_string(axes.size())
                              + " primitive axes; need at least two");
        if (!json)
            std::cout << "found " << axes.size() << " primitive axes\n";
        report.append(verify_axes(table, axes));
        for (std::size_t i = 0; i < axes.size(); ++i)
            for (std::size_t j = i + 1; j < axes.size(); ++j)
                report.append(verify_pair(table, axes[i], axes[j]),
                              "pair(" + std::to_string(i) + "," + std::to_string(j) + "):");
    } else {
        if (axis_sels.size() != 2)
            throw input_error("verify needs exactly two axis selectors (via --axes a,b or two "
                              "--gen flags), or --all-axes");
        Element a = parse_axis_selector(table, axis_sels[0]);
        Element b = parse_axis_selector(table, axis_sels[1]);
        report = verify_pair(table, a, b);
    }
    print_report(report, json);
    return report.all_passed() ? exit_ok : exit_check_failed;
}

int cmd_make(const std::string& family, const std::string& lambda_str,
             const std::string& eta_str, const std::string& space_path,
             const std::string& output)
{
    AlgebraTable table = [&] {
        if (family == "dim2") {
            if (lambda_str.empty())
                throw input_error("make --family dim2 needs --lambda p/q");
            return dim2_algebra(parse_rational(lambda_str));
        }
        if (family == "matsuo") {
            if (eta_str.empty())
                throw input_error("make --family matsuo needs --eta p/q");
            FischerSpace space =
                space_path.empty() ? line3_space() : load_fischer_space(space_path);
            return matsuo_algebra(space, parse_rational(eta_str));
        }
        throw input_error("unknown family '" + family + "' (expected dim2 or matsuo)");
    }();
    if (output.empty()) {
        std::cout << algebra_to_json(table).dump(2) << '\n';
    } else {
        save_algebra(table, output);
        std::cout << "wrote " << output << " (dim " << table.dim() << ")\n";
    }
    return exit_ok;
}

int cmd_miyamoto(const std::string& algebra_path, const std::string& axis_sel,
                 const std::string& which, bool json)
{
    AlgebraTable table = load_algebra(algebra_path);
    Element axis = parse_axis_selector(table, axis_sel);
    AxisProfile p = classify_axis(table, axis);
    if (!p.primitive_two_sided())
        throw input_error("selected element is not a primitive two-sided axis: " + p.failure);

    AlgebraMap map = [&] {
        if (which == "lambda")
            return tau_lambda(p);
        if (which == "delta")
            return tau_delta(p);
        if (which == "diag")
            return tau_diag(p);
        throw input_error("--which must be lambda, delta or diag");
    }();

    bool automorphism = is_automorphism(table, map);
    bool involution = (map * map == Matrix::identity(table.dim()));
    std::vector<Element> basis_axes;
    for (std::size_t i = 0; i < table.dim(); ++i)
        if (classify_axis(table, table.basis_element(i)).primitive_two_sided())
            basis_axes.push_back(table.basis_element(i));
    std::vector<Element> orbit = axis_orbit(table, basis_axes, {map});

    if (json) {
        ordered_json j;
        j["which"] = which;
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < map.rows(); ++i)
            rows.push_back(element_to_json(map.row(i)));
        j["matrix"] = std::move(rows);
        j["automorphism"] = automorphism;
        j["involution"] = involution;
        ordered_json images = ordered_json::array();
        for (const auto& v : basis_axes) {
            ordered_json img;
            img["axis"] = element_to_json(v);
            img["image"] = element_to_json(map.apply(v));
            images.push_back(std::move(img));
        }
        j["images"] = std::move(images);
        ordered_json orb = ordered_json::array();
        for (const auto& v : orbit)
            orb.push_back(element_to_json(v));
        j["orbit"] = std::move(orb);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "tau_" << which << " for axis " << element_str(table, axis) << ":\n";
        for (std::size_t i = 0; i < map.rows(); ++i) {
            std::cout << "  [";
            for (std::size_t jj = 0; jj < map.cols(); ++jj)
                std::cout << (jj ? " " : "") << rational_str(map.at(i, jj));
            std::cout << "]\n";
        }
        std::cout << "automorphism: " << yesno(automorphism)
                  << ", involution: " << yesno(involution) << '\n';
        for (const auto& v : basis_axes)
            std::cout << "  " << element_str(table, v) << "  ->  "
                      << element_str(table, map.apply(v)) << '\n';
        std::cout << "orbit of the basis axes under this map: " << orbit.size()
                  << " element(s)\n";
    }
    return (automorphism && involution) ? exit_ok : exit_check_failed;
}

int cmd_closure(const std::string& algebra_path, const std::string& gens_csv,
                const std::vector<std::string>& gen_sels, const std::string& output, bool json)
{
    AlgebraTable table = load_algebra(algebra_path);
    std::vector<Element> gens;
    for (const auto& sel : split_csv(gens_csv))
        gens.push_back(parse_axis_selector(table, sel));
    for (const auto& sel : gen_sels)
        gens.push_back(parse_axis_selector(table, sel));
    if (gens.empty())
        throw input_error("closure needs generators (--gens a,b or repeated --gen)");

    Closure cl = subalgebra_closure(table, gens);
    if (json) {
        ordered_json j;
        j["dim"] = cl.space.dim();
        j["basis"] = subspace_to_json(cl.space)["basis"];
        j["table"] = algebra_to_json(cl.table);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "closure dimension: " << cl.space.dim() << '\n';
        for (const auto& row : cl.space.basis_list())
            std::cout << "  " << element_str(table, row) << '\n';
    }
    if (!output.empty()) {
        save_algebra(cl.table, output);
        std::cout << "wrote induced table to " << output << '\n';
    }
    return exit_ok;
}

int cmd_fusion(const std::string& algebra_path, const std::string& axis_sel, bool json)
{
    AlgebraTable table = load_algebra(algebra_path);
    Element axis = parse_axis_selector(table, axis_sel);
    AxisProfile p = classify_axis(table, axis);
    if (!p.primitive_two_sided())
        throw input_error("selected element is not a primitive two-sided axis: " + p.failure);
    VerificationReport report = check_fusion(table, p);
    if (json) {
        std::cout << report_to_json(report).dump(2) << '\n';
    } else if (report.entries.empty()) {
        std::cout << "all graded products OK\n";
    } else {
        print_report(report, false);
    }
    return report.all_passed() ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-arithmetic toolkit for structure-constant algebras and their axes"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string algebra_path, axis_sel, which = "lambda", family, lambda_str, eta_str,
                space_path, output, gens_csv, axes_csv;
    std::vector<std::string> gen_sels;
    bool all_axes = false;
    std::optional<std::size_t> random_count;
    std::uint64_t seed = 0;

    auto* classify = app.add_subcommand("classify", "classify an idempotent as an axis");
    classify->add_option("--algebra", algebra_path, "algebra JSON file")->required();
    classify->add_option("--axis", axis_sel, "basis label, index, or coefficient vector")
        ->required();

    auto* verify = app.add_subcommand("verify", "run the two-generated verification suites");
    verify->add_option("--algebra", algebra_path, "algebra JSON file");
    verify->add_option("--axes", axes_csv, "two axis selectors, comma separated");
    verify->add_option("--gen", gen_sels, "axis selector (repeat for each generator)");
    verify->add_flag("--all-axes", all_axes, "search for primitive axes and verify all pairs");
    verify->add_option("--random", random_count,
                       "verify N randomly parameterized corpus algebras instead");
    verify->add_option("--seed", seed, "seed for --random (default 0)");

    auto* make = app.add_subcommand("make", "construct a corpus algebra and write it as JSON");
    make->add_option("--family", family, "dim2 or matsuo")->required();
    make->add_option("--lambda", lambda_str, "type parameter for dim2 (rational, not 0, 1, 1/2)");
    make->add_option("--eta", eta_str, "matsuo parameter (rational, not 0 or 2)");
    make->add_option("--space", space_path, "fischer space JSON (default: the 3-point line)");
    make->add_option("-o,--output", output, "output path (default: stdout)");

    auto* miyamoto = app.add_subcommand("miyamoto", "construct a Miyamoto involution");
    miyamoto->add_option("--algebra", algebra_path, "algebra JSON file")->required();
    miyamoto->add_option("--axis", axis_sel, "axis selector")->required();
    miyamoto->add_option("--which", which, "lambda, delta or diag (default lambda)");

    auto* closure = app.add_subcommand("closure", "generated subalgebra and induced table");
    closure->add_option("--algebra", algebra_path, "algebra JSON file")->required();
    closure->add_option("--gens", gens_csv, "generator selectors, comma separated");
    closure->add_option("--gen", gen_sels, "generator selector (repeatable)");
    closure->add_option("-o,--output", output, "write the induced table here");

    auto* fusion = app.add_subcommand("fusion", "check the Z2 x Z2 grading of an axis");
    fusion->add_option("--algebra", algebra_path, "algebra JSON file")->required();
    fusion->add_option("--axis", axis_sel, "axis selector")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (app.got_subcommand(classify))
            return cmd_classify(algebra_path, axis_sel, json);
        if (app.got_subcommand(verify)) {
            std::vector<std::string> sels = gen_sels;
            for (const auto& s : split_csv(axes_csv))
                sels.push_back(s);
            return cmd_verify(algebra_path, sels, all_axes, random_count, seed, json);
        }
        if (app.got_subcommand(make))
            return cmd_make(family, lambda_str, eta_str, space_path, output);
        if (app.got_subcommand(miyamoto))
            return cmd_miyamoto(algebra_path, axis_sel, which, json);
        if (app.got_subcommand(closure))
            return cmd_closure(algebra_path, gens_csv, gen_sels, output, json);
        if (app.got_subcommand(fusion))
            return cmd_fusion(algebra_path, axis_sel, json);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}
