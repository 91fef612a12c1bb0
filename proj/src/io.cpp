#include "axial/io.hpp"

#include "axial/error.hpp"

#include <fstream>
#include <set>
#include <utility>

namespace axial {

namespace {

nlohmann::json load_json_file(const std::string& path, const char* kind)
{
    std::ifstream in(path);
    if (!in)
        throw input_error(std::string(kind) + " file not readable: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

std::size_t get_index(const nlohmann::json& j, const char* key, std::size_t dim)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string("product entry needs integer field '") + key + "'");
    long long v = j[key].get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= dim)
        throw input_error(std::string("product index '") + key + "' = " + std::to_string(v)
                          + " out of range for dimension " + std::to_string(dim));
    return static_cast<std::size_t>(v);
}

} // namespace

AlgebraTable algebra_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("basis"))
        throw input_error("algebra JSON needs 'dim' and 'basis'");
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
        throw input_error("'dim' must be a positive integer");
    const auto dim = static_cast<std::size_t>(j["dim"].get<long long>());
    if (!j["basis"].is_array() || j["basis"].size() != dim)
        throw input_error("'basis' must list exactly dim labels");

    std::vector<std::string> labels;
    for (const auto& l : j["basis"]) {
        if (!l.is_string())
            throw input_error("basis labels must be strings");
        labels.push_back(l.get<std::string>());
    }

    AlgebraTable table(dim, std::move(labels));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (j.contains("products")) {
        if (!j["products"].is_array())
            throw input_error("'products' must be an array");
        for (const auto& entry : j["products"]) {
            std::size_t i = get_index(entry, "i", dim);
            std::size_t jj = get_index(entry, "j", dim);
            if (!seen.emplace(i, jj).second)
                throw input_error("duplicate product entry for (i, j) = ("
                                  + std::to_string(i) + ", " + std::to_string(jj) + ")");
            if (!entry.contains("coeffs") || !entry["coeffs"].is_array()
                || entry["coeffs"].size() != dim)
                throw input_error("product (" + std::to_string(i) + ", " + std::to_string(jj)
                                  + ") needs a 'coeffs' array of length dim");
            Element coeffs(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                const auto& c = entry["coeffs"][k];
                if (!c.is_string())
                    throw input_error("coefficients must be rational strings");
                coeffs[k] = parse_rational(c.get<std::string>());
            }
            table.set_product(i, jj, std::move(coeffs));
        }
    }
    return table;
}

ordered_json algebra_to_json(const AlgebraTable& table)
{
    ordered_json j;
    j["dim"] = table.dim();
    j["basis"] = table.basis();
    ordered_json products = ordered_json::array();
    for (std::size_t i = 0; i < table.dim(); ++i)
        for (std::size_t jj = 0; jj < table.dim(); ++jj) {
            Element p = table.basis_product(i, jj);
            if (vec_is_zero(p))
                continue;
            ordered_json entry;
            entry["i"] = i;
            entry["j"] = jj;
            entry["coeffs"] = element_to_json(p);
            products.push_back(std::move(entry));
        }
    j["products"] = std::move(products);
    return j;
}

AlgebraTable load_algebra(const std::string& path)
{
    return algebra_from_json(load_json_file(path, "algebra"));
}

void save_algebra(const AlgebraTable& table, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write algebra file: " + path);
    out << algebra_to_json(table).dump(2) << '\n';
}

FischerSpace fischer_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw input_error("fischer space JSON needs a 'points' array");
    FischerSpace space;
    for (const auto& p : j["points"]) {
        if (!p.is_string())
            throw input_error("fischer space points must be strings");
        space.points.push_back(p.get<std::string>());
    }
    if (j.contains("lines")) {
        if (!j["lines"].is_array())
            throw input_error("'lines' must be an array of triples");
        for (const auto& line : j["lines"]) {
            if (!line.is_array() || line.size() != 3)
                throw input_error("each line must be a triple of point indices");
            std::array<std::size_t, 3> tri{};
            for (std::size_t k = 0; k < 3; ++k) {
                if (!line[k].is_number_integer() || line[k].get<long long>() < 0)
                    throw input_error("line entries must be non-negative point indices");
                tri[k] = static_cast<std::size_t>(line[k].get<long long>());
            }
            space.lines.push_back(tri);
        }
    }
    validate_fischer_space(space);
    return space;
}

ordered_json fischer_to_json(const FischerSpace& space)
{
    ordered_json j;
    j["points"] = space.points;
    ordered_json lines = ordered_json::array();
    for (const auto& line : space.lines)
        lines.push_back({line[0], line[1], line[2]});
    j["lines"] = std::move(lines);
    return j;
}

FischerSpace load_fischer_space(const std::string& path)
{
    return fischer_from_json(load_json_file(path, "fischer space"));
}

ordered_json element_to_json(const Element& v)
{
    ordered_json out = ordered_json::array();
    for (const auto& c : v)
        out.push_back(rational_str(c));
    return out;
}

Element element_from_json(const nlohmann::json& j, std::size_t dim)
{
    if (!j.is_array() || j.size() != dim)
        throw input_error("element must be an array of dim rational strings");
    Element v(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        if (!j[k].is_string())
            throw input_error("element coefficients must be rational strings");
        v[k] = parse_rational(j[k].get<std::string>());
    }
    return v;
}

ordered_json subspace_to_json(const Subspace& s)
{
    ordered_json j;
    j["dim"] = s.dim();
    ordered_json rows = ordered_json::array();
    for (const auto& r : s.basis_list())
        rows.push_back(element_to_json(r));
    j["basis"] = std::move(rows);
    return j;
}

ordered_json profile_to_json(const AxisProfile& profile)
{
    ordered_json j;
    j["axis"] = element_to_json(profile.axis);
    j["lambda"] = profile.lambda ? ordered_json(rational_str(*profile.lambda)) : ordered_json();
    j["delta"] = profile.delta ? ordered_json(rational_str(*profile.delta)) : ordered_json();
    j["idempotent"] = profile.idempotent;
    j["left_axis"] = profile.left_axis;
    j["right_axis"] = profile.right_axis;
    j["primitive_left"] = profile.primitive_left;
    j["primitive_right"] = profile.primitive_right;
    j["operators_commute"] = profile.operators_commute;
    j["direct_sum"] = profile.direct_sum;
    j["primitive_two_sided"] = profile.primitive_two_sided();
    j["jordan_type"] = profile.jordan_type;
    ordered_json spaces;
    spaces["A11"] = subspace_to_json(profile.spaces.s11);
    spaces["A00"] = subspace_to_json(profile.spaces.s00);
    spaces["AL0"] = subspace_to_json(profile.spaces.sL0);
    spaces["A0D"] = subspace_to_json(profile.spaces.s0D);
    spaces["ALD"] = subspace_to_json(profile.spaces.sLD);
    j["spaces"] = std::move(spaces);
    if (!profile.failure.empty())
        j["failure"] = profile.failure;
    return j;
}

ordered_json report_to_json(const VerificationReport& report)
{
    ordered_json out = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json entry;
        entry["identity_id"] = e.identity_id;
        entry["passed"] = e.passed;
        entry["residual"] = element_to_json(e.residual);
        if (!e.note.empty())
            entry["note"] = e.note;
        out.push_back(std::move(entry));
    }
    return out;
}

std::string element_str(const AlgebraTable& table, const Element& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        Rational mag = v[i] < 0 ? Rational(-v[i]) : v[i];
        if (out.empty())
            out += v[i] < 0 ? "-" : "";
        else
            out += v[i] < 0 ? " - " : " + ";
        if (mag != 1)
            out += (denominator(mag) == 1 ? rational_str(mag) : "(" + rational_str(mag) + ")")
                + "*";
        out += table.basis()[i];
    }
    return out.empty() ? "0" : out;
}

} // namespace axial
