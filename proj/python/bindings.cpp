// Python bindings for the exact-arithmetic axis toolkit. Scalars cross the
// boundary as reduced rational strings ("p/q" or "p"), elements and matrices
// as (nested) lists of such strings, so no precision is ever lost.

#include "axial/axis.hpp"
#include "axial/constructions.hpp"
#include "axial/error.hpp"
#include "axial/io.hpp"
#include "axial/miyamoto.hpp"
#include "axial/polynomial.hpp"
#include "axial/verifier.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace axial;

namespace {

std::vector<std::string> vec_out(const RatVec& v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& c : v)
        out.push_back(rational_str(c));
    return out;
}

RatVec vec_in(const std::vector<std::string>& v)
{
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = parse_rational(v[i]);
    return out;
}

std::vector<std::vector<std::string>> matrix_out(const Matrix& m)
{
    std::vector<std::vector<std::string>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        rows.push_back(vec_out(m.row(i)));
    return rows;
}

Matrix matrix_in(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<RatVec> rs;
    rs.reserve(rows.size());
    for (const auto& r : rows)
        rs.push_back(vec_in(r));
    return Matrix::from_rows(rs);
}

std::vector<std::vector<std::string>> subspace_out(const Subspace& s)
{
    return matrix_out(s.basis_rows());
}

py::dict entry_out(const VerificationEntry& e)
{
    py::dict d;
    d["identity_id"] = e.identity_id;
    d["passed"] = e.passed;
    d["residual"] = vec_out(e.residual);
    if (!e.note.empty())
        d["note"] = e.note;
    return d;
}

py::list report_out(const VerificationReport& r)
{
    py::list out;
    for (const auto& e : r.entries)
        out.append(entry_out(e));
    return out;
}

FischerSpace space_in(const std::vector<std::string>& points,
                      const std::vector<std::array<std::size_t, 3>>& lines)
{
    FischerSpace s{points, lines};
    validate_fischer_space(s);
    return s;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact rational arithmetic for structure-constant algebras, idempotent axis "
              "classification, fusion gradings, Miyamoto involutions and identity suites";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);

    py::class_<AlgebraTable>(m, "AlgebraTable")
        .def_property_readonly("dim", &AlgebraTable::dim)
        .def_property_readonly("basis", &AlgebraTable::basis)
        .def("basis_element", [](const AlgebraTable& t, std::size_t i) {
            if (i >= t.dim())
                throw input_error("basis index out of range");
            return vec_out(t.basis_element(i));
        })
        .def("product",
             [](const AlgebraTable& t, std::size_t i, std::size_t j) {
                 if (i >= t.dim() || j >= t.dim())
                     throw input_error("basis index out of range");
                 return vec_out(t.basis_product(i, j));
             })
        .def("multiply",
             [](const AlgebraTable& t, const std::vector<std::string>& u,
                const std::vector<std::string>& v) {
                 return vec_out(multiply(t, vec_in(u), vec_in(v)));
             })
        .def("is_commutative", &AlgebraTable::is_commutative)
        .def("perturbed", &AlgebraTable::perturbed)
        .def("to_json", [](const AlgebraTable& t) { return algebra_to_json(t).dump(2); })
        .def("__repr__", [](const AlgebraTable& t) {
            return "AlgebraTable(dim=" + std::to_string(t.dim()) + ")";
        });

    py::class_<AxisProfile>(m, "AxisProfile")
        .def_property_readonly("axis", [](const AxisProfile& p) { return vec_out(p.axis); })
        .def_property_readonly("lmbda",
                               [](const AxisProfile& p) -> std::optional<std::string> {
                                   if (!p.lambda)
                                       return std::nullopt;
                                   return rational_str(*p.lambda);
                               })
        .def_property_readonly("delta",
                               [](const AxisProfile& p) -> std::optional<std::string> {
                                   if (!p.delta)
                                       return std::nullopt;
                                   return rational_str(*p.delta);
                               })
        .def_readonly("idempotent", &AxisProfile::idempotent)
        .def_readonly("primitive_left", &AxisProfile::primitive_left)
        .def_readonly("primitive_right", &AxisProfile::primitive_right)
        .def_readonly("operators_commute", &AxisProfile::operators_commute)
        .def_readonly("jordan_type", &AxisProfile::jordan_type)
        .def_readonly("failure", &AxisProfile::failure)
        .def_property_readonly("primitive_two_sided", &AxisProfile::primitive_two_sided)
        .def_property_readonly("minpoly_left",
                               [](const AxisProfile& p) { return p.minpoly_left.str(); })
        .def_property_readonly("minpoly_right",
                               [](const AxisProfile& p) { return p.minpoly_right.str(); })
        .def_property_readonly("space_dims", [](const AxisProfile& p) {
            py::dict d;
            d["A11"] = p.spaces.s11.dim();
            d["A00"] = p.spaces.s00.dim();
            d["AL0"] = p.spaces.sL0.dim();
            d["A0D"] = p.spaces.s0D.dim();
            d["ALD"] = p.spaces.sLD.dim();
            return d;
        })
        .def_property_readonly("spaces", [](const AxisProfile& p) {
            py::dict d;
            d["A11"] = subspace_out(p.spaces.s11);
            d["A00"] = subspace_out(p.spaces.s00);
            d["AL0"] = subspace_out(p.spaces.sL0);
            d["A0D"] = subspace_out(p.spaces.s0D);
            d["ALD"] = subspace_out(p.spaces.sLD);
            return d;
        })
        .def("to_json", [](const AxisProfile& p) { return profile_to_json(p).dump(2); });

    m.def("dim2_algebra",
          [](const std::string& lambda) { return dim2_algebra(parse_rational(lambda)); },
          py::arg("lmbda"));
    m.def("matsuo_algebra",
          [](const std::vector<std::string>& points,
             const std::vector<std::array<std::size_t, 3>>& lines, const std::string& eta) {
              return matsuo_algebra(space_in(points, lines), parse_rational(eta));
          },
          py::arg("points"), py::arg("lines"), py::arg("eta"));
    m.def("line3_matsuo",
          [](const std::string& eta) {
              return matsuo_algebra(line3_space(), parse_rational(eta));
          },
          py::arg("eta"));
    m.def("sym4_matsuo",
          [](const std::string& eta) {
              return matsuo_algebra(sym4_transposition_space(), parse_rational(eta));
          },
          py::arg("eta"));
    m.def("matrix_unit_algebra", &matrix_unit_algebra);

    m.def("load_algebra", &load_algebra, py::arg("path"));
    m.def("save_algebra", &save_algebra, py::arg("table"), py::arg("path"));
    m.def("algebra_from_json",
          [](const std::string& text) { return algebra_from_json(nlohmann::json::parse(text)); });

    m.def("is_idempotent",
          [](const AlgebraTable& t, const std::vector<std::string>& a) {
              return is_idempotent(t, vec_in(a));
          });
    m.def("classify_axis",
          [](const AlgebraTable& t, const std::vector<std::string>& a) {
              return classify_axis(t, vec_in(a));
          });
    m.def("decompose",
          [](const AlgebraTable& t, const std::vector<std::string>& axis,
             const std::vector<std::string>& v) {
              AxisProfile p = classify_axis(t, vec_in(axis));
              TwoSidedDecomposition d = decompose(p, vec_in(v));
              py::dict out;
              out["alpha"] = rational_str(d.alpha);
              out["comp_00"] = vec_out(d.comp_00);
              out["comp_L0"] = vec_out(d.comp_L0);
              out["comp_0D"] = vec_out(d.comp_0D);
              out["comp_LD"] = vec_out(d.comp_LD);
              return out;
          });
    m.def("check_fusion",
          [](const AlgebraTable& t, const std::vector<std::string>& axis) {
              return report_out(check_fusion(t, classify_axis(t, vec_in(axis))));
          });

    m.def("left_operator",
          [](const AlgebraTable& t, const std::vector<std::string>& a) {
              return matrix_out(left_operator(t, vec_in(a)));
          });
    m.def("right_operator",
          [](const AlgebraTable& t, const std::vector<std::string>& a) {
              return matrix_out(right_operator(t, vec_in(a)));
          });
    m.def("minimal_polynomial",
          [](const std::vector<std::vector<std::string>>& rows) {
              return minimal_polynomial(matrix_in(rows)).str();
          });
    m.def("eigenspace",
          [](const std::vector<std::vector<std::string>>& rows, const std::string& mu) {
              return subspace_out(eigenspace(matrix_in(rows), parse_rational(mu)));
          });
    m.def("two_sided_eigenspace",
          [](const AlgebraTable& t, const std::vector<std::string>& a, const std::string& mu,
             const std::string& nu) {
              return subspace_out(
                  two_sided_eigenspace(t, vec_in(a), parse_rational(mu), parse_rational(nu)));
          });

    m.def("subalgebra_closure",
          [](const AlgebraTable& t, const std::vector<std::vector<std::string>>& gens) {
              std::vector<Element> g;
              for (const auto& v : gens)
                  g.push_back(vec_in(v));
              Closure cl = subalgebra_closure(t, g);
              return py::make_tuple(cl.space.dim(), subspace_out(cl.space), cl.table);
          });

    m.def("tau_lambda",
          [](const AlgebraTable& t, const std::vector<std::string>& axis) {
              return matrix_out(tau_lambda(classify_axis(t, vec_in(axis))));
          });
    m.def("tau_delta",
          [](const AlgebraTable& t, const std::vector<std::string>& axis) {
              return matrix_out(tau_delta(classify_axis(t, vec_in(axis))));
          });
    m.def("tau_diag",
          [](const AlgebraTable& t, const std::vector<std::string>& axis) {
              return matrix_out(tau_diag(classify_axis(t, vec_in(axis))));
          });
    m.def("is_automorphism",
          [](const AlgebraTable& t, const std::vector<std::vector<std::string>>& map) {
              return is_automorphism(t, matrix_in(map));
          });
    m.def("apply_map",
          [](const std::vector<std::vector<std::string>>& map,
             const std::vector<std::string>& v) {
              return vec_out(matrix_in(map).apply(vec_in(v)));
          });
    m.def("axis_orbit",
          [](const AlgebraTable& t, const std::vector<std::vector<std::string>>& seeds,
             const std::vector<std::vector<std::vector<std::string>>>& maps, std::size_t cap) {
              std::vector<Element> s;
              for (const auto& v : seeds)
                  s.push_back(vec_in(v));
              std::vector<AlgebraMap> ms;
              for (const auto& mm : maps)
                  ms.push_back(matrix_in(mm));
              std::vector<std::vector<std::string>> out;
              for (const auto& v : axis_orbit(t, s, ms, cap))
                  out.push_back(vec_out(v));
              return out;
          },
          py::arg("table"), py::arg("seeds"), py::arg("maps"), py::arg("cap") = 10000);

    m.def("find_idempotents",
          [](const AlgebraTable& t) {
              std::vector<std::vector<std::string>> out;
              for (const auto& v : find_idempotents(t))
                  out.push_back(vec_out(v));
              return out;
          });
    m.def("find_axes", [](const AlgebraTable& t) {
        std::vector<std::vector<std::string>> out;
        for (const auto& v : find_axes(t))
            out.push_back(vec_out(v));
        return out;
    });

    m.def("verify_pair",
          [](const AlgebraTable& t, const std::vector<std::string>& a,
             const std::vector<std::string>& b) {
              return report_out(verify_pair(t, vec_in(a), vec_in(b)));
          });
    m.def("verify_axes",
          [](const AlgebraTable& t, const std::vector<std::vector<std::string>>& axes) {
              std::vector<Element> as;
              for (const auto& v : axes)
                  as.push_back(vec_in(v));
              return report_out(verify_axes(t, as));
          });
    m.def("verify_random",
          [](std::uint64_t seed, std::size_t count) {
              return report_out(verify_random(seed, count));
          },
          py::arg("seed"), py::arg("count"));
}
