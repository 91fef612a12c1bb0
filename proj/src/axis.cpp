#include "axial/axis.hpp"

#include "axial/error.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace axial {

namespace {

struct AxisPolyShape {
    bool ok = false;
    std::optional<Rational> eigenvalue;
    std::string reason;
};

// Decides whether a monic minimal polynomial divides t(t-1)(t-mu) for some
// mu outside {0,1}. At most one factor t and one factor t-1 may occur; the
// remainder must be constant (eigenvalue absent) or linear with an
// admissible root.
AxisPolyShape axis_poly_shape(const Polynomial& minpoly)
{
    AxisPolyShape shape;
    Polynomial rest = minpoly;
    for (const Rational root : {Rational(0), Rational(1)}) {
        if (rest.eval(root) == 0) {
            rest = rest.divmod(Polynomial::linear_root(root)).first;
            if (rest.eval(root) == 0) {
                shape.reason = "minimal polynomial has a repeated root";
                return shape;
            }
        }
    }
    if (rest.degree() == 0) {
        shape.ok = true;
        return shape;
    }
    if (rest.degree() == 1) {
        Rational mu = -rest.monic().coeffs()[0];
        shape.ok = true;
        shape.eigenvalue = mu;
        return shape;
    }
    shape.reason = "minimal polynomial does not split as t(t-1)(t-mu)";
    return shape;
}

Subspace optional_eigenspace(const Matrix& op, const std::optional<Rational>& mu, std::size_t n)
{
    if (!mu)
        return Subspace::zero(n);
    return eigenspace(op, *mu);
}

} // namespace

bool is_idempotent(const AlgebraTable& table, const Element& a)
{
    check_element(table, a, "is_idempotent");
    return multiply(table, a, a) == a;
}

AxisProfile classify_axis(const AlgebraTable& table, const Element& a)
{
    check_element(table, a, "classify_axis");
    const std::size_t n = table.dim();

    AxisProfile p;
    p.axis = a;
    p.spaces = {Subspace::zero(n), Subspace::zero(n), Subspace::zero(n), Subspace::zero(n),
                Subspace::zero(n)};

    p.idempotent = is_idempotent(table, a);
    if (!p.idempotent) {
        p.failure = "not idempotent";
        return p;
    }
    if (vec_is_zero(a)) {
        p.failure = "zero element";
        return p;
    }

    Matrix left = left_operator(table, a);
    Matrix right = right_operator(table, a);
    p.minpoly_left = minimal_polynomial(left);
    p.minpoly_right = minimal_polynomial(right);

    AxisPolyShape ls = axis_poly_shape(p.minpoly_left);
    AxisPolyShape rs = axis_poly_shape(p.minpoly_right);
    p.left_axis = ls.ok;
    p.right_axis = rs.ok;
    p.lambda = ls.eigenvalue;
    p.delta = rs.eigenvalue;
    if (!ls.ok) {
        p.failure = "left operator: " + ls.reason;
        return p;
    }
    if (!rs.ok) {
        p.failure = "right operator: " + rs.reason;
        return p;
    }

    Subspace a1_left = eigenspace(left, Rational(1));
    Subspace a1_right = eigenspace(right, Rational(1));
    p.primitive_left = a1_left.dim() == 1;
    p.primitive_right = a1_right.dim() == 1;

    p.operators_commute = (left * right == right * left);

    Subspace a0_left = eigenspace(left, Rational(0));
    Subspace a0_right = eigenspace(right, Rational(0));
    Subspace al_left = optional_eigenspace(left, p.lambda, n);
    Subspace ad_right = optional_eigenspace(right, p.delta, n);

    p.spaces.s11 = a1_left.intersect(a1_right);
    p.spaces.s00 = a0_left.intersect(a0_right);
    p.spaces.sL0 = al_left.intersect(a0_right);
    p.spaces.s0D = a0_left.intersect(ad_right);
    p.spaces.sLD = al_left.intersect(ad_right);

    std::size_t total = p.spaces.s11.dim() + p.spaces.s00.dim() + p.spaces.sL0.dim()
        + p.spaces.s0D.dim() + p.spaces.sLD.dim();
    Subspace sum = p.spaces.s11.sum(p.spaces.s00).sum(p.spaces.sL0).sum(p.spaces.s0D)
                       .sum(p.spaces.sLD);
    p.direct_sum = (total == n) && (sum.dim() == n);

    if (!p.primitive_left)
        p.failure = "not primitive: dim A_1(L) = " + std::to_string(a1_left.dim());
    else if (!p.primitive_right)
        p.failure = "not primitive: dim A_1(R) = " + std::to_string(a1_right.dim());
    else if (!p.operators_commute)
        p.failure = "left and right multiplication operators do not commute";
    else if (!p.direct_sum)
        p.failure = "two-sided eigenspaces do not decompose the algebra";

    p.jordan_type = p.primitive_two_sided() && p.spaces.sL0.dim() == 0 && p.spaces.s0D.dim() == 0;
    return p;
}

TwoSidedDecomposition decompose(const AxisProfile& profile, const Element& v)
{
    if (!profile.primitive_two_sided())
        throw input_error("decompose requires a primitive two-sided axis: " + profile.failure);
    const std::size_t n = profile.axis.size();
    if (v.size() != n)
        throw input_error("decompose: element length does not match algebra dimension");

    std::vector<RatVec> rows;
    rows.push_back(profile.axis);
    std::vector<std::pair<std::size_t, std::size_t>> ranges; // [begin, end) per space
    for (const Subspace* s :
         {&profile.spaces.s00, &profile.spaces.sL0, &profile.spaces.s0D, &profile.spaces.sLD}) {
        std::size_t begin = rows.size();
        for (auto& r : s->basis_list())
            rows.push_back(std::move(r));
        ranges.emplace_back(begin, rows.size());
    }

    auto coeffs = solve_combination(rows, v);
    if (!coeffs)
        throw std::logic_error("decompose: element escapes the direct sum");

    auto part = [&](std::size_t which) {
        Element out(n, Rational(0));
        for (std::size_t k = ranges[which].first; k < ranges[which].second; ++k)
            if ((*coeffs)[k] != 0)
                out = vec_add(out, vec_scale((*coeffs)[k], rows[k]));
        return out;
    };

    TwoSidedDecomposition d;
    d.alpha = (*coeffs)[0];
    d.comp_00 = part(0);
    d.comp_L0 = part(1);
    d.comp_0D = part(2);
    d.comp_LD = part(3);
    return d;
}

VerificationReport check_fusion(const AlgebraTable& table, const AxisProfile& profile)
{
    if (!profile.primitive_two_sided())
        throw input_error("check_fusion requires a primitive two-sided axis: " + profile.failure);

    struct Part {
        const char* name;
        int sign_left;  // +1 or -1
        int sign_right;
        std::vector<RatVec> basis;
    };
    std::vector<Part> parts;
    {
        std::vector<RatVec> pp = profile.spaces.s00.basis_list();
        pp.insert(pp.begin(), profile.axis);
        parts.push_back({"++", +1, +1, std::move(pp)});
        parts.push_back({"+-", +1, -1, profile.spaces.s0D.basis_list()});
        parts.push_back({"-+", -1, +1, profile.spaces.sL0.basis_list()});
        parts.push_back({"--", -1, -1, profile.spaces.sLD.basis_list()});
    }

    VerificationReport report;
    const std::size_t n = table.dim();
    for (const Part& p1 : parts)
        for (const Part& p2 : parts) {
            int tl = p1.sign_left * p2.sign_left;
            int tr = p1.sign_right * p2.sign_right;
            for (std::size_t i = 0; i < p1.basis.size(); ++i)
                for (std::size_t j = 0; j < p2.basis.size(); ++j) {
                    Element prod = multiply(table, p1.basis[i], p2.basis[j]);
                    TwoSidedDecomposition d = decompose(profile, prod);
                    Element residual(n, Rational(0));
                    if (!(tl > 0 && tr > 0))
                        residual = vec_add(residual,
                                           vec_add(vec_scale(d.alpha, profile.axis), d.comp_00));
                    if (!(tl > 0 && tr < 0))
                        residual = vec_add(residual, d.comp_0D);
                    if (!(tl < 0 && tr > 0))
                        residual = vec_add(residual, d.comp_L0);
                    if (!(tl < 0 && tr < 0))
                        residual = vec_add(residual, d.comp_LD);
                    if (!vec_is_zero(residual)) {
                        std::string id = std::string("fusion[") + p1.name + "*" + p2.name + "]("
                            + std::to_string(i) + "," + std::to_string(j) + ")";
                        report.add_fail(std::move(id), std::move(residual),
                                        "product escapes the target graded part");
                    }
                }
        }
    return report;
}

TwoGeneratedFrame build_frame(const AlgebraTable& table, const Element& a, const Element& b)
{
    check_element(table, a, "build_frame");
    check_element(table, b, "build_frame");
    if (a == b)
        throw input_error("build_frame: generators must be distinct");

    TwoGeneratedFrame f;
    f.profile_a = classify_axis(table, a);
    if (!f.profile_a.primitive_two_sided())
        throw input_error("build_frame: first generator is not a primitive axis ("
                          + f.profile_a.failure + ")");
    f.profile_b = classify_axis(table, b);
    if (!f.profile_b.primitive_two_sided())
        throw input_error("build_frame: second generator is not a primitive axis ("
                          + f.profile_b.failure + ")");

    TwoSidedDecomposition db = decompose(f.profile_a, b);
    f.alpha_b = db.alpha;
    f.c = db.comp_00;
    f.x = db.comp_L0;
    f.y = db.comp_0D;
    f.z = db.comp_LD;

    TwoSidedDecomposition da = decompose(f.profile_b, a);
    f.beta_a = da.alpha;
    f.c_prime = da.comp_00;
    f.x_prime = da.comp_L0;
    f.y_prime = da.comp_0D;
    f.z_prime = da.comp_LD;

    // Any scalar outside {0,1} satisfies the frame identities when the
    // eigenvalue is absent (its eigenspaces are zero); fix 2 for determinism.
    const Rational absent(2);
    f.lambda = f.profile_a.lambda.value_or(absent);
    f.delta = f.profile_a.delta.value_or(absent);
    f.lambda_p = f.profile_b.lambda.value_or(absent);
    f.delta_p = f.profile_b.delta.value_or(absent);

    f.closure = subalgebra_closure(table, {a, b}).space;
    Subspace span_a = Subspace::span(table.dim(), {a, f.c, f.x, f.y, f.z});
    Subspace span_b = Subspace::span(table.dim(), {b, f.c_prime, f.x_prime, f.y_prime, f.z_prime});
    if (!(span_a == f.closure) || !(span_b == f.closure))
        throw input_error("build_frame: decomposition components do not span the closure");
    return f;
}

std::vector<Element> find_idempotents(const AlgebraTable& table,
                                      const std::vector<Rational>& extra_coeffs)
{
    std::vector<Rational> coeffs{Rational(0), Rational(1), Rational(-1)};
    for (const auto& c : extra_coeffs)
        if (std::find(coeffs.begin(), coeffs.end(), c) == coeffs.end())
            coeffs.push_back(c);

    const std::size_t n = table.dim();
    double budget = 1.0;
    for (std::size_t i = 0; i < n; ++i)
        budget *= static_cast<double>(coeffs.size());
    if (budget > 2e6)
        throw input_error("idempotent search space too large for exhaustive scan");

    std::vector<Element> found;
    Element v(n, Rational(0));
    std::vector<std::size_t> digit(n, 0);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            v[i] = coeffs[digit[i]];
        if (!vec_is_zero(v) && is_idempotent(table, v))
            found.push_back(v);
        std::size_t pos = 0;
        while (pos < n && ++digit[pos] == coeffs.size()) {
            digit[pos] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }
    return found;
}

std::vector<Element> find_axes(const AlgebraTable& table)
{
    std::vector<Element> axes;
    for (auto& v : find_idempotents(table))
        if (classify_axis(table, v).primitive_two_sided())
            axes.push_back(std::move(v));
    return axes;
}

} // namespace axial
