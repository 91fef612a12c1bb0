#include "axial/miyamoto.hpp"

#include "axial/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace axial {

namespace {

// Sign pattern over (a, s00, sL0, s0D, sLD), assembled by eigenprojection:
// columns of P are the combined eigenbasis, the map is P D P^-1.
AlgebraMap signed_map(const AxisProfile& profile, int sign_L0, int sign_0D, int sign_LD)
{
    if (!profile.primitive_two_sided())
        throw input_error("Miyamoto map requires a primitive two-sided axis: " + profile.failure);

    const std::size_t n = profile.axis.size();
    std::vector<std::pair<RatVec, int>> columns;
    columns.emplace_back(profile.axis, +1);
    for (auto& r : profile.spaces.s00.basis_list())
        columns.emplace_back(std::move(r), +1);
    for (auto& r : profile.spaces.sL0.basis_list())
        columns.emplace_back(std::move(r), sign_L0);
    for (auto& r : profile.spaces.s0D.basis_list())
        columns.emplace_back(std::move(r), sign_0D);
    for (auto& r : profile.spaces.sLD.basis_list())
        columns.emplace_back(std::move(r), sign_LD);
    if (columns.size() != n)
        throw input_error("Miyamoto map: eigenspaces do not decompose the algebra");

    Matrix p(n, n);
    Matrix pd(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            p.at(i, j) = columns[j].first[i];
            pd.at(i, j) = columns[j].second > 0 ? columns[j].first[i] : -columns[j].first[i];
        }
    auto p_inv = inverse(p);
    if (!p_inv)
        throw input_error("Miyamoto map: eigenbasis is not invertible");
    return pd * *p_inv;
}

} // namespace

AlgebraMap tau_lambda(const AxisProfile& profile)
{
    return signed_map(profile, -1, +1, -1);
}

AlgebraMap tau_delta(const AxisProfile& profile)
{
    return signed_map(profile, +1, -1, -1);
}

AlgebraMap tau_diag(const AxisProfile& profile)
{
    return signed_map(profile, -1, -1, +1);
}

bool is_automorphism(const AlgebraTable& table, const AlgebraMap& f)
{
    const std::size_t n = table.dim();
    if (f.rows() != n || f.cols() != n)
        throw input_error("is_automorphism: map dimension does not match algebra");
    if (!inverse(f))
        return false;
    for (std::size_t i = 0; i < n; ++i) {
        Element fi = f.apply(table.basis_element(i));
        for (std::size_t j = 0; j < n; ++j) {
            Element fj = f.apply(table.basis_element(j));
            if (f.apply(table.basis_product(i, j)) != multiply(table, fi, fj))
                return false;
        }
    }
    return true;
}

Element apply_to_axis(const AlgebraTable& table, const AlgebraMap& f, const Element& a)
{
    check_element(table, a, "apply_to_axis");
    if (f.rows() != table.dim() || f.cols() != table.dim())
        throw input_error("apply_to_axis: map dimension does not match algebra");
    return f.apply(a);
}

std::vector<Element> axis_orbit(const AlgebraTable& table, const std::vector<Element>& seeds,
                                const std::vector<AlgebraMap>& maps, std::size_t cap)
{
    std::vector<Element> orbit;
    auto insert_sorted = [&](const Element& v) {
        auto it = std::lower_bound(orbit.begin(), orbit.end(), v);
        if (it != orbit.end() && *it == v)
            return false;
        orbit.insert(it, v);
        return true;
    };

    for (const auto& s : seeds) {
        check_element(table, s, "axis_orbit");
        insert_sorted(s);
    }
    std::vector<Element> frontier = orbit;
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const auto& v : frontier)
            for (const auto& m : maps) {
                Element image = m.apply(v);
                if (insert_sorted(image)) {
                    if (orbit.size() > cap)
                        throw input_error("axis orbit exceeds cap of " + std::to_string(cap));
                    next.push_back(std::move(image));
                }
            }
        frontier = std::move(next);
    }
    return orbit;
}

} // namespace axial
