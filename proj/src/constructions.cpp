#include "axial/constructions.hpp"

#include "axial/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

namespace axial {

void validate_fischer_space(const FischerSpace& space)
{
    const std::size_t n = space.points.size();
    for (std::size_t li = 0; li < space.lines.size(); ++li) {
        const auto& line = space.lines[li];
        for (std::size_t p : line)
            if (p >= n)
                throw input_error("fischer space: line " + std::to_string(li)
                                  + " references point index " + std::to_string(p)
                                  + " out of range");
        if (line[0] == line[1] || line[0] == line[2] || line[1] == line[2])
            throw input_error("fischer space: line " + std::to_string(li)
                              + " has a repeated point");
    }
    // Any two distinct points lie on at most one common line.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t li = 0; li < space.lines.size(); ++li) {
        auto line = space.lines[li];
        std::sort(line.begin(), line.end());
        const std::pair<std::size_t, std::size_t> pairs[3] = {
            {line[0], line[1]}, {line[0], line[2]}, {line[1], line[2]}};
        for (const auto& pr : pairs) {
            auto [it, inserted] = seen.emplace(pr, li);
            if (!inserted)
                throw input_error("fischer space: lines " + std::to_string(it->second) + " and "
                                  + std::to_string(li) + " share two points");
        }
    }
}

AlgebraTable dim2_algebra(const Rational& lambda)
{
    if (lambda == 0 || lambda == 1)
        throw input_error("dim2_algebra: lambda must avoid {0, 1} (not an admissible eigenvalue)");
    if (lambda == Rational(1, 2))
        throw input_error("dim2_algebra: lambda = 1/2 would force lambda = delta, which this "
                          "family excludes");
    const Rational delta = Rational(1) - lambda;
    AlgebraTable t(2, {"a", "b"});
    t.set_product(0, 0, {Rational(1), Rational(0)});
    t.set_product(1, 1, {Rational(0), Rational(1)});
    t.set_product(0, 1, {delta, lambda}); // ab = delta a + lambda b
    t.set_product(1, 0, {lambda, delta}); // ba = delta b + lambda a
    return t;
}

AlgebraTable matsuo_algebra(const FischerSpace& space, const Rational& eta)
{
    if (eta == 0 || eta == 2)
        throw input_error("matsuo_algebra: eta in {0, 2} gives axis eigenvalue eta/2 in {0, 1}");
    validate_fischer_space(space);

    const std::size_t n = space.points.size();
    if (n == 0)
        throw input_error("matsuo_algebra: space has no points");
    AlgebraTable t(n, space.points);
    for (std::size_t i = 0; i < n; ++i)
        t.set_gamma(i, i, i, Rational(1));
    const Rational coeff = eta / 4; // collinear product (eta/4)(p + q - r)
    for (const auto& line : space.lines) {
        const std::size_t order[3][3] = {{line[0], line[1], line[2]},
                                         {line[0], line[2], line[1]},
                                         {line[1], line[2], line[0]}};
        for (const auto& o : order) {
            Element prod(n, Rational(0));
            prod[o[0]] += coeff;
            prod[o[1]] += coeff;
            prod[o[2]] -= coeff;
            t.set_product(o[0], o[1], prod);
            t.set_product(o[1], o[0], std::move(prod));
        }
    }
    return t;
}

FischerSpace line3_space()
{
    return {{"a", "b", "c"}, {{0, 1, 2}}};
}

FischerSpace sym4_transposition_space()
{
    using Perm = std::array<int, 4>; // images of 0..3
    auto transposition = [](int i, int j) {
        Perm p{0, 1, 2, 3};
        std::swap(p[i], p[j]);
        return p;
    };
    auto compose = [](const Perm& f, const Perm& g) { // f after g
        Perm out;
        for (int i = 0; i < 4; ++i)
            out[i] = f[g[i]];
        return out;
    };

    std::vector<Perm> points;
    std::vector<std::string> labels;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            points.push_back(transposition(i, j));
            labels.push_back("(" + std::to_string(i + 1) + std::to_string(j + 1) + ")");
        }

    auto index_of = [&](const Perm& p) {
        return static_cast<std::size_t>(
            std::find(points.begin(), points.end(), p) - points.begin());
    };

    // Non-commuting transpositions d, e span the line {d, e, ded}.
    std::set<std::array<std::size_t, 3>> lines;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j)
                continue;
            const Perm& d = points[i];
            const Perm& e = points[j];
            if (compose(d, e) == compose(e, d))
                continue;
            std::array<std::size_t, 3> line{i, j, index_of(compose(d, compose(e, d)))};
            std::sort(line.begin(), line.end());
            lines.insert(line);
        }
    return {labels, {lines.begin(), lines.end()}};
}

AlgebraTable matrix_unit_algebra()
{
    AlgebraTable t(4, {"e11", "e12", "e21", "e22"});
    // Basis order e11, e12, e21, e22; e_{ij} e_{kl} = [j == k] e_{il}.
    auto unit = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k)
                        t.set_gamma(unit(i, j), unit(k, l), unit(i, l), Rational(1));
    return t;
}

} // namespace axial
