#include "axial/axis.hpp"
#include "axial/constructions.hpp"
#include "axial/error.hpp"
#include "axial/miyamoto.hpp"

#include <doctest.h>

using namespace axial;

namespace {

Element el(std::initializer_list<Rational> cs)
{
    return Element(cs);
}

} // namespace

TEST_CASE("tau maps on the dim-2 algebra")
{
    AlgebraTable t = dim2_algebra(Rational(1, 3));
    AxisProfile pa = classify_axis(t, t.basis_element(0));
    Element a = t.basis_element(0), b = t.basis_element(1);

    AlgebraMap tl = tau_lambda(pa);
    CHECK(tl.apply(b) == el({Rational(2), Rational(-1)})); // 2a - b
    CHECK(tl.apply(a) == a);

    AlgebraMap td = tau_delta(pa);
    CHECK(td.apply(b) == el({Rational(2), Rational(-1)}));
    CHECK(td.apply(a) == a);

    AlgebraMap tg = tau_diag(pa);
    CHECK(tg.apply(b) == b); // both negated spaces vanish here
    CHECK(tg.apply(a) == a);
    CHECK(tl * td == tg);
}

TEST_CASE("tau_lambda permutes the other two points of the one-line matsuo algebra")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    AxisProfile pa = classify_axis(m3, m3.basis_element(0));
    AlgebraMap tl = tau_lambda(pa);
    CHECK(tl.apply(m3.basis_element(1)) == m3.basis_element(2));
    CHECK(tl.apply(m3.basis_element(2)) == m3.basis_element(1));
    CHECK(tl.apply(m3.basis_element(0)) == m3.basis_element(0));
}

TEST_CASE("tau maps are involutive automorphisms and compose to tau_diag")
{
    std::vector<AlgebraTable> corpus;
    corpus.push_back(dim2_algebra(Rational(1, 3)));
    corpus.push_back(dim2_algebra(Rational(-2)));
    corpus.push_back(matsuo_algebra(line3_space(), Rational(1, 2)));
    corpus.push_back(matsuo_algebra(sym4_transposition_space(), Rational(1, 2)));

    for (const AlgebraTable& t : corpus) {
        for (const Element& a : find_axes(t)) {
            AxisProfile p = classify_axis(t, a);
            REQUIRE(p.primitive_two_sided());
            AlgebraMap tl = tau_lambda(p), td = tau_delta(p), tg = tau_diag(p);
            const std::size_t n = t.dim();
            CHECK(tl * tl == Matrix::identity(n));
            CHECK(td * td == Matrix::identity(n));
            CHECK(tg * tg == Matrix::identity(n));
            CHECK(is_automorphism(t, tl));
            CHECK(is_automorphism(t, td));
            CHECK(is_automorphism(t, tg));
            CHECK(tl * td == tg);
            CHECK(td * tl == tg);

            // Images of axes are axes of the same type.
            for (const AlgebraMap* m : {&tl, &td, &tg}) {
                AxisProfile image = classify_axis(t, apply_to_axis(t, *m, a));
                CHECK(image.primitive_two_sided());
                CHECK(image.lambda == p.lambda);
                CHECK(image.delta == p.delta);
            }
        }
    }
}

TEST_CASE("is_automorphism rejects non-multiplicative maps")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    CHECK(is_automorphism(m3, Matrix::identity(3)));

    Matrix negate_one = Matrix::identity(3);
    negate_one.at(1, 1) = -1;
    CHECK(!is_automorphism(m3, negate_one));

    CHECK(!is_automorphism(m3, Matrix(3, 3))); // singular
    CHECK_THROWS_AS(is_automorphism(m3, Matrix::identity(2)), input_error);
}

TEST_CASE("apply_to_axis reclassifies images")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    AxisProfile pb = classify_axis(m3, m3.basis_element(1));
    // a^{tau_lambda,b} = c on the one-line algebra
    CHECK(apply_to_axis(m3, tau_lambda(pb), m3.basis_element(0)) == m3.basis_element(2));
    CHECK(apply_to_axis(m3, Matrix::identity(3), m3.basis_element(0)) == m3.basis_element(0));

    AlgebraTable t = dim2_algebra(Rational(1, 3));
    AxisProfile pa = classify_axis(t, t.basis_element(0));
    Element image = apply_to_axis(t, tau_lambda(pa), t.basis_element(1));
    CHECK(image == el({Rational(2), Rational(-1)}));
    AxisProfile pi = classify_axis(t, image);
    CHECK(pi.primitive_two_sided());
    CHECK(*pi.lambda == Rational(1, 3));
    CHECK(*pi.delta == Rational(2, 3));
}

TEST_CASE("tau maps require a valid primitive axis profile")
{
    AlgebraTable mu = matrix_unit_algebra();
    AxisProfile bad = classify_axis(mu, mu.basis_element(0));
    CHECK_THROWS_AS(tau_lambda(bad), input_error);
    CHECK_THROWS_AS(tau_delta(bad), input_error);
    CHECK_THROWS_AS(tau_diag(bad), input_error);
}

TEST_CASE("an absent eigenvalue degrades the corresponding tau gracefully")
{
    // delta absent: tau_delta has nothing to negate and is the identity;
    // tau_lambda still negates A_{lambda,0}.
    AlgebraTable t(2, {"a", "u"});
    t.set_gamma(0, 0, 0, Rational(1));
    t.set_gamma(0, 1, 1, Rational(1, 5));
    AxisProfile p = classify_axis(t, t.basis_element(0));
    REQUIRE(p.primitive_two_sided());
    CHECK(tau_delta(p) == Matrix::identity(2));
    Matrix tl = tau_lambda(p);
    CHECK(tl.apply(t.basis_element(1)) == vec_scale(Rational(-1), t.basis_element(1)));
    CHECK(tau_diag(p) == tl);
}

TEST_CASE("axis orbit under all point involutions covers the six transpositions")
{
    AlgebraTable m6 = matsuo_algebra(sym4_transposition_space(), Rational(1, 2));
    std::vector<AlgebraMap> maps;
    for (std::size_t i = 0; i < 6; ++i)
        maps.push_back(tau_lambda(classify_axis(m6, m6.basis_element(i))));

    auto orbit = axis_orbit(m6, {m6.basis_element(0)}, maps);
    CHECK(orbit.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(std::find(orbit.begin(), orbit.end(), m6.basis_element(i)) != orbit.end());

    // Orbit output is sorted lexicographically, hence reproducible.
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));

    CHECK_THROWS_AS(axis_orbit(m6, {m6.basis_element(0)}, maps, 3), input_error);
}
