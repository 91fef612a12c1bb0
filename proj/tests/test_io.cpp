#include "axial/constructions.hpp"
#include "axial/error.hpp"
#include "axial/io.hpp"
#include "axial/verifier.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace axial;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path()
            / ("axial-io-test-" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("algebra json round-trips, omitted products are zero")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    ordered_json j = algebra_to_json(m3);
    AlgebraTable back = algebra_from_json(j);
    CHECK(back == m3);

    // Serialization is stable byte-for-byte.
    CHECK(algebra_to_json(back).dump() == j.dump());

    nlohmann::json partial = {
        {"dim", 2},
        {"basis", {"a", "b"}},
        {"products", {{{"i", 0}, {"j", 0}, {"coeffs", {"1", "0"}}}}},
    };
    AlgebraTable t = algebra_from_json(partial);
    CHECK(t.basis_product(0, 0) == t.basis_element(0));
    CHECK(vec_is_zero(t.basis_product(0, 1)));
    CHECK(vec_is_zero(t.basis_product(1, 1)));
}

TEST_CASE("algebra json rejects malformed input")
{
    nlohmann::json dup = {
        {"dim", 1},
        {"basis", {"a"}},
        {"products",
         {{{"i", 0}, {"j", 0}, {"coeffs", {"1"}}}, {{"i", 0}, {"j", 0}, {"coeffs", {"2"}}}}},
    };
    CHECK_THROWS_WITH_AS(algebra_from_json(dup), doctest::Contains("duplicate product"),
                         input_error);

    CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"dim", 0}, {"basis", nlohmann::json::array()}}),
                    input_error);
    CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"dim", 2}, {"basis", {"a"}}}), input_error);

    nlohmann::json bad_index = {
        {"dim", 1}, {"basis", {"a"}},
        {"products", {{{"i", 0}, {"j", 5}, {"coeffs", {"1"}}}}}};
    CHECK_THROWS_AS(algebra_from_json(bad_index), input_error);

    nlohmann::json bad_coeff = {
        {"dim", 1}, {"basis", {"a"}},
        {"products", {{{"i", 0}, {"j", 0}, {"coeffs", {"1/0"}}}}}};
    CHECK_THROWS_AS(algebra_from_json(bad_coeff), input_error);
}

TEST_CASE("file loading errors carry the path")
{
    TempDir dir;
    CHECK_THROWS_WITH_AS(load_algebra(dir.file("missing.json")),
                         doctest::Contains("missing.json"), input_error);
    write_file(dir.file("broken.json"), "{ not json");
    CHECK_THROWS_WITH_AS(load_algebra(dir.file("broken.json")),
                         doctest::Contains("malformed JSON"), input_error);

    AlgebraTable t = dim2_algebra(Rational(1, 3));
    save_algebra(t, dir.file("dim2.json"));
    CHECK(load_algebra(dir.file("dim2.json")) == t);
}

TEST_CASE("fischer space json validation")
{
    nlohmann::json good = {{"points", {"a", "b", "c"}}, {"lines", {{0, 1, 2}}}};
    FischerSpace s = fischer_from_json(good);
    CHECK(s.points.size() == 3);
    CHECK(s.lines.size() == 1);

    nlohmann::json repeated = {{"points", {"a", "b", "c"}}, {"lines", {{0, 0, 1}}}};
    CHECK_THROWS_WITH_AS(fischer_from_json(repeated), doctest::Contains("repeated point"),
                         input_error);

    nlohmann::json shared = {{"points", {"a", "b", "c", "d"}},
                             {"lines", {{0, 1, 2}, {1, 0, 3}}}};
    CHECK_THROWS_WITH_AS(fischer_from_json(shared), doctest::Contains("share two points"),
                         input_error);

    TempDir dir;
    write_file(dir.file("line3.json"), fischer_to_json(line3_space()).dump());
    CHECK(load_fischer_space(dir.file("line3.json")).points == line3_space().points);
}

TEST_CASE("element and report serialization")
{
    AlgebraTable t = dim2_algebra(Rational(1, 3));
    Element v{Rational(-1, 2), Rational(3)};
    ordered_json j = element_to_json(v);
    CHECK(j.dump() == "[\"-1/2\",\"3\"]");
    CHECK(element_from_json(j, 2) == v);
    CHECK_THROWS_AS(element_from_json(j, 3), input_error);

    CHECK(element_str(t, v) == "-(1/2)*a + 3*b");
    CHECK(element_str(t, t.zero_element()) == "0");

    VerificationReport r = verify_pair(t, t.basis_element(0), t.basis_element(1));
    ordered_json rep = report_to_json(r);
    REQUIRE(rep.is_array());
    CHECK(rep.size() == r.entries.size());
    CHECK(rep[0].contains("identity_id"));
    CHECK(rep[0].contains("passed"));
    CHECK(rep[0].contains("residual"));

    // Byte-identical on identical inputs.
    CHECK(report_to_json(verify_pair(t, t.basis_element(0), t.basis_element(1))).dump()
          == rep.dump());
}

TEST_CASE("profile serialization mirrors the profile fields")
{
    AlgebraTable m3 = matsuo_algebra(line3_space(), Rational(1, 2));
    AxisProfile p = classify_axis(m3, m3.basis_element(0));
    ordered_json j = profile_to_json(p);
    CHECK(j["lambda"] == "1/4");
    CHECK(j["delta"] == "1/4");
    CHECK(j["primitive_two_sided"] == true);
    CHECK(j["jordan_type"] == true);
    CHECK(j["spaces"]["A00"]["dim"] == 1);
    CHECK(!j.contains("failure"));

    AlgebraTable mu = matrix_unit_algebra();
    ordered_json bad = profile_to_json(classify_axis(mu, mu.basis_element(0)));
    CHECK(bad["lambda"].is_null());
    CHECK(bad["primitive_two_sided"] == false);
    CHECK(bad.contains("failure"));
}
