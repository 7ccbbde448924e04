#include <doctest.h>

#include "degenstir/render.hpp"

using namespace degenstir;

TEST_CASE("polynomial strings") {
    CHECK(poly_string(LambdaPoly()) == "0");
    CHECK(poly_string(LambdaPoly::one()) == "1");
    CHECK(poly_string(LambdaPoly::from_coeffs({Rational(3), Rational(-3)})) == "3 - 3*l");
    CHECK(poly_string(LambdaPoly::from_coeffs({Rational(1), Rational(-3), Rational(2)})) ==
          "1 - 3*l + 2*l^2");
    CHECK(poly_string(LambdaPoly::from_coeffs({Rational(0), Rational(1)})) == "l");
    CHECK(poly_string(LambdaPoly::from_coeffs({Rational(0), Rational(-1)})) == "-l");
    CHECK(poly_string(LambdaPoly::from_coeffs({Rational(-1, 2), Rational(1, 2)})) ==
          "-1/2 + 1/2*l");
}

TEST_CASE("two-variable strings") {
    CHECK(bivar_string(BivarPoly()) == "0");
    const auto p = x_var() * x_var() - BivarPoly(lambda_var()) * x_var();
    CHECK(bivar_string(p) == "-l*x + x^2");
    const auto q = x_var() * (LambdaPoly::one() - lambda_var()) + BivarPoly::one();
    CHECK(bivar_string(q) == "1 + (1 - l)*x");
}

TEST_CASE("json serialization shapes") {
    CHECK(to_json(Rational(-7, 3)) == Json("-7/3"));
    CHECK(to_json(LambdaPoly()).dump() == "[]");
    CHECK(to_json(LambdaPoly::from_coeffs({Rational(3), Rational(-3)})).dump() ==
          "[\"3\",\"-3\"]");
    const auto p = x_var() * x_var() - BivarPoly(lambda_var()) * x_var();
    CHECK(to_json(p).dump() == "[[],[\"0\",\"-1\"],[\"1\"]]");
}

TEST_CASE("series serialization carries the order") {
    TruncSeries<Rational> s(2);
    s[0] = Rational(1);
    s[2] = Rational(-1, 2);
    const auto j = series_to_json(s);
    CHECK(j["order"] == 2);
    CHECK(j["coeffs"].dump() == "[\"1\",\"0\",\"-1/2\"]");
}

TEST_CASE("triangle rendering") {
    const auto tri = build_triangle(TriangleAlgorithm::Recurrence, 3);

    SUBCASE("json, symbolic") {
        const auto text = render_triangle(tri, OutputFormat::JsonFormat, std::nullopt);
        const auto parsed = Json::parse(text);
        CHECK(parsed["algorithm"] == "recurrence");
        CHECK(parsed["N_max"] == 3);
        // row 3 = [0, 1 - 3l + 2l^2, 3 - 3l, 1]
        CHECK(parsed["rows"][3][0].dump() == "[]");
        CHECK(parsed["rows"][3][1].dump() == "[\"1\",\"-3\",\"2\"]");
        CHECK(parsed["rows"][3][2].dump() == "[\"3\",\"-3\"]");
        CHECK(parsed["rows"][3][3].dump() == "[\"1\"]");
    }

    SUBCASE("json, evaluated at 0") {
        const auto text = render_triangle(tri, OutputFormat::JsonFormat, Rational(0));
        const auto parsed = Json::parse(text);
        CHECK(parsed["lambda"] == "0");
        CHECK(parsed["rows"][3] == Json::array({"0", "1", "3", "1"}));
    }

    SUBCASE("csv uses l-strings") {
        const auto text = render_triangle(tri, OutputFormat::Csv, std::nullopt);
        CHECK(text.find("n,k,value\n") == 0);
        CHECK(text.find("3,2,3 - 3*l\n") != std::string::npos);
        CHECK(text.find("3,0,0\n") != std::string::npos);
    }

    SUBCASE("markdown uses the greek letter") {
        const auto text = render_triangle(tri, OutputFormat::Markdown, std::nullopt);
        CHECK(text.find("\xce\xbb") != std::string::npos);
    }
}

TEST_CASE("bernoulli rendering") {
    BernoulliTable table{Rational(1), BernoulliRoute::Series,
                         {LambdaPoly::one(),
                          LambdaPoly::from_coeffs({Rational(-1, 2), Rational(1, 2)})}};
    const auto text = render_bernoulli(table, OutputFormat::JsonFormat, std::nullopt);
    const auto parsed = Json::parse(text);
    CHECK(parsed["alpha"] == "1");
    CHECK(parsed["route"] == "series");
    CHECK(parsed["values"][1].dump() == "[\"-1/2\",\"1/2\"]");

    const auto at_zero = render_bernoulli(table, OutputFormat::JsonFormat, Rational(0));
    CHECK(Json::parse(at_zero)["values"] == Json::array({"1", "-1/2"}));

    const auto csv = render_bernoulli(table, OutputFormat::Csv, std::nullopt);
    CHECK(csv.find("1,-1/2 + 1/2*l\n") != std::string::npos);
}

TEST_CASE("format parsing") {
    CHECK(format_from_name("json") == OutputFormat::JsonFormat);
    CHECK(format_from_name("csv") == OutputFormat::Csv);
    CHECK(format_from_name("markdown") == OutputFormat::Markdown);
    CHECK_THROWS_AS(format_from_name("yaml"), ParseError);
}
