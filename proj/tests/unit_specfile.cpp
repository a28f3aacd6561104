#include <doctest.h>

#include "cfrac/specfile.hpp"

using namespace cfrac;

namespace {

ErrorKind kind_of(const std::string& text)
{
    try {
        (void)parse_spec_file(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised for: " << text);
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("surd literals")
{
    const QuadExt phi = (QuadExt(1) + QuadExt::sqrt(Rational(5))) / QuadExt(2);
    CHECK(parse_surd("(1 + √5)/2") == phi);
    CHECK(parse_surd("(1+sqrt(5))/2") == phi);
    CHECK(parse_surd("(1 - √5)/2") == phi.conjugate());
    CHECK(parse_surd("-3√2/4") == QuadExt(Rational(0), Rational(-3, 4), Rational(2)));
    CHECK(parse_surd("2*sqrt(3)") == QuadExt(Rational(0), Rational(2), Rational(3)));
    CHECK(parse_surd("√(-3)") == QuadExt::sqrt(Rational(-3)));
    CHECK(parse_surd("5/7") == QuadExt(Rational(5, 7)));
    CHECK(parse_surd("√8") == QuadExt(Rational(0), Rational(2), Rational(2)));
    for (const char* bad : {"", "(1 + √5", "1 + √", "√5/0", "2*", "1 ++ 2", "√5 x"}) CHECK_THROWS_AS(parse_surd(bad), Error);
}

TEST_CASE("canonical surd text round-trips")
{
    for (const char* s : {"(1 + √5)/2", "1 - √3", "-3√2/4", "√(-3)", "(2 - 3√7)/5", "5/7", "-4"}) {
        const QuadExt x = parse_surd(s);
        CHECK(x.str() == s);
        CHECK(parse_surd(x.str()) == x);
    }
}

TEST_CASE("literal towers")
{
    CHECK(Literal::from_json(nlohmann::json(3)).tower() == Tower::Rational);
    CHECK(Literal::from_json("-2/3").tower() == Tower::Rational);
    CHECK(Literal::from_json("√4").tower() == Tower::Rational);
    CHECK(Literal::from_json("1 + √2").tower() == Tower::QuadExt);
    CHECK(Literal::from_json(nlohmann::json{{"re", "1"}, {"im", "-1/2"}}).tower() == Tower::Complex);
    CHECK_THROWS_AS(Literal::from_json(nlohmann::json(0.5)), Error);
    CHECK_THROWS_AS(Literal::from_json(nlohmann::json{{"re", "1"}}), Error);
}

TEST_CASE("spec file parsing")
{
    const auto s = parse_spec_file(R"({"mode": "periodic", "a": ["-3", "1", "1"], "b": ["1", "-1", "-1"], "period": 3})");
    CHECK(s.mode == SpecMode::periodic);
    CHECK(s.period == 3);
    CHECK(s.tower == Tower::Rational);
    const auto p = periodic_block<Rational>(s);
    REQUIRE(p);
    CHECK(p->a(1) == Rational(-3));

    const auto inferred = parse_spec_file(R"({"mode": "periodic", "a": [1, 1], "b": [2, 1]})");
    CHECK(inferred.period == 2);

    const auto q = parse_spec_file(R"({"mode": "finite", "a": ["1"], "b": ["√2", "1/2"]})");
    CHECK(q.tower == Tower::QuadExt);
    CHECK(std::holds_alternative<CFSpec<QuadExt>>(build_spec(q)));

    const auto c = parse_spec_file(
        R"({"mode": "periodic", "a": [1], "b": [{"re": "0", "im": "3"}], "precision_bits": 200})");
    CHECK(c.tower == Tower::Complex);
    CHECK(periodic_block<ComplexFloat>(c)->b(0).precision() == 200);

    const auto up = parse_spec_file(R"({"mode": "finite", "a": [], "b": ["1"], "tower": "complex"})");
    CHECK(up.tower == Tower::Complex);

    const auto g = parse_spec_file(R"({"mode": "generator", "generator": {"name": "regular", "params": {"b": ["2", 1]}}})");
    CHECK(g.generator->name == "regular");
    CHECK(periodic_block<Rational>(g) == PeriodicCF<Rational>({1, 1}, {2, 1}));
    CHECK(!periodic_block<Rational>(parse_spec_file(R"({"mode": "generator", "generator": {"name": "sqrt2"}})")));
}

TEST_CASE("spec file errors")
{
    try {
        (void)parse_spec_file("{\"mode\": \"periodic\",\n  \"a\": [1, 2\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(kind_of(R"({"mode": "periodic", "a": [1, 2], "b": [1], "period": 2})") == ErrorKind::InvalidArgument);
    CHECK(kind_of(R"({"mode": "periodic", "a": [1], "b": [1], "period": 2})") == ErrorKind::InvalidArgument);
    CHECK(kind_of(R"({"mode": "periodic", "a": [0], "b": [1]})") == ErrorKind::InvalidArgument);
    CHECK(kind_of(R"({"mode": "finite", "a": [1], "b": [1]})") == ErrorKind::InvalidArgument);
    CHECK(kind_of(R"({"mode": "cyclic", "a": [], "b": [1]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"mode": "finite", "a": [], "b": [1], "colour": 1})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"mode": "finite", "a": [], "b": ["1 + √2"], "tower": "rational"})") == ErrorKind::TowerMismatch);
    CHECK(kind_of(R"({"mode": "finite", "a": [], "b": ["x"]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"mode": "finite", "a": [], "b": [1], "precision_bits": 8})") == ErrorKind::InvalidArgument);
    CHECK(kind_of(R"({"mode": "generator", "generator": {"name": "nope"}})") == ErrorKind::InvalidArgument);
    CHECK(kind_of(R"([1, 2])") == ErrorKind::ParseError);
}

TEST_CASE("spec files round-trip through canonical JSON")
{
    for (const char* text : {
             R"({"mode": "periodic", "a": ["-3", "1", "1"], "b": ["1", "-1", "-1"]})",
             R"({"mode": "finite", "a": ["2/4", "(2 + 2*sqrt(5))/4"], "b": [1, 2, "0.5"]})",
             R"({"mode": "periodic", "a": [1], "b": [{"re": "0.5", "im": "3"}], "precision_bits": 96})",
             R"({"mode": "generator", "generator": {"name": "negative", "params": {"b": ["3", "2"]}}})",
         }) {
        const SpecFile s = parse_spec_file(text);
        const std::string canon = to_json(s).dump();
        const SpecFile again = parse_spec_file(canon);
        CHECK(again == s);
        CHECK(to_json(again).dump() == canon);
    }
    const auto s = parse_spec_file(R"({"mode": "finite", "a": ["2/4"], "b": ["(2 + 2*sqrt(5))/4", 1]})");
    CHECK(to_json(s)["b"][0] == "(1 + √5)/2");
    CHECK(to_json(s)["a"][0] == "1/2");
}
