#include <doctest.h>

#include "cfrac/error.hpp"
#include "cfrac/scalar.hpp"

using namespace cfrac;

TEST_CASE("rational canonical form")
{
    const Rational r(Integer(6), Integer(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), Error);
    try {
        (void)Rational(1, 0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("rational parsing is exact")
{
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-2/3") == Rational(-2, 3));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("1e-6") == Rational(1, 1'000'000));
    CHECK(Rational::parse("-1.5e2") == Rational(-150));
    CHECK(Rational::parse("2.5E-1") == Rational(1, 4));
    CHECK(Rational::parse("  3/9 ") == Rational(1, 3));
    for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1"}) CHECK_THROWS_AS(Rational::parse(bad), Error);
}

TEST_CASE("rational arithmetic")
{
    const Rational a(1, 3), b(-1, 6);
    CHECK(a + b == Rational(1, 6));
    CHECK(a - b == Rational(1, 2));
    CHECK(a * b == Rational(-1, 18));
    CHECK(a / b == Rational(-2));
    CHECK(b.inverse() == Rational(-6));
    CHECK(b.abs() == Rational(1, 6));
    CHECK(a > b);
    CHECK_THROWS_AS(a / Rational(0), Error);
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("quadratic surds normalise the radicand")
{
    const QuadExt s8 = QuadExt::sqrt(Rational(8));
    CHECK(s8.radicand() == 2);
    CHECK(s8.surd_part() == Rational(2));
    CHECK(QuadExt::sqrt(Rational(9)).is_rational());
    CHECK(QuadExt::sqrt(Rational(9)) == QuadExt(3));
    const QuadExt q = QuadExt::sqrt(Rational(1, 3)); // √3/3
    CHECK(q.radicand() == 3);
    CHECK(q.surd_part() == Rational(1, 3));
    CHECK(QuadExt::sqrt(Rational(-12)).radicand() == -3);
}

TEST_CASE("quadratic surd canonical text")
{
    const QuadExt phi = (QuadExt(1) + QuadExt::sqrt(Rational(5))) / QuadExt(2);
    CHECK(phi.str() == "(1 + √5)/2");
    CHECK(phi.conjugate().str() == "(1 - √5)/2");
    CHECK((QuadExt(1) + QuadExt::sqrt(Rational(3))).str() == "1 + √3");
    CHECK((QuadExt(0) - QuadExt(3) * QuadExt::sqrt(Rational(2)) / QuadExt(4)).str() == "-3√2/4");
    CHECK(QuadExt(Rational(5, 7)).str() == "5/7");
    CHECK(QuadExt::sqrt(Rational(-3)).str() == "√(-3)");
}

TEST_CASE("quadratic field arithmetic")
{
    const QuadExt r5 = QuadExt::sqrt(Rational(5));
    const QuadExt phi = (QuadExt(1) + r5) / QuadExt(2);
    CHECK(phi * phi == phi + QuadExt(1));
    CHECK(phi * phi.conjugate() == QuadExt(-1));
    CHECK(phi.norm() == Rational(-1));
    CHECK(phi * phi.inverse() == QuadExt(1));
    CHECK(phi.sign() == 1);
    CHECK(phi.conjugate().sign() == -1);
    CHECK((r5 - QuadExt(3)).sign() == -1);
    CHECK_THROWS_AS(r5 + QuadExt::sqrt(Rational(2)), Error);
    CHECK_THROWS_AS(QuadExt::sqrt(Rational(-1)).sign(), Error);
    CHECK_THROWS_AS(QuadExt(0) / QuadExt(0), Error);
    CHECK(compare_modulus(phi, phi.conjugate()) == std::strong_ordering::greater);
    const QuadExt w = (QuadExt(1) + QuadExt::sqrt(Rational(-3))) / QuadExt(2);
    CHECK(compare_modulus(w, w.conjugate()) == std::strong_ordering::equal);
    CHECK(w.modulus_squared() == QuadExt(1));
}

TEST_CASE("bigfloat precision and rounding")
{
    const BigFloat third(Rational(1, 3), 128);
    CHECK(third.precision() == 128);
    CHECK(third.str(10) == "0.3333333333");
    CHECK((BigFloat(2L, 128).sqrt() * BigFloat(2L, 128).sqrt() - BigFloat(2L, 128)).abs() < BigFloat::pow2(-120, 128));
    CHECK_THROWS_AS(BigFloat(1L, 64) / BigFloat(0L, 64), Error);
    const BigFloat wide = BigFloat(1L, 64) + BigFloat(Rational(1, 3), 256);
    CHECK(wide.precision() == 256);
}

TEST_CASE("complex floats")
{
    CHECK_THROWS_AS(ComplexFloat(32), Error);
    const ComplexFloat i(Rational(0), Rational(1), 128);
    CHECK(i * i == ComplexFloat(-1, 128));
    const ComplexFloat w(QuadExt::sqrt(Rational(-3)), 128);
    CHECK(w.real().is_zero());
    CHECK((w.imag() - BigFloat(3L, 128).sqrt()).abs() < BigFloat::pow2(-120, 128));
    const ComplexFloat z(Rational(3), Rational(4), 128);
    CHECK(z.abs() == BigFloat(5L, 128));
    CHECK((z.sqrt() * z.sqrt() - z).abs() < BigFloat::pow2(-120, 128));
    CHECK(z.conjugate().imag() == BigFloat(-4L, 128));
}

TEST_CASE("scalar promotion")
{
    const Scalar r(Rational(1, 2));
    const Scalar q(QuadExt::sqrt(Rational(2)));
    CHECK((r + q).tower() == Tower::QuadExt);
    CHECK((r + q).str() == "(1 + 2√2)/2");
    const Scalar c(ComplexFloat(Rational(0), Rational(1), 128));
    CHECK((q * c).tower() == Tower::Complex);
    CHECK(Scalar(Rational(2)) == Scalar(QuadExt(2)));
    CHECK(compare_modulus(Scalar(Rational(-3)), Scalar(QuadExt::sqrt(Rational(8)))) == std::partial_ordering::greater);
    CHECK_THROWS_AS(c.promote(Tower::Rational), Error);
}
