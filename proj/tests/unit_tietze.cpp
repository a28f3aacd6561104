#include <doctest.h>

#include "cfrac/tietze.hpp"

using namespace cfrac;

namespace {

CFSpec<Rational> constant(const Rational& a, const Rational& b)
{
    return CFSpec<Rational>::periodic(PeriodicCF<Rational>({a}, {b}));
}

} // namespace

TEST_CASE("semi-regular validation")
{
    CHECK(validate_semiregular(constant(1, 1), 50).valid);
    CHECK(validate_semiregular(constant(-1, 2), 50).valid);
    const auto bad = validate_semiregular(constant(-1, Rational(3, 2)), 50);
    CHECK(!bad.valid);
    REQUIRE(bad.first_violation);
    CHECK(bad.first_violation->n == 1);
    CHECK(bad.first_violation->which == SemiRegularViolation::sum_below_one);

    const auto not_unit = validate_semiregular(CFSpec<Rational>::finite({1, 2}, {0, 1, 1}), 5);
    REQUIRE(not_unit.first_violation);
    CHECK(not_unit.first_violation->n == 2);
    CHECK(not_unit.first_violation->which == SemiRegularViolation::a_not_unit);

    const auto small_b = validate_semiregular(CFSpec<Rational>::finite({1, 1}, {0, 2, Rational(1, 2)}), 5);
    REQUIRE(small_b.first_violation);
    CHECK(small_b.first_violation->which == SemiRegularViolation::b_below_one);

    // The last finite index has no successor, so only b(N) >= 1 applies there.
    const auto tail = validate_semiregular(CFSpec<Rational>::finite({1, -1}, {0, 2, 1}), 9);
    CHECK(tail.valid);
    CHECK(tail.checked_up_to == 2);
}

TEST_CASE("semi-regular validation in other towers")
{
    const auto q = CFSpec<QuadExt>::periodic(PeriodicCF<QuadExt>({QuadExt(-1)}, {QuadExt::sqrt(Rational(5))}));
    CHECK(validate_semiregular(q, 10).valid);
    const auto q_bad = CFSpec<QuadExt>::periodic(PeriodicCF<QuadExt>({QuadExt(-1)}, {QuadExt::sqrt(Rational(3))}));
    CHECK(!validate_semiregular(q_bad, 10).valid);
    const auto c = CFSpec<ComplexFloat>::periodic(PeriodicCF<ComplexFloat>({ComplexFloat(1, 128)}, {ComplexFloat(1, 128)}));
    CHECK_THROWS_AS(validate_semiregular(c, 10), Error);
}

TEST_CASE("denominator bound certificate")
{
    const auto bounds = denominator_bounds_certificate(constant(-1, 2), 30);
    REQUIRE(bounds.size() == 30);
    for (const auto& b : bounds) {
        CHECK(b.bound_type == BoundCase::minus_case);
        CHECK(b.bound == b.k + 1);
    }
    const auto fib = denominator_bounds_certificate(constant(1, 1), 30);
    for (const auto& b : fib) CHECK(b.bound_type == BoundCase::plus_case);
}

TEST_CASE("denominator bound certificate reports a witness on non-semi-regular input")
{
    try {
        (void)denominator_bounds_certificate(constant(-1, Rational(3, 2)), 20);
        FAIL("expected CertificateFailure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CertificateFailure);
        CHECK(std::string(e.what()).find("k=") != std::string::npos);
    }
}

TEST_CASE("tietze evaluation")
{
    const auto r = evaluate_tietze(constant(-1, 2), Rational(1, 10));
    CHECK(r.value == Rational(13, 12));
    CHECK(r.n_used == 11);
    CHECK(r.error_bound == Rational(1, 11));

    const auto s2 = evaluate_tietze(make_generator("sqrt2", {}), Rational(1, 1'000'000));
    CHECK(r.error_bound > Rational(0));
    CHECK((s2.value * s2.value - Rational(2)).abs() < Rational(3, 1'000'000));
    CHECK(s2.error_bound < Rational(1, 1'000'000));

    const auto coarse = evaluate_tietze(constant(1, 1), Rational(2));
    CHECK(coarse.n_used == 2);
    CHECK(coarse.error_bound <= Rational(1));

    TietzeOptions cap;
    cap.max_terms = 5;
    try {
        (void)evaluate_tietze(constant(-1, 2), Rational(1, 1000), cap);
        FAIL("expected IterationCap");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IterationCap);
    }
    CHECK_THROWS_AS(evaluate_tietze(constant(1, 1), Rational(0)), Error);
}

TEST_CASE("tietze evaluation honours cancellation")
{
    std::stop_source src;
    src.request_stop();
    TietzeOptions o;
    o.stop = src.get_token();
    try {
        (void)evaluate_tietze(constant(-1, 2), Rational(1, 1'000'000), o);
        FAIL("expected Cancelled");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Cancelled);
    }
}
