#include <doctest.h>

#include "cfrac/batch.hpp"
#include "support.hpp"

using namespace cfrac;

TEST_CASE("enumeration skips zero coefficients")
{
    const long values[] = {-1, 0, 1};
    const auto blocks = enumerate_periodic(2, values);
    CHECK(blocks.size() == 4 + 16);
    CHECK(blocks.front().period() == 1);
    CHECK(blocks.back().period() == 2);
    for (const auto& b : blocks)
        for (const auto& x : b.a_block()) CHECK(!x.is_zero());
}

TEST_CASE("parallel classification matches the serial reference")
{
    const long values[] = {-2, -1, 1, 2};
    const auto blocks = enumerate_periodic(2, values);
    const auto serial = classify_all(blocks, Execution::serial);
    const auto parallel = classify_all(blocks, Execution::parallel);
    REQUIRE(serial.size() == blocks.size());
    REQUIRE(parallel.size() == blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        CHECK(serial[i].verdict.kind == parallel[i].verdict.kind);
        CHECK(serial[i].verdict.limit == parallel[i].verdict.limit);
        CHECK(serial[i].verdict.thiele_q == parallel[i].verdict.thiele_q);
        CHECK(serial[i].verdict.kind == classify(blocks[i]).verdict.kind);
    }
}

TEST_CASE("parallel certificates match the serial reference")
{
    testing::Rng rng(testing::kSeed);
    std::vector<CFSpec<Rational>> specs;
    for (int i = 0; i < 24; ++i) specs.push_back(testing::random_semiregular(rng, 40));
    specs.push_back(CFSpec<Rational>::periodic(PeriodicCF<Rational>({-1}, {Rational(3, 2)})));
    const auto serial = certify_all(specs, 40, Execution::serial);
    const auto parallel = certify_all(specs, 40, Execution::parallel);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CHECK(serial[i].ok == parallel[i].ok);
        CHECK(serial[i].bounds_checked == parallel[i].bounds_checked);
        CHECK(serial[i].failure == parallel[i].failure);
    }
    for (std::size_t i = 0; i + 1 < specs.size(); ++i) CHECK(serial[i].ok);
    CHECK(!serial.back().ok);
    CHECK(batch_threads() >= 1);
}
