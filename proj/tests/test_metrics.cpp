#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qobf/error.hpp"
#include "qobf/metrics.hpp"

#include <random>
#include <string>
#include <vector>

using namespace qobf;

namespace {

Counts make(std::initializer_list<std::pair<const char*, std::uint64_t>> items) {
    Counts c;
    for (const auto& [k, v] : items) {
        c.entries[k] = v;
        c.shots += v;
    }
    return c;
}

} // namespace

TEST_CASE("tvd: worked examples") {
    CHECK(tvd(make({{"0", 1024}}), make({{"0", 1024}})) == 0.0);
    CHECK(tvd(make({{"0", 1024}}), make({{"1", 1024}})) == 1.0);
    // half the mass moved: |512-1024| + |512-0| = 1024; 1024 / 2048 = 0.5
    CHECK(tvd(make({{"00", 512}, {"01", 512}}), make({{"00", 1024}})) == 0.5);
    // 300 shots moved out of 1024
    CHECK(tvd(make({{"0", 724}, {"1", 300}}), make({{"0", 1024}})) ==
          doctest::Approx(300.0 / 1024.0));
}

TEST_CASE("tvd: symmetric and bounded") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        Counts a, b;
        const std::uint64_t shots = 1 + rng() % 4096;
        std::uint64_t ra = shots, rb = shots;
        for (int k = 0; k < 4 && ra > 0; ++k) {
            const std::uint64_t v = (k == 3) ? ra : rng() % (ra + 1);
            if (v) a.entries[std::string(1, char('a' + k))] += v;
            ra -= v;
        }
        for (int k = 0; k < 4 && rb > 0; ++k) {
            const std::uint64_t v = (k == 3) ? rb : rng() % (rb + 1);
            if (v) b.entries[std::string(1, char('b' + k))] += v;
            rb -= v;
        }
        a.shots = b.shots = shots;
        const double d = tvd(a, b);
        CHECK(d == tvd(b, a));
        CHECK(d >= 0.0);
        CHECK(d <= 1.0);
        CHECK(tvd(a, a) == 0.0);
    }
}

TEST_CASE("tvd: rejects mismatched shot totals") {
    CHECK_THROWS_AS(tvd(make({{"0", 100}}), make({{"0", 200}})), Error);
}

TEST_CASE("dfc: worked examples") {
    // all shots correct
    CHECK(dfc(make({{"11", 1024}}), "11") == 1.0);
    // no shot correct
    CHECK(dfc(make({{"00", 1024}}), "11") == -1.0);
    // correct 300, highest incorrect 500
    CHECK(dfc(make({{"11", 300}, {"00", 500}, {"01", 224}}), "11") ==
          doctest::Approx((300.0 - 500.0) / 1024.0));
    // correct output absent from the histogram counts as zero
    CHECK(dfc(make({{"00", 600}, {"01", 424}}), "11") ==
          doctest::Approx(-600.0 / 1024.0));
    // correct is the unique winner
    CHECK(dfc(make({{"11", 700}, {"00", 324}}), "11") ==
          doctest::Approx((700.0 - 324.0) / 1024.0));
}

TEST_CASE("dfc: sole outcome equal to correct has no incorrect competitor") {
    // highest incorrect count is zero when nothing else was observed
    CHECK(dfc(make({{"1", 64}}), "1") == 1.0);
}

TEST_CASE("dfc: invariant under relabeling of incorrect outcomes") {
    const double a = dfc(make({{"11", 300}, {"00", 500}, {"01", 224}}), "11");
    const double b = dfc(make({{"11", 300}, {"10", 500}, {"00", 224}}), "11");
    CHECK(a == b);
}

TEST_CASE("dfc: bounded in [-1, 1]") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        Counts c;
        std::uint64_t rem = 1 + rng() % 2048;
        const std::uint64_t shots = rem;
        for (int k = 0; k < 4 && rem > 0; ++k) {
            const std::uint64_t v = (k == 3) ? rem : rng() % (rem + 1);
            if (v) c.entries[std::string(2, char('0' + k % 2)) + char('0' + k / 2)] += v;
            rem -= v;
        }
        c.shots = shots;
        const double d = dfc(c, "00x");
        CHECK(d >= -1.0);
        CHECK(d <= 1.0);
    }
}

TEST_CASE("dfc: rejects an empty histogram") {
    CHECK_THROWS_AS(dfc(Counts{}, "0"), Error);
}
