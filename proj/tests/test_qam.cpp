#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "zacz/correlation.hpp"
#include "zacz/qam.hpp"

using namespace zacz;

namespace {

QamParams worked_16qam_example() {
    // m=5 quaternary base, identity permutation, zero coefficients, one
    // case-3 offset level with w=2 and d=(1,1,1)
    QamParams p;
    p.q = 2;
    p.base = GolayParams::identity(5, 4);
    p.offsets.case_id = 3;
    p.offsets.mu = MuSelector::pi1;
    p.offsets.w = 2;
    p.offsets.d = {{1, 1, 1}};
    return p;
}

}  // namespace

TEST_CASE("weights follow the power-of-two profile with unit norm") {
    const auto w2 = weights(2);
    REQUIRE(w2.size() == 2);
    CHECK(w2[0] == doctest::Approx(2.0 / std::sqrt(5.0)));
    CHECK(w2[1] == doctest::Approx(1.0 / std::sqrt(5.0)));
    const auto w3 = weights(3);
    REQUIRE(w3.size() == 3);
    CHECK(w3[0] == doctest::Approx(4.0 / std::sqrt(21.0)));
    CHECK(w3[1] == doctest::Approx(2.0 / std::sqrt(21.0)));
    CHECK(w3[2] == doctest::Approx(1.0 / std::sqrt(21.0)));
    for (int q = 1; q <= 6; ++q) {
        double ss = 0.0;
        for (double r : weights(q)) ss += r * r;
        CHECK(ss == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(weights(0), std::domain_error);
}

TEST_CASE("offset validation enforces the case/mu pairing and arities") {
    OffsetSpec off;
    off.case_id = 1;
    off.mu = MuSelector::pi1;
    off.d = {{0, 1}};
    CHECK_NOTHROW(off.validate(2, 4));
    off.mu = MuSelector::pim;
    CHECK_THROWS_AS(off.validate(2, 4), std::domain_error);

    off.case_id = 2;
    CHECK_NOTHROW(off.validate(2, 4));
    off.mu = MuSelector::pi1;
    CHECK_THROWS_AS(off.validate(2, 4), std::domain_error);

    off.case_id = 3;
    off.w = 2;
    CHECK_THROWS_AS(off.validate(2, 4), std::domain_error);  // arity 2, case 3 wants 3
    off.d = {{1, 1, 1}};
    CHECK_NOTHROW(off.validate(2, 4));
    off.d = {{1, 1, 2}};  // 2*1+1+2 = 5 != 0 mod 4
    CHECK_THROWS_AS(off.validate(2, 4), std::domain_error);
    off.d = {{1, 1, 1}};
    off.w = 4;  // w must be < m
    CHECK_THROWS_AS(off.validate(2, 4), std::domain_error);
    off.w = 0;
    CHECK_THROWS_AS(off.validate(2, 4), std::domain_error);

    off.w = 1;
    off.d = {};  // one row missing for q=2
    CHECK_THROWS_AS(off.validate(2, 4), std::domain_error);
}

TEST_CASE("qam parameter validation requires a quaternary base") {
    QamParams p = worked_16qam_example();
    CHECK_NOTHROW(p.validate());
    p.base.H = 2;
    p.base.c.assign(6, 0);
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p = worked_16qam_example();
    p.q = 0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("worked 16-QAM example reproduces the frozen cores") {
    const auto [a, b] = qam_pair(worked_16qam_example());
    const std::vector<GaussianInt> want_a = {
        {2, 1},  {2, 1},  {2, 1},  {-2, -1}, {1, 0},  {1, 0},  {-1, 0}, {1, 0},
        {1, 0},  {1, 0},  {1, 0},  {-1, 0},  {-2, 1}, {-2, 1}, {2, -1}, {-2, 1},
        {2, 1},  {2, 1},  {2, 1},  {-2, -1}, {1, 0},  {1, 0},  {-1, 0}, {1, 0},
        {-1, 0}, {-1, 0}, {-1, 0}, {1, 0},   {2, -1}, {2, -1}, {-2, 1}, {2, -1}};
    const std::vector<GaussianInt> want_b = {
        {2, 1},   {2, 1},   {2, 1},   {-2, -1}, {1, 0},  {1, 0},  {-1, 0}, {1, 0},
        {1, 0},   {1, 0},   {1, 0},   {-1, 0},  {-2, 1}, {-2, 1}, {2, -1}, {-2, 1},
        {-2, -1}, {-2, -1}, {-2, -1}, {2, 1},   {-1, 0}, {-1, 0}, {1, 0},  {-1, 0},
        {1, 0},   {1, 0},   {1, 0},   {-1, 0},  {-2, 1}, {-2, 1}, {2, -1}, {-2, 1}};
    REQUIRE(a.core.size() == 32);
    REQUIRE(b.core.size() == 32);
    for (size_t i = 0; i < 32; ++i) {
        CHECK(a.core[i] == want_a[i]);
        CHECK(b.core[i] == want_b[i]);
    }
    CHECK(a.q == 2);
    CHECK(a.scale() == doctest::Approx(1.0 / std::sqrt(5.0)));
}

TEST_CASE("pair partner flips sign exactly where the mu bit is set") {
    Rng rng(11);
    for (int case_id : {1, 2, 3}) {
        QamParams p;
        p.q = 3;
        p.base = GolayParams::identity(4, 4);
        rng.shuffle(p.base.pi.map);
        for (int k = 0; k <= 4; ++k) p.base.c[k] = static_cast<int>(rng.below(4));
        p.offsets = random_offsets(3, 4, case_id, rng);
        const auto [a, b] = qam_pair(p);
        const int mu_slot =
            p.offsets.mu == MuSelector::pi1 ? p.base.pi(1) : p.base.pi(4);
        for (long long i = 0; i < a.n(); ++i) {
            const GaussianInt expect =
                bit_msb(i, 4, mu_slot) ? GaussianInt{0, 0} - a.core[i] : a.core[i];
            CHECK(b.core[i] == expect);
        }
    }
}

TEST_CASE("q=1 degenerates to the bare quaternary phases") {
    QamParams p;
    p.q = 1;
    p.base = GolayParams::identity(4, 4);
    p.base.c = {1, 2, 0, 3, 2};
    p.offsets.case_id = 1;
    p.offsets.mu = MuSelector::pi1;
    p.offsets.d = {};
    const auto [a, b] = qam_pair(p);
    const PhaseSeq phases = generate(p.base);
    for (long long i = 0; i < a.n(); ++i)
        CHECK(a.core[i] == unit_i_pow(phases.values[i]));
    CHECK(a.scale() == doctest::Approx(1.0));
}

TEST_CASE("complex values carry the unit rotation and the scale") {
    const auto [a, b] = qam_pair(worked_16qam_example());
    const auto va = a.to_complex();
    const std::complex<double> gamma{std::sqrt(0.5), std::sqrt(0.5)};
    const std::complex<double> want = gamma * (1.0 / std::sqrt(5.0)) * std::complex<double>{2, 1};
    CHECK(va[0].real() == doctest::Approx(want.real()));
    CHECK(va[0].imag() == doctest::Approx(want.imag()));
}

TEST_CASE("constellation points sit on the odd grid of the right extent") {
    Rng rng(21);
    for (int q : {1, 2, 3}) {
        for (int case_id : {1, 2, 3}) {
            QamParams p;
            p.q = q;
            p.base = GolayParams::identity(4, 4);
            rng.shuffle(p.base.pi.map);
            for (int k = 0; k <= 4; ++k) p.base.c[k] = static_cast<int>(rng.below(4));
            p.offsets = random_offsets(q, 4, case_id, rng);
            const auto [a, b] = qam_pair(p);
            CHECK(constellation_ok(a));
            CHECK(constellation_ok(b));
            const long long lim = (1LL << q) - 1;
            for (const GaussianInt& pt : constellation_points(a)) {
                CHECK(std::abs(pt.re) <= lim);
                CHECK(std::abs(pt.im) <= lim);
                CHECK(std::abs(pt.re) % 2 == 1);
                CHECK(std::abs(pt.im) % 2 == 1);
            }
        }
    }
    // a core that escapes the 16-QAM grid is flagged
    ComplexSeq bad;
    bad.q = 2;
    bad.core = {{4, 1}};  // (1+j)*(4+j) = (3, 5): 5 > 3
    CHECK_FALSE(constellation_ok(bad));
}

TEST_CASE("first worked example maps onto the published 16-QAM points") {
    const auto [a, b] = qam_pair(worked_16qam_example());
    const auto pts = constellation_points(a);
    CHECK(pts[0] == GaussianInt{1, 3});    // (1+j)(2+j)
    CHECK(pts[3] == GaussianInt{-1, -3});  // (1+j)(-2-j)
    CHECK(pts[4] == GaussianInt{1, 1});    // (1+j)(1)
    CHECK(pts[6] == GaussianInt{-1, -1});
}

TEST_CASE("random offsets respect the requested shape and seed") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const OffsetSpec o1 = random_offsets(3, 5, 1, rng);
        CHECK(o1.case_id == 1);
        CHECK(o1.mu == MuSelector::pi1);
        CHECK(o1.d.size() == 2);
        for (const auto& row : o1.d) CHECK(row.size() == 2);

        const OffsetSpec o3 = random_offsets(2, 5, 3, rng);
        CHECK(o3.case_id == 3);
        CHECK(o3.w >= 1);
        CHECK(o3.w <= 4);
        REQUIRE(o3.d.size() == 1);
        REQUIRE(o3.d[0].size() == 3);
        CHECK(mod_reduce(2LL * o3.d[0][0] + o3.d[0][1] + o3.d[0][2], 4) == 0);
        CHECK_NOTHROW(o3.validate(2, 5));
    }
    Rng r1(5), r2(5);
    const OffsetSpec x = random_offsets(3, 6, 3, r1);
    const OffsetSpec y = random_offsets(3, 6, 3, r2);
    CHECK(x.d == y.d);
    CHECK(x.w == y.w);
    CHECK(x.mu == y.mu);
    // pinning mu and w skips the corresponding draws
    Rng r3(5);
    const OffsetSpec z = random_offsets(3, 6, 3, r3, MuSelector::pim, 4);
    CHECK(z.mu == MuSelector::pim);
    CHECK(z.w == 4);
}

TEST_CASE("every qam pair is complementary across cases and depths") {
    Rng rng(55);
    for (int q : {2, 3}) {
        for (int case_id : {1, 2, 3}) {
            for (int m : {3, 4, 5}) {
                QamParams p;
                p.q = q;
                p.base = GolayParams::identity(m, 4);
                rng.shuffle(p.base.pi.map);
                for (int k = 0; k <= m; ++k) p.base.c[k] = static_cast<int>(rng.below(4));
                p.offsets = random_offsets(q, m, case_id, rng);
                const auto [a, b] = qam_pair(p);
                CHECK(is_qam_complementary(a, b));
            }
        }
    }
}
