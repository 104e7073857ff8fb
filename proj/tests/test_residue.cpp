#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "zacz/residue.hpp"
#include "zacz/rng.hpp"

using namespace zacz;

TEST_CASE("mod_reduce maps into [0, H) including negatives") {
    CHECK(mod_reduce(7, 4) == 3);
    CHECK(mod_reduce(-1, 4) == 3);
    CHECK(mod_reduce(-8, 6) == 4);
    CHECK(mod_reduce(0, 2) == 0);
}

TEST_CASE("residue arithmetic stays in the ring") {
    Residue a(5, 6), b(4, 6);
    CHECK((a + b).value == 3);
    CHECK((a - b).value == 1);
    CHECK((a * 5).value == 1);
    CHECK(Residue(-2, 6).value == 4);
    CHECK_THROWS_AS(Residue(0, 3), std::domain_error);
    CHECK_THROWS_AS(Residue(0, 0), std::domain_error);
    CHECK_THROWS_AS(a + Residue(1, 4), std::domain_error);
}

TEST_CASE("gaussian integers: products, conjugation, unit powers") {
    GaussianInt x{3, -2}, y{1, 4};
    CHECK(x * y == GaussianInt{11, 10});
    CHECK(mul_conj(x, y) == x * y.conj());
    CHECK(x * 3LL == GaussianInt{9, -6});
    CHECK(x.conj().conj() == x);
    CHECK(x.norm_sq() == 13);
    CHECK(unit_i_pow(0) == GaussianInt{1, 0});
    CHECK(unit_i_pow(1) == GaussianInt{0, 1});
    CHECK(unit_i_pow(2) == GaussianInt{-1, 0});
    CHECK(unit_i_pow(3) == GaussianInt{0, -1});
    CHECK(unit_i_pow(-1) == unit_i_pow(3));
    for (int k = 0; k < 8; ++k) CHECK(unit_i_pow(k) * unit_i_pow(4 - k % 4) == unit_i_pow(0));
}

TEST_CASE("exact complex zero tests never use a tolerance on the exact path") {
    const ExactComplex z = ExactComplex::from_gauss({0, 0}, 0.25);
    CHECK(z.is_zero());
    const ExactComplex tiny = ExactComplex::from_gauss({1, 0}, 1e-300);
    CHECK_FALSE(tiny.is_zero(1.0));  // exact path ignores the tolerance
    const ExactComplex f = ExactComplex::from_float({1e-12, 0.0});
    CHECK(f.is_zero(1e-9));
    CHECK_FALSE(f.is_zero(1e-15));
}

TEST_CASE("roots of unity: exact for H dividing 4, floats otherwise") {
    CHECK(root_to_complex(1, 4).exact);
    CHECK(root_to_complex(1, 4).gauss == GaussianInt{0, 1});
    CHECK(root_to_complex(1, 2).gauss == GaussianInt{-1, 0});
    CHECK(root_to_complex(5, 4).gauss == GaussianInt{0, 1});
    const ExactComplex w = root_to_complex(1, 6);
    CHECK_FALSE(w.exact);
    CHECK(w.value().real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w.value().imag() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("bit indexing is MSB-first") {
    // i = 5, m = 3: binary 101, so i_1 = 1, i_2 = 0, i_3 = 1
    CHECK(bits_of(5, 3).bits == std::vector<int>{1, 0, 1});
    CHECK(bit_msb(5, 3, 1) == 1);
    CHECK(bit_msb(5, 3, 2) == 0);
    CHECK(bit_msb(5, 3, 3) == 1);
    CHECK(bits_to_index({1, 0, 1}) == 5);
    for (long long i = 0; i < 16; ++i) CHECK(bits_to_index(bits_of(i, 4).bits) == i);
    CHECK_THROWS_AS(bits_of(8, 3), std::domain_error);
    CHECK_THROWS_AS(bits_of(-1, 3), std::domain_error);
    CHECK_THROWS_AS(bits_of(0, 0), std::domain_error);
}

TEST_CASE("rng streams are frozen across platforms") {
    Rng r(42);
    CHECK(r.next() == 13679457532755275413ULL);
    CHECK(r.next() == 2949826092126892291ULL);
    CHECK(r.next() == 5139283748462763858ULL);
    Rng s(7);
    CHECK(s.below(10) == 7);
    CHECK(s.below(10) == 4);
    CHECK(s.below(10) == 6);
    CHECK(s.below(10) == 3);
}

TEST_CASE("rng bounds and reproducibility") {
    Rng a(123), b(123);
    for (int i = 0; i < 1000; ++i) {
        const uint64_t n = 1 + a.below(1000);
        CHECK(b.below(1000) + 1 == n);
        Rng probe(n);
        CHECK(probe.below(n) < n);
    }
    Rng c(9);
    for (int i = 0; i < 200; ++i) {
        const int v = c.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
        const double u = c.real01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("rng normal has roughly the requested deviation") {
    Rng r(2024);
    double sum = 0.0, sq = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double x = r.normal(0.5);
        sum += x;
        sq += x * x;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(std::sqrt(sq / n) == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("shuffle permutes deterministically") {
    std::vector<int> v{1, 2, 3, 4, 5, 6, 7, 8};
    Rng r(5);
    r.shuffle(v);
    std::vector<int> w{1, 2, 3, 4, 5, 6, 7, 8};
    Rng r2(5);
    r2.shuffle(w);
    CHECK(v == w);
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
}
