// Arithmetic substrate: residues mod H, H-th roots of unity, Gaussian-integer
// complex values (exact whenever every phase lives in Z_4 or Z_2), and the
// MSB-first bit indexing shared by all sequence constructions.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zacz {

inline constexpr double kPi = 3.14159265358979323846;

// value in [0, H) for even H >= 2
struct Residue {
    int value = 0;
    int modulus = 2;

    Residue() = default;
    Residue(long long v, int H) : modulus(H) {
        if (H < 2 || H % 2 != 0) throw std::domain_error("modulus must be even and >= 2");
        value = static_cast<int>(((v % H) + H) % H);
    }
    Residue operator+(const Residue& o) const { require_same(o); return Residue(value + o.value, modulus); }
    Residue operator-(const Residue& o) const { require_same(o); return Residue(value - o.value, modulus); }
    Residue operator*(long long k) const { return Residue(value * k, modulus); }
    bool operator==(const Residue& o) const { return value == o.value && modulus == o.modulus; }

private:
    void require_same(const Residue& o) const {
        if (modulus != o.modulus) throw std::domain_error("residue modulus mismatch");
    }
};

inline int mod_reduce(long long v, int H) {
    return static_cast<int>(((v % H) + H) % H);
}

struct GaussianInt {
    long long re = 0;
    long long im = 0;

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt operator*(long long k) const { return {re * k, im * k}; }
    GaussianInt& operator+=(const GaussianInt& o) { re += o.re; im += o.im; return *this; }
    GaussianInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    long long norm_sq() const { return re * re + im * im; }
    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

// x * conj(y), the building block of every correlation sum
inline GaussianInt mul_conj(const GaussianInt& x, const GaussianInt& y) {
    return {x.re * y.re + x.im * y.im, x.im * y.re - x.re * y.im};
}

// i^k for k in Z_4
inline GaussianInt unit_i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

// A complex value carrying an exact Gaussian-integer representation when one
// exists (phases in Z_2 or Z_4, i.e. H | 4, and all QAM cores). Zero-tests on
// the exact path never involve a tolerance.
struct ExactComplex {
    bool exact = false;
    GaussianInt gauss;
    double scale = 1.0;  // value = scale * gauss on the exact path
    std::complex<double> approx;

    static ExactComplex from_gauss(const GaussianInt& g, double scale = 1.0) {
        ExactComplex e;
        e.exact = true;
        e.gauss = g;
        e.scale = scale;
        e.approx = scale * g.to_complex();
        return e;
    }
    static ExactComplex from_float(std::complex<double> v) {
        ExactComplex e;
        e.exact = false;
        e.approx = v;
        return e;
    }
    std::complex<double> value() const { return approx; }
    bool is_zero(double tol = 0.0) const {
        return exact ? gauss.is_zero() : std::abs(approx) <= tol;
    }
};

struct UnitRoot {
    Residue exponent;
    UnitRoot(long long k, int H) : exponent(k, H) {}
};

// exp(2*pi*i*k/H); Gaussian-integer path when H divides 4
inline ExactComplex root_to_complex(const UnitRoot& r) {
    const int H = r.exponent.modulus;
    const int k = r.exponent.value;
    if (4 % H == 0) return ExactComplex::from_gauss(unit_i_pow(k * (4 / H)));
    const double ang = 2.0 * kPi * k / H;
    return ExactComplex::from_float({std::cos(ang), std::sin(ang)});
}

inline ExactComplex root_to_complex(long long k, int H) { return root_to_complex(UnitRoot(k, H)); }

// MSB-first binary expansion: i = sum_k bits[k-1] * 2^(m-k), so bits[0] is i_1,
// the most significant bit. This is the only bit order used anywhere.
struct BitIndex {
    long long i = 0;
    int m = 1;
    std::vector<int> bits;  // bits[k-1] = i_k
};

inline int bit_msb(long long i, int m, int k) {
    return static_cast<int>((i >> (m - k)) & 1);
}

inline BitIndex bits_of(long long i, int m) {
    if (m < 1) throw std::domain_error("bits_of: m must be >= 1");
    if (i < 0 || i >= (1LL << m)) throw std::domain_error("bits_of: index out of [0, 2^m)");
    BitIndex b;
    b.i = i;
    b.m = m;
    b.bits.resize(m);
    for (int k = 1; k <= m; ++k) b.bits[k - 1] = bit_msb(i, m, k);
    return b;
}

inline long long bits_to_index(const std::vector<int>& bits) {
    long long i = 0;
    for (int v : bits) i = (i << 1) | (v & 1);
    return i;
}

}  // namespace zacz
