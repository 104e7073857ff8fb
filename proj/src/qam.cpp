#include "zacz/qam.hpp"

#include <cmath>
#include <stdexcept>

namespace zacz {

std::string to_string(MuSelector mu) { return mu == MuSelector::pi1 ? "pi1" : "pim"; }

MuSelector mu_from_string(const std::string& s) {
    if (s == "pi1") return MuSelector::pi1;
    if (s == "pim") return MuSelector::pim;
    throw std::invalid_argument("unknown mu selector: " + s);
}

void OffsetSpec::validate(int q, int m) const {
    if (case_id < 1 || case_id > 3) throw std::domain_error("offset case must be 1, 2, or 3");
    if (case_id == 1 && mu != MuSelector::pi1)
        throw std::domain_error("case 1 pairs with mu from pi(1)");
    if (case_id == 2 && mu != MuSelector::pim)
        throw std::domain_error("case 2 pairs with mu from pi(m)");
    if (static_cast<int>(d.size()) != q - 1)
        throw std::domain_error("need one offset coefficient row per level 1..q-1");
    const size_t want = case_id == 3 ? 3 : 2;
    for (const auto& row : d) {
        if (row.size() != want) throw std::domain_error("offset row has wrong arity for its case");
        if (case_id == 3 && mod_reduce(2LL * row[0] + row[1] + row[2], 4) != 0)
            throw std::domain_error("case 3 requires 2d0 + d1 + d2 = 0 (mod 4)");
    }
    if (case_id == 3 && (w < 1 || w > m - 1))
        throw std::domain_error("case 3 position w must lie in 1..m-1");
}

void QamParams::validate() const {
    if (q < 1) throw std::domain_error("q must be >= 1");
    base.validate();
    if (base.H != 4) throw std::domain_error("QAM base sequence must be quaternary (H = 4)");
    offsets.validate(q, base.m);
}

double ComplexSeq::scale() const {
    return 1.0 / std::sqrt((std::pow(4.0, q) - 1.0) / 3.0);
}

std::vector<std::complex<double>> ComplexSeq::to_complex() const {
    const std::complex<double> gamma{std::sqrt(0.5), std::sqrt(0.5)};
    const std::complex<double> f = gamma * scale();
    std::vector<std::complex<double>> out(core.size());
    for (size_t i = 0; i < core.size(); ++i) out[i] = f * core[i].to_complex();
    return out;
}

std::vector<double> weights(int q) {
    if (q < 1) throw std::domain_error("q must be >= 1");
    const double s = std::sqrt((std::pow(4.0, q) - 1.0) / 3.0);
    std::vector<double> r(q);
    for (int e = 0; e < q; ++e) r[e] = std::ldexp(1.0, q - 1 - e) / s;
    return r;
}

std::pair<ComplexSeq, ComplexSeq> qam_pair(const QamParams& params) {
    params.validate();
    const int q = params.q;
    const int m = params.base.m;
    const OffsetSpec& off = params.offsets;
    const PhaseSeq base = generate(params.base);
    const long long n = base.n();

    const int mu_slot = off.mu == MuSelector::pi1 ? params.base.pi(1) : params.base.pi(m);
    ComplexSeq a, b;
    a.q = b.q = q;
    a.core.resize(n);
    b.core.resize(n);
    for (long long i = 0; i < n; ++i) {
        GaussianInt acc{0, 0};
        for (int e = 0; e < q; ++e) {
            long long phase = base.values[i];
            if (e > 0) {
                const auto& d = off.d[e - 1];
                switch (off.case_id) {
                    case 1: phase += d[0] + d[1] * bit_msb(i, m, params.base.pi(m)); break;
                    case 2: phase += d[0] + d[1] * bit_msb(i, m, params.base.pi(1)); break;
                    case 3:
                        phase += d[0] + d[1] * bit_msb(i, m, params.base.pi(off.w)) +
                                 d[2] * bit_msb(i, m, params.base.pi(off.w + 1));
                        break;
                }
            }
            acc += unit_i_pow(mod_reduce(phase, 4)) * (1LL << (q - 1 - e));
        }
        a.core[i] = acc;
        const int mu = 2 * bit_msb(i, m, mu_slot);
        b.core[i] = unit_i_pow(mu) * acc;
    }
    return {std::move(a), std::move(b)};
}

std::vector<GaussianInt> constellation_points(const ComplexSeq& seq) {
    std::vector<GaussianInt> out(seq.core.size());
    for (size_t i = 0; i < seq.core.size(); ++i) {
        const GaussianInt& g = seq.core[i];
        out[i] = {g.re - g.im, g.re + g.im};
    }
    return out;
}

bool constellation_ok(const ComplexSeq& seq) {
    const long long lim = (1LL << seq.q) - 1;
    for (const GaussianInt& p : constellation_points(seq)) {
        if (p.re % 2 == 0 || p.im % 2 == 0) return false;
        if (p.re < -lim || p.re > lim || p.im < -lim || p.im > lim) return false;
    }
    return true;
}

OffsetSpec random_offsets(int q, int m, int case_id, Rng& rng, std::optional<MuSelector> mu,
                          int w) {
    OffsetSpec off;
    off.case_id = case_id;
    switch (case_id) {
        case 1: off.mu = MuSelector::pi1; break;
        case 2: off.mu = MuSelector::pim; break;
        case 3:
            off.mu = mu ? *mu : (rng.below(2) ? MuSelector::pim : MuSelector::pi1);
            break;
        default: throw std::domain_error("offset case must be 1, 2, or 3");
    }
    if (case_id == 3) off.w = w > 0 ? w : static_cast<int>(rng.range(1, m - 1));
    for (int e = 1; e < q; ++e) {
        const int d0 = static_cast<int>(rng.below(4));
        const int d1 = static_cast<int>(rng.below(4));
        if (case_id == 3)
            off.d.push_back({d0, d1, mod_reduce(-2LL * d0 - d1, 4)});
        else
            off.d.push_back({d0, d1});
    }
    return off;
}

}  // namespace zacz
