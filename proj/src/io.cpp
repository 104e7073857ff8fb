#include "zacz/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace zacz {

Json to_json(const GolayParams& params) {
    return Json{{"m", params.m}, {"H", params.H}, {"pi", params.pi.map}, {"c", params.c}};
}

Json to_json(const OffsetSpec& offsets) {
    Json j{{"case", offsets.case_id}, {"mu", to_string(offsets.mu)}, {"d", offsets.d}};
    if (offsets.case_id == 3) j["w"] = offsets.w;
    return j;
}

Json to_json(const QamParams& params) {
    Json j = to_json(params.base);
    j["q"] = params.q;
    j["offsets"] = to_json(params.offsets);
    return j;
}

Json to_json(const PhaseSeq& seq) {
    return Json{{"kind", "phase"}, {"H", seq.H}, {"values", seq.values}};
}

Json to_json(const ComplexSeq& seq) {
    Json core = Json::array();
    for (const GaussianInt& g : seq.core) core.push_back(Json::array({g.re, g.im}));
    return Json{{"kind", "qam"}, {"q", seq.q}, {"core", std::move(core)}};
}

Json to_json(const ZaczReport& report) {
    Json j = Json::array();
    for (const auto& [lo, hi] : report.intervals) j.push_back(Json::array({lo, hi}));
    return j;
}

Json to_json(const SearchResult& result) {
    Json conds = Json::array();
    for (CondTag tag : result.conditions) conds.push_back(to_string(tag));
    return Json{{"params", result.qam ? to_json(*result.qam) : to_json(result.base)},
                {"zacz", to_json(result.zacz)},
                {"conditions", std::move(conds)},
                {"agrees", result.agrees}};
}

Json to_json(const ZoneCheck& check) {
    Json predicted = Json::array();
    for (const auto& [lo, hi] : check.predicted) predicted.push_back(Json::array({lo, hi}));
    return Json{{"cond", to_string(check.cond.tag)},
                {"context", check.cond.context == CondContext::qam ? "qam" : "golay"},
                {"predicted", std::move(predicted)},
                {"zacz", to_json(check.detected)},
                {"holds", check.holds}};
}

Json to_json(const AuditReport& report) {
    Json rows = Json::array();
    for (const AuditRow& row : report.rows) {
        Json zones = Json::array();
        for (const auto& [lo, hi] : row.zones) zones.push_back(Json::array({lo, hi}));
        rows.push_back(Json{{"cond", to_string(row.tag)},
                            {"zones", std::move(zones)},
                            {"instances", row.instances},
                            {"failures", row.failures},
                            {"pass", row.pass()}});
    }
    return Json{{"m", report.m},
                {"H", report.H},
                {"mutated_row", report.mutated_row},
                {"rows", std::move(rows)},
                {"all_pass", report.all_pass()}};
}

GolayParams golay_params_from_json(const Json& j) {
    GolayParams p;
    p.m = j.at("m").get<int>();
    p.H = j.at("H").get<int>();
    p.pi.map = j.at("pi").get<std::vector<int>>();
    p.c = j.at("c").get<std::vector<int>>();
    for (int& v : p.c) v = mod_reduce(v, p.H);
    p.validate();
    return p;
}

OffsetSpec offsets_from_json(const Json& j) {
    OffsetSpec off;
    off.case_id = j.at("case").get<int>();
    off.mu = mu_from_string(j.at("mu").get<std::string>());
    if (j.contains("w")) off.w = j.at("w").get<int>();
    off.d = j.at("d").get<std::vector<std::vector<int>>>();
    for (auto& row : off.d)
        for (int& v : row) v = mod_reduce(v, 4);
    return off;
}

QamParams qam_params_from_json(const Json& j) {
    QamParams p;
    p.base = golay_params_from_json(j);
    p.q = j.at("q").get<int>();
    p.offsets = offsets_from_json(j.at("offsets"));
    p.validate();
    return p;
}

bool looks_like_qam_params(const Json& j) { return j.contains("q") || j.contains("offsets"); }

bool looks_like_sequence(const Json& j) { return j.contains("values") || j.contains("core"); }

PhaseSeq phase_seq_from_json(const Json& j) {
    PhaseSeq s;
    s.H = j.at("H").get<int>();
    if (s.H < 2 || s.H % 2 != 0) throw std::domain_error("H must be even and >= 2");
    s.values = j.at("values").get<std::vector<int>>();
    for (int& v : s.values) v = mod_reduce(v, s.H);
    return s;
}

ComplexSeq complex_seq_from_json(const Json& j) {
    ComplexSeq s;
    s.q = j.at("q").get<int>();
    if (s.q < 1) throw std::domain_error("q must be >= 1");
    for (const Json& entry : j.at("core"))
        s.core.push_back({entry.at(0).get<long long>(), entry.at(1).get<long long>()});
    return s;
}

SearchSpec search_spec_from_json(const Json& j) {
    SearchSpec spec;
    if (j.contains("kind")) {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "golay") spec.kind = SweepKind::golay;
        else if (kind == "qam") spec.kind = SweepKind::qam;
        else throw std::invalid_argument("sweep kind must be golay or qam");
    }
    spec.m_values = j.at("m").get<std::vector<int>>();
    if (j.contains("H")) spec.H_values = j.at("H").get<std::vector<int>>();
    if (j.contains("q")) spec.q_values = j.at("q").get<std::vector<int>>();
    if (j.contains("cond")) {
        ConditionId cond;
        cond.tag = tag_from_string(j.at("cond").get<std::string>());
        cond.context = spec.kind == SweepKind::qam ? CondContext::qam : CondContext::golay;
        if (j.contains("context"))
            cond.context = j.at("context").get<std::string>() == "qam" ? CondContext::qam
                                                                       : CondContext::golay;
        spec.cond = cond;
    }
    if (j.contains("pi_fixed"))
        for (const auto& [key, val] : j.at("pi_fixed").items())
            spec.pi_fixed[std::stoi(key)] = val.get<int>();
    if (j.contains("c_fixed"))
        for (const auto& [key, val] : j.at("c_fixed").items())
            spec.c_fixed[std::stoi(key)] = val.get<int>();
    if (j.contains("require_2c1_zero")) spec.require_2c1_zero = j.at("require_2c1_zero").get<bool>();
    if (j.contains("cases")) spec.cases = j.at("cases").get<std::vector<int>>();
    if (j.contains("w")) spec.w_values = j.at("w").get<std::vector<int>>();
    if (j.contains("mu")) {
        spec.mu_values.clear();
        for (const Json& v : j.at("mu")) spec.mu_values.push_back(mu_from_string(v.get<std::string>()));
    }
    if (j.contains("offsets")) spec.offsets_fixed = offsets_from_json(j.at("offsets"));
    if (j.contains("mode")) {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode == "exhaustive") spec.exhaustive = true;
        else if (mode == "sampled") spec.exhaustive = false;
        else throw std::invalid_argument("mode must be exhaustive or sampled");
    }
    if (j.contains("samples")) {
        spec.samples = j.at("samples").get<long long>();
        if (!j.contains("mode")) spec.exhaustive = false;
    }
    if (j.contains("seed")) spec.seed = j.at("seed").get<uint64_t>();
    if (j.contains("cap")) spec.cap = j.at("cap").get<long long>();
    return spec;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
            token += ch;
        } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)) || ch == '[' ||
                   ch == ']') {
            if (!token.empty()) {
                out.push_back(std::stoi(token));
                token.clear();
            }
        } else {
            throw std::invalid_argument("unexpected character in integer list: " +
                                        std::string(1, ch));
        }
    }
    if (!token.empty()) out.push_back(std::stoi(token));
    return out;
}

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        const size_t close = text.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("unclosed cycle");
        const std::string body = text.substr(pos + 1, close - pos - 1);
        std::vector<int> cycle;
        if (body.find(',') != std::string::npos ||
            body.find(' ') != std::string::npos) {
            cycle = parse_int_list(body);
        } else {
            for (char ch : body) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw std::invalid_argument("cycle entries must be digits or separated numbers");
                cycle.push_back(ch - '0');
            }
        }
        if (cycle.size() < 2) throw std::invalid_argument("cycles need at least two entries");
        cycles.push_back(std::move(cycle));
        pos = close + 1;
    }
    if (cycles.empty()) throw std::invalid_argument("no cycles found");
    return cycles;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int m) {
    size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty permutation");
    Permutation pi;
    if (text[first] == '(') {
        if (m < 1) throw std::invalid_argument("cycle notation needs m");
        pi.map.resize(m);
        const auto cycles = parse_cycles(text.substr(first));
        for (int x = 1; x <= m; ++x) {
            int y = x;
            // rightmost cycle applies first
            for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
                const std::vector<int>& cyc = *it;
                for (size_t k = 0; k < cyc.size(); ++k) {
                    if (cyc[k] == y) {
                        y = cyc[(k + 1) % cyc.size()];
                        break;
                    }
                }
            }
            pi.map[x - 1] = y;
        }
    } else {
        pi.map = parse_int_list(text);
        if (m >= 1 && static_cast<int>(pi.map.size()) != m)
            throw std::invalid_argument("permutation length does not match m");
    }
    if (!pi.valid()) throw std::invalid_argument("not a permutation of 1..m");
    return pi;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_profile_csv(std::ostream& os, const CorrProfile& profile, long long lo, long long hi) {
    if (lo < 0 || hi >= profile.n() || lo > hi) throw std::domain_error("tau range out of bounds");
    os << "tau,re,im,abs\n";
    for (long long tau = lo; tau <= hi; ++tau) {
        const std::complex<double> v = profile.value(tau);
        os << tau << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << ',' << fmt17(std::abs(v))
           << '\n';
    }
}

Json profile_to_json(const CorrProfile& profile, long long lo, long long hi) {
    if (lo < 0 || hi >= profile.n() || lo > hi) throw std::domain_error("tau range out of bounds");
    Json rows = Json::array();
    for (long long tau = lo; tau <= hi; ++tau) {
        const std::complex<double> v = profile.value(tau);
        rows.push_back(Json::array({tau, v.real(), v.imag(), std::abs(v)}));
    }
    return Json{{"kind", profile.kind == CorrKind::periodic ? "periodic" : "aperiodic"},
                {"exact", profile.exact},
                {"values", std::move(rows)}};
}

Json load_json_file(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    return Json::parse(in);
}

}  // namespace zacz
