/**************************************************************************
 * lrc_cli.cpp
 *
 * Copyright 2026 The lrc-towers Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lrc/lrc.hpp"

namespace {

using namespace lrc;

std::uint64_t enumeration_cap() {
    if (const char* env = std::getenv("LRC_MAX_ENUM")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(Errc::InvalidArgument, std::string("LRC_MAX_ENUM is not a number: ") + env);
        }
    }
    return kDefaultEnumerationCap;
}

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(Errc::InvalidArgument, "bad list entry '" + item + "'");
        }
    }
    if (out.empty()) throw Error(Errc::InvalidArgument, "empty list");
    return out;
}

std::string fraction(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << '/' << r.denominator();
    return os.str();
}

std::string decimal(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(12) << boost::rational_cast<double>(r);
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw Error(Errc::InvalidArgument, "cannot write " + path);
    os << text;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::string variant = "gs96";
    std::uint32_t ell = 0;
    unsigned m = 1;
    std::string group1, group2;
    std::size_t distance = 0;
    std::string out;
    std::string caps;
};

int run_construct(const ConstructArgs& a) {
    auto spec = make_tower(parse_variant(a.variant), make_square_field(a.ell), a.m);
    auto H1 = build_recovery_group(spec, a.group1);
    auto H2 = build_recovery_group(spec, a.group2);
    auto product = [&] {
        try {
            return combine(spec, H1, H2);
        } catch (const Error& e) {
            if (e.code() == Errc::NotASubgroup) (void)validate_regime(spec, H1, H2);
            throw;
        }
    }();
    const auto regime = validate_regime(spec, H1, H2);
    std::optional<std::vector<unsigned>> caps;
    if (!a.caps.empty()) {
        caps.emplace();
        for (auto c : parse_list(a.caps)) {
            if (c < 0) throw Error(Errc::InvalidArgument, "caps must be non-negative");
            caps->push_back(static_cast<unsigned>(c));
        }
    }
    auto code = construct_lrc(spec, H1, H2, a.distance, caps);
    if (!a.out.empty()) write_descriptor(code, a.out);
    const auto& p = code.params;
    std::cout << p.n << ' ' << p.k << ' ' << p.d_designed << ' ' << p.r1 << ' ' << p.r2 << '\n';
    std::cerr << "regime " << regime << "; " << product.report << "; budget " << code.info->budget << ", caps";
    for (auto c : code.info->caps) std::cerr << ' ' << c;
    std::cerr << "; dim V1 " << code.info->dim_v1 << ", dim V2 " << code.info->dim_v2 << '\n';
    return 0;
}

struct VerifyArgs {
    std::string path;
    std::uint64_t seed = 0;
    std::uint64_t samples = 10'000;
    bool exact_distance = false;
    bool timings = false;
    std::string report;
};

int run_verify(const VerifyArgs& a) {
    auto code = read_descriptor(a.path);
    VerifyOptions opt;
    opt.seed = a.seed;
    opt.samples = a.samples;
    opt.enumeration_cap = enumeration_cap();
    opt.require_distance = a.exact_distance;
    const auto res = verify_code(code, opt);
    const auto text = verify_report_json(code, res, a.timings).dump(1) + "\n";
    if (!a.report.empty()) write_file(a.report, text);
    std::cout << text;
    if (!res.passed()) {
        std::cerr << "verify failed: " << res.failures.front() << '\n';
        return 1;
    }
    return 0;
}

struct RepairArgs {
    std::string path;
    std::uint64_t seed = 0;
    long long coord = -1;
    int set = 0;
};

int run_repair_demo(const RepairArgs& a) {
    auto code = read_descriptor(a.path);
    const auto& F = code.F();
    std::mt19937_64 rng(a.seed);
    const auto c = random_codeword(code, rng);
    const std::size_t i = a.coord >= 0 ? static_cast<std::size_t>(a.coord) : rng() % code.n();
    if (i >= code.n()) throw Error(Errc::InvalidArgument, "coordinate out of range");
    auto print_word = [&](const std::vector<Gf>& w, std::optional<std::size_t> hole) {
        for (std::size_t h = 0; h < w.size(); ++h) std::cout << (h ? " " : "") << (hole == h ? "?" : F.to_string(w[h]));
        std::cout << '\n';
    };
    std::cout << "seed " << a.seed << '\n' << "codeword ";
    print_word(c, std::nullopt);
    std::cout << "erased   ";
    print_word(c, i);
    int status = 0;
    for (int j = 1; j <= 2; ++j) {
        if (a.set && a.set != j) continue;
        auto erased = c;
        erased[i] = F.zero();
        const Gf got = repair(code, {erased, i, j}, true);
        std::cout << "set " << j << " {";
        for (std::size_t h = 0; h < code.recovery[i].get(j).size(); ++h)
            std::cout << (h ? "," : "") << code.recovery[i].get(j)[h];
        std::cout << "} -> " << F.to_string(got) << (got == c[i] ? " ok" : " MISMATCH") << '\n';
        if (got != c[i]) status = 1;
    }
    return status;
}

struct BoundsArgs {
    long long n = 0, k = 0, t = 1;
    std::string r;
};

int run_bounds(const BoundsArgs& a) {
    auto rs = parse_list(a.r);
    if (rs.size() == 1 && a.t > 1) rs.assign(static_cast<std::size_t>(a.t), rs.front());
    if (static_cast<long long>(rs.size()) != a.t)
        throw Error(Errc::InvalidArgument, "--r must list one locality or exactly t of them");
    const bool uniform = std::all_of(rs.begin(), rs.end(), [&](long long x) { return x == rs.front(); });
    auto sorted = rs;
    std::sort(sorted.begin(), sorted.end());
    auto show = [](const char* label, std::optional<long long> v) {
        std::cout << std::left << std::setw(28) << label << (v ? std::to_string(*v) : "n/a") << '\n';
    };
    const long long r = sorted.front();
    show("single-set", singleton_lrc(a.n, a.k, r));
    show("availability-floor-sum", uniform ? std::optional(tb_bound(a.n, a.k, r, a.t)) : std::nullopt);
    show("availability-ceiling", uniform ? std::optional(wz_bound(a.n, a.k, r, a.t)) : std::nullopt);
    show("availability-linear", uniform ? std::optional(rpdv_bound(a.n, a.k, r, a.t)) : std::nullopt);
    show("multi-locality-product", bt_bound(a.n, a.k, sorted));
    show("multi-locality-sum", bmq_bound(a.n, a.k, rs));
    return 0;
}

int run_regimes(long long ell, const std::string& csv) {
    const auto rows = regimes(ell);
    const auto text = regimes_csv(rows);
    if (!csv.empty()) write_file(csv, text);
    std::cout << text;
    return 0;
}

struct TradeoffArgs {
    long long ell = 0, r1 = 0, r2 = 0;
    std::string variant;
    std::string csv;
};

int run_tradeoff(const TradeoffArgs& a) {
    const auto line = a.variant == "btv" ? btv_line(a.ell, a.r1, a.r2)
                                         : gs_line(a.ell, a.r1, a.r2, parse_line_family(a.variant));
    const long long q = a.ell * a.ell;
    const long long qc = line.regime == Regime::Btv || a.variant == "thm35" ? q - 1 : q - a.ell;
    std::cout << "regime     " << regime_name(line.regime) << '\n'
              << "line       delta + (" << fraction(line.slope) << ") R >= " << fraction(line.intercept) << '\n'
              << "slope      " << fraction(line.slope) << " = " << decimal(line.slope) << '\n'
              << "intercept  " << fraction(line.intercept) << " = " << decimal(line.intercept);
    if ((line.intercept * qc).denominator() == 1)
        std::cout << " = " << (line.intercept * qc).numerator() << '/' << qc;
    std::cout << '\n' << "vacuous    " << (line.vacuous ? "yes" : "no") << '\n';
    if (!a.csv.empty()) {
        std::ostringstream os;
        os << "ell,r1,r2,theorem,slope_num,slope_den,intercept_num,intercept_den,vacuous\n"
           << a.ell << ',' << a.r1 << ',' << a.r2 << ',' << regime_name(line.regime) << ','
           << line.slope.numerator() << ',' << line.slope.denominator() << ',' << line.intercept.numerator() << ','
           << line.intercept.denominator() << ',' << (line.vacuous ? "true" : "false") << '\n';
        write_file(a.csv, os.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally repairable codes with two recovery sets from towers of function fields"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a code and write its descriptor");
    construct->add_option("--variant", ca.variant, "tower: gs96 or gs95")->check(CLI::IsMember({"gs96", "gs95"}));
    construct->add_option("--ell", ca.ell, "q = ell^2")->required();
    construct->add_option("--m", ca.m, "tower level");
    construct->add_option("--group1", ca.group1, "add:kernel | add:gens=a,b | mul:N | norm1:N")->required();
    construct->add_option("--group2", ca.group2, "second group, same syntax")->required();
    construct->add_option("--distance", ca.distance, "target designed distance")->required();
    construct->add_option("--out", ca.out, "descriptor JSON path");
    construct->add_option("--caps", ca.caps, "per-generator exponent caps, comma separated");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a descriptor; exit 0 iff every check passes");
    verify->add_option("path", va.path)->required();
    verify->add_option("--seed", va.seed, "seed for sampled codewords");
    verify->add_option("--samples", va.samples, "random codewords per check when q^k is large");
    verify->add_flag("--exact-distance", va.exact_distance, "fail with TooLarge instead of skipping the distance");
    verify->add_flag("--timings", va.timings, "include runtimes in the report");
    verify->add_option("--report", va.report, "also write the report JSON here");

    RepairArgs ra;
    auto* demo = app.add_subcommand("repair-demo", "erase one symbol of a random codeword and repair it");
    demo->add_option("path", ra.path)->required();
    demo->add_option("--seed", ra.seed);
    demo->add_option("--coord", ra.coord, "coordinate to erase (default: random)");
    demo->add_option("--set", ra.set, "1 or 2 (default: both)")->check(CLI::Range(0, 2));

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "evaluate the Singleton-type bounds");
    bounds->add_option("--n", ba.n)->required();
    bounds->add_option("--k", ba.k)->required();
    bounds->add_option("--t", ba.t);
    bounds->add_option("--r", ba.r, "localities, comma separated")->required();

    long long regimes_ell = 0;
    std::string regimes_out;
    auto* regimes_cmd = app.add_subcommand("regimes", "admissible (r1, r2) per construction regime");
    regimes_cmd->add_option("--ell", regimes_ell)->required();
    regimes_cmd->add_option("--csv", regimes_out, "also write the CSV here");

    TradeoffArgs ta;
    auto* tradeoff = app.add_subcommand("tradeoff", "asymptotic rate/distance line");
    tradeoff->add_option("--ell", ta.ell)->required();
    tradeoff->add_option("--r1", ta.r1)->required();
    tradeoff->add_option("--r2", ta.r2)->required();
    tradeoff->add_option("--variant", ta.variant, "btv | thm33 | thm34 | thm35")
        ->required()
        ->check(CLI::IsMember({"btv", "thm33", "thm34", "thm35"}));
    tradeoff->add_option("--csv", ta.csv);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) return run_construct(ca);
        if (*verify) return run_verify(va);
        if (*demo) return run_repair_demo(ra);
        if (*bounds) return run_bounds(ba);
        if (*regimes_cmd) return run_regimes(regimes_ell, regimes_out);
        if (*tradeoff) return run_tradeoff(ta);
    } catch (const lrc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
