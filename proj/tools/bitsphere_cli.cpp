// Copyright 2026 The bitsphere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bitsphere command line driver.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bitsphere.hpp"

using namespace bitsphere;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::string n_list;
    uint64_t seed = 1;
    std::string format = "json";
    std::string mode = "counting";
};

// Rows for CSV output; exact values go in as "p/q" strings.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct CommandResult {
    json params = json::object();
    json results = json::array();
    json falsifications = json::array();
    Table table;
};

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

uint64_t parse_u64(const std::string &s, const char *what) {
    try {
        size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size() || s.front() == '-') throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        throw UsageError(std::string("bad ") + what + ": '" + s + "'");
    }
}

int64_t parse_i64(const std::string &s, const char *what) {
    try {
        size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        throw UsageError(std::string("bad ") + what + ": '" + s + "'");
    }
}

Rational parse_rational(const std::string &s) {
    try {
        return Rational::parse(s);
    } catch (const std::exception &e) {
        throw UsageError("bad rational '" + s + "': " + e.what());
    }
}

std::vector<Resolution> resolutions(const GlobalOptions &g, const char *fallback) {
    std::string text = g.n_list;
    if (text.empty()) {
        const char *env = std::getenv("BITSPHERE_N");
        text = (env != nullptr && *env != '\0') ? env : fallback;
    }
    std::vector<Resolution> out;
    for (const auto &item : split_list(text)) {
        const uint64_t n = parse_u64(item, "--n value");
        if (!Resolution::is_valid(n)) throw UsageError("--n must be a power of two in [4, 2^30], got " + item);
        out.emplace_back(n);
    }
    if (out.empty()) throw UsageError("--n is empty");
    return out;
}

std::string frac(const Rational &q) {
    return std::to_string(q.num()) + "/" + std::to_string(q.den());
}

std::string frac(const DyadicRational &d) {
    return frac(d.to_rational());
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// --- subcommands -----------------------------------------------------------

CommandResult run_verify(const GlobalOptions &g) {
    CommandResult out;
    out.table.header = {"theorem", "N", "search_space_size", "solutions_found", "elapsed_ms"};
    const auto rs = resolutions(g, "1024");
    json ns = json::array();
    for (const auto &r : rs) {
        ns.push_back(r.size());
        for (auto &&rep : {verify_sets_disjoint(r), verify_skeleton_disjoint(r), verify_no_orthonormal_triples(r)}) {
            out.results.push_back(rep.to_json());
            out.table.rows.push_back({rep.theorem, std::to_string(rep.n), std::to_string(rep.search_space_size),
                                      std::to_string(rep.solutions_found), fmt_double(rep.elapsed_ms)});
            if (rep.falsified()) {
                out.falsifications.push_back({{"theorem", rep.theorem},
                                              {"N", rep.n},
                                              {"solutions_found", rep.solutions_found}});
            }
        }
    }
    out.params["N"] = ns;
    return out;
}

struct UncertaintyOptions {
    uint64_t samples = 100'000;
    uint64_t skeleton_samples = 1000;
    double epsilon = 0.1;
};

CommandResult run_uncertainty(const GlobalOptions &g, const UncertaintyOptions &o) {
    CommandResult out;
    out.table.header = {"check", "N", "samples", "evaluated", "violations", "min_slack"};
    out.params = {{"samples", o.samples}, {"skeleton_samples", o.skeleton_samples}, {"epsilon", o.epsilon},
                  {"seed", g.seed}};
    const auto geo = verify_uncertainty_geometric(o.samples, g.seed);
    out.results.push_back(geo.to_json());
    out.table.rows.push_back({"geometric", "", std::to_string(geo.samples), std::to_string(geo.samples),
                              std::to_string(geo.violations), fmt_double(geo.min_slack)});
    if (geo.violations != 0) out.falsifications.push_back({{"check", "geometric"}, {"violations", geo.violations}});
    json ns = json::array();
    for (const auto &r : resolutions(g, "1024")) {
        ns.push_back(r.size());
        const auto sk = verify_uncertainty_skeleton(r, o.epsilon, o.skeleton_samples, g.seed);
        out.results.push_back(sk.to_json());
        out.table.rows.push_back({"skeleton", std::to_string(r.size()), std::to_string(sk.samples),
                                  std::to_string(sk.evaluated), std::to_string(sk.violations),
                                  fmt_double(sk.min_excess)});
        if (sk.violations != 0) {
            out.falsifications.push_back({{"check", "skeleton"}, {"N", r.size()}, {"violations", sk.violations}});
        }
    }
    out.params["N"] = ns;
    return out;
}

CommandResult run_bell(const GlobalOptions &g) {
    CommandResult out;
    const auto conv = parse_convention(g.mode);
    out.params["mode"] = to_string(conv);
    out.table.header = {"N", "m", "E", "E_float", "cos_theta", "cos_theta_float"};
    json ns = json::array();
    for (const auto &r : resolutions(g, "8")) {
        ns.push_back(r.size());
        const int64_t n = static_cast<int64_t>(r.size());
        for (int64_t m = 0; m <= n / 2; ++m) {
            const auto table = correlation(bell_state(r, m));
            const auto cos = bell_cos_theta(r, m, conv);
            out.results.push_back({{"N", n},
                                   {"m", m},
                                   {"plain_plain", table.plain_plain},
                                   {"plain_neg", table.plain_neg},
                                   {"neg_plain", table.neg_plain},
                                   {"neg_neg", table.neg_neg},
                                   {"E", table.expectation.str()},
                                   {"cos_theta", cos.str()}});
            out.table.rows.push_back({std::to_string(n), std::to_string(m), frac(table.expectation),
                                      fmt_double(table.expectation.to_double()), frac(cos),
                                      fmt_double(cos.to_double())});
            if (table.expectation.to_rational() != Rational(4 * m - n, n)) {
                out.falsifications.push_back({{"N", n}, {"m", m}, {"E", table.expectation.str()}});
            }
        }
    }
    out.params["N"] = ns;
    return out;
}

CommandResult run_chsh(const GlobalOptions &g, const std::string &m_override) {
    CommandResult out;
    const auto conv = parse_convention(g.mode);
    out.params["mode"] = to_string(conv);
    out.table.header = {"N", "m00", "m01", "m10", "m11", "S", "S_float", "distance_to_2sqrt2", "violates_bell"};
    json ns = json::array();
    for (const auto &r : resolutions(g, "1024")) {
        ns.push_back(r.size());
        CHSHConfig cfg = chsh_config_for_angles(r, chsh_optimal_angles(), conv);
        if (!m_override.empty()) {
            const auto items = split_list(m_override);
            if (items.size() != 4) throw UsageError("--m needs four comma separated values");
            for (size_t i = 0; i < 4; ++i) cfg.m[i] = parse_i64(items[i], "--m value");
        }
        const auto rep = chsh_run(cfg);
        out.results.push_back(rep.to_json());
        out.table.rows.push_back({std::to_string(r.size()), std::to_string(cfg.m[0]), std::to_string(cfg.m[1]),
                                  std::to_string(cfg.m[2]), std::to_string(cfg.m[3]), frac(rep.s),
                                  fmt_double(rep.s.to_double()), fmt_double(rep.distance_to_tsirelson),
                                  rep.violates_bell ? "true" : "false"});
        // At the optimal angles S must land within the quantisation bound of 2 sqrt 2.
        // With cos = 1 - 2m/N the optimal m saturates at N/2 and misses it.
        const double bound = 8.0 / static_cast<double>(r.size());
        if (m_override.empty() && rep.distance_to_tsirelson > bound) {
            out.falsifications.push_back(
                {{"N", r.size()}, {"mode", to_string(conv)}, {"S", rep.s.str()}, {"distance", rep.distance_to_tsirelson},
                 {"bound", bound}});
        }
    }
    out.params["N"] = ns;
    if (!m_override.empty()) out.params["m"] = m_override;
    return out;
}

struct SGOptions {
    uint64_t trials = 100'000;
    std::string chain;
    std::string branches;
    std::string cos_ab = "3/4";
    std::string cos_bc = "1/4";
    std::string gamma = "3/16";
};

CommandResult run_sg(const GlobalOptions &g, const SGOptions &o) {
    CommandResult out;
    out.table.header = {"check", "N", "value", "value_float", "detail"};
    out.params = {{"trials", o.trials}, {"seed", g.seed}, {"cos_ab", o.cos_ab}, {"cos_bc", o.cos_bc},
                  {"gamma_turns", o.gamma}};
    const Rational cab = parse_rational(o.cos_ab), cbc = parse_rational(o.cos_bc), gam = parse_rational(o.gamma);
    json ns = json::array();
    for (const auto &r : resolutions(g, "16")) {
        ns.push_back(r.size());
        const auto mc = sg_single_device(r, o.trials, g.seed);
        out.results.push_back({{"check", "single_device"}, {"report", mc.to_json()}});
        out.table.rows.push_back({"single_device", std::to_string(r.size()), std::to_string(mc.up) + "/" +
                                  std::to_string(mc.trials), fmt_double(mc.up_fraction), ""});
        if (std::fabs(mc.up_fraction - 0.5) > mc.three_sigma) {
            out.falsifications.push_back({{"check", "single_device"}, {"N", r.size()}, {"up_fraction", mc.up_fraction}});
        }

        if (!o.chain.empty()) {
            std::vector<SGDevice> devices;
            for (const auto &item : split_list(o.chain)) {
                const auto colon = item.find(':');
                if (colon == std::string::npos) throw UsageError("--chain entries look like m:n, got '" + item + "'");
                devices.push_back({r, parse_i64(item.substr(0, colon), "chain m"),
                                   parse_i64(item.substr(colon + 1), "chain n")});
            }
            std::vector<Branch> branches;
            const std::string b = o.branches.empty() ? std::string(devices.size(), 'u') : o.branches;
            for (char c : b) {
                if (c != 'u' && c != 'd') throw UsageError("--branches takes a string of u and d");
                branches.push_back(c == 'u' ? Branch::up : Branch::down);
            }
            if (branches.size() != devices.size()) throw UsageError("--branches needs one letter per device");
            json stages = json::array();
            const auto chain = sg_chain(devices, branches);
            for (size_t k = 0; k < chain.size(); ++k) {
                stages.push_back({{"stage", k + 1},
                                  {"stage_fraction", chain[k].stage_fraction.str()},
                                  {"cumulative", chain[k].cumulative.str()}});
                out.table.rows.push_back({"chain_stage_" + std::to_string(k + 1), std::to_string(r.size()),
                                          frac(chain[k].cumulative),
                                          fmt_double(chain[k].cumulative.to_double()),
                                          "stage " + frac(chain[k].stage_fraction)});
            }
            out.results.push_back({{"check", "chain"}, {"N", r.size()}, {"stages", stages}});
        }

        const auto verdict = sg_counterfactual_order_check(cab, cbc, gam, r);
        out.results.push_back({{"check", "counterfactual"}, {"N", r.size()}, {"verdict", verdict.to_json()}});
        out.table.rows.push_back({"counterfactual", std::to_string(r.size()),
                                  verdict.admissible ? "admissible" : "inadmissible", "", to_string(verdict.reason)});
    }
    out.params["N"] = ns;
    return out;
}

struct GhzOptions {
    std::string linear;
    std::string circular;
};

CommandResult run_ghz(const GhzOptions &o) {
    CommandResult out;
    out.table.header = {"choice", "value", "admissible", "coexistence", "reason"};
    std::string linear = o.linear, circular = o.circular;
    if (linear.empty() && circular.empty()) {
        linear = "1/16,0";
        circular = "1/10";
    }
    out.params = {{"linear", linear}, {"circular", circular}};
    std::vector<GhzChoice> choices;
    std::vector<std::pair<std::string, std::string>> labels;
    for (const auto &s : split_list(linear)) {
        choices.push_back(LinearChoice{parse_rational(s)});
        labels.emplace_back("linear", s);
    }
    for (const auto &s : split_list(circular)) {
        choices.push_back(CircularChoice{parse_rational(s)});
        labels.emplace_back("circular", s);
    }
    std::vector<GhzPhotonResult> res;
    try {
        res = ghz_admissibility(choices);
    } catch (const std::domain_error &e) {
        throw UsageError(e.what());
    }
    for (size_t i = 0; i < res.size(); ++i) {
        auto j = res[i].to_json();
        j["choice"] = labels[i].first;
        j["value"] = labels[i].second;
        out.results.push_back(j);
        out.table.rows.push_back({labels[i].first, labels[i].second, res[i].verdict.admissible ? "true" : "false",
                                  res[i].coexistence ? "true" : "false", to_string(res[i].verdict.reason)});
    }
    return out;
}

struct PadicOptions {
    std::string x;
    std::string y;
};

CommandResult run_padic(const GlobalOptions &g, const PadicOptions &o) {
    CommandResult out;
    out.table.header = {"N", "x", "y", "distance", "distance_float"};
    auto digits = [](const std::string &s) {
        std::vector<uint32_t> d;
        for (const auto &item : split_list(s)) d.push_back(static_cast<uint32_t>(parse_u64(item, "digit")));
        return d;
    };
    json ns = json::array();
    for (const auto &r : resolutions(g, "16")) {
        ns.push_back(r.size());
        DyadicRational d;
        try {
            d = padic_distance(PadicLabel(r, digits(o.x)), PadicLabel(r, digits(o.y)));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        out.results.push_back({{"N", r.size()}, {"x", o.x}, {"y", o.y}, {"distance", d.str()}});
        out.table.rows.push_back({std::to_string(r.size()), o.x, o.y, frac(d), fmt_double(d.to_double())});
    }
    out.params = {{"N", ns}, {"x", o.x}, {"y", o.y}};
    return out;
}

void emit(const std::string &command, const GlobalOptions &g, CommandResult &res, double elapsed_ms) {
    if (g.format == "csv") {
        auto line = [](const std::vector<std::string> &cells) {
            std::string s;
            for (size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_field(cells[i]);
            return s;
        };
        std::cout << line(res.table.header) << '\n';
        for (const auto &row : res.table.rows) std::cout << line(row) << '\n';
        for (const auto &f : res.falsifications) std::cerr << "falsification: " << f.dump() << '\n';
        return;
    }
    json doc{{"command", command},
             {"params", res.params},
             {"results", res.results},
             {"falsifications", res.falsifications},
             {"elapsed_ms", elapsed_ms},
             {"version", kVersion}};
    std::cout << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact checks for the bit-string sphere model"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    GlobalOptions g;
    app.add_option("--n", g.n_list, "Resolution N, a comma separated list of powers of two (env BITSPHERE_N)");
    app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--mode", g.mode, "Bell angle convention")
        ->check(CLI::IsMember({"paper", "counting"}))
        ->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Diophantine searches behind the disjointness theorems");

    UncertaintyOptions uo;
    auto *uncertainty = app.add_subcommand("uncertainty", "Uncertainty relation, geometric and skeleton checks");
    uncertainty->add_option("--samples", uo.samples, "Random sphere points for the geometric check")
        ->check(CLI::PositiveNumber);
    uncertainty->add_option("--skeleton-samples", uo.skeleton_samples, "Points for the skeleton check")
        ->check(CLI::PositiveNumber);
    uncertainty->add_option("--epsilon", uo.epsilon, "Neighbourhood radius")->check(CLI::PositiveNumber);

    auto *bell = app.add_subcommand("bell", "Correlation table of the Bell family over m");

    std::string chsh_m;
    auto *chsh = app.add_subcommand("chsh", "CHSH sum over the Bell family");
    chsh->add_option("--m", chsh_m, "Override the four m values, e.g. 437,437,437,75");

    SGOptions so;
    auto *sg = app.add_subcommand("sg", "Stern-Gerlach statistics, chains and order counterfactuals");
    sg->add_option("--trials", so.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    sg->add_option("--chain", so.chain, "Devices as m:n pairs, e.g. 1:3,2:5");
    sg->add_option("--branches", so.branches, "Branch per device, e.g. uud (default all up)");
    sg->add_option("--cos-ab", so.cos_ab, "cos of the first relative angle")->capture_default_str();
    sg->add_option("--cos-bc", so.cos_bc, "cos of the second relative angle")->capture_default_str();
    sg->add_option("--gamma", so.gamma, "Spherical angle in turns")->capture_default_str();

    GhzOptions go;
    auto *ghz = app.add_subcommand("ghz", "Per-photon counterfactual admissibility");
    ghz->add_option("--linear", go.linear, "Rational cos 2phi values for linear polariser choices");
    ghz->add_option("--circular", go.circular, "Rational phi/2pi values for circular choices");

    PadicOptions po;
    auto *padic = app.add_subcommand("padic", "N-adic distance between two digit strings");
    padic->add_option("--x", po.x, "Digits of the first label, comma separated")->required();
    padic->add_option("--y", po.y, "Digits of the second label, comma separated")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    Stopwatch clock;
    CommandResult res;
    std::string command;
    try {
        if (verify->parsed()) {
            command = "verify";
            res = run_verify(g);
        } else if (uncertainty->parsed()) {
            command = "uncertainty";
            res = run_uncertainty(g, uo);
        } else if (bell->parsed()) {
            command = "bell";
            res = run_bell(g);
        } else if (chsh->parsed()) {
            command = "chsh";
            res = run_chsh(g, chsh_m);
        } else if (sg->parsed()) {
            command = "sg";
            res = run_sg(g, so);
        } else if (ghz->parsed()) {
            command = "ghz";
            res = run_ghz(go);
        } else {
            command = "padic";
            res = run_padic(g, po);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        // bad parameter values surface from the library as constraint errors
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    res.params["seed"] = g.seed;
    res.params["mode"] = g.mode;
    emit(command, g, res, clock.elapsed_ms());
    return res.falsifications.empty() ? kExitOk : kExitFalsified;
}
