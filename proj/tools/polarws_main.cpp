// Command-line front end: code construction, minimum-weight counting for
// rate-matched polar codes, coset / average spectra, union bounds, oracle
// self-checks, and prefix-table dumps.  JSON output by default, CSV with
// --csv; exit codes: 0 success, 1 validation error, 2 cap exceeded.

#include "polarws/coset.hpp"
#include "polarws/construct.hpp"
#include "polarws/minwt_br.hpp"
#include "polarws/monomial.hpp"
#include "polarws/oracle.hpp"
#include "polarws/pattern.hpp"
#include "polarws/prefix_table.hpp"
#include "polarws/selfcheck.hpp"
#include "polarws/serialize.hpp"
#include "polarws/union_bound.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using polarws::Json;

struct OutputOptions {
    std::string path; // empty = stdout
    bool csv = false;
};

void emit(const OutputOptions& out, const Json& config, const Json& result,
          const std::string& command, const std::string& csv_text) {
    std::string text;
    if (out.csv) {
        text = csv_text;
    } else {
        Json j{{"command", command}, {"config", config}, {"result", result}};
        text = j.dump(2) + "\n";
    }
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.path);
        if (!f) throw polarws::validation_error("cannot open output file: " + out.path);
        f << text;
    }
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw polarws::validation_error("cannot open file: " + path);
    Json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw polarws::validation_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

int default_threads() {
    if (const char* env = std::getenv("POLARWS_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

polarws::Monomial parse_monomial(const std::string& text) {
    if (text == "1") return polarws::Monomial::one();
    std::vector<int> vars;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, '*')) {
        if (token.size() < 2 || (token[0] != 'x' && token[0] != 'X'))
            throw polarws::validation_error("malformed monomial: " + text);
        vars.push_back(std::stoi(token.substr(1)));
    }
    if (vars.empty()) throw polarws::validation_error("malformed monomial: " + text);
    return polarws::Monomial::from_variables(vars);
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stod(token));
    }
    return out;
}

// Shared --spec / --m/--K selection.
struct SpecArgs {
    std::string spec_file;
    int m = -1;
    int k = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--spec", spec_file, "code spec JSON file {\"m\":..,\"info\":[..]}");
        cmd->add_option("--m", m, "block-length exponent (with --K: PW construction)");
        cmd->add_option("--K", k, "code dimension for PW construction");
    }

    polarws::CodeSpec resolve() const {
        if (!spec_file.empty()) return polarws::code_spec_from_json(load_json(spec_file));
        if (m >= 0 && k >= 0) return polarws::pw_construct(m, k);
        throw polarws::validation_error("provide --spec FILE or both --m and --K");
    }
};

// Shared pattern selection: a named family (--pattern KIND --i I) or a
// custom pattern file.
struct PatternArgs {
    std::string family;
    int i = -1;
    std::string mode;
    std::string pattern_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--pattern", family, "pattern family: qup | wl | br");
        cmd->add_option("--i", i, "number of punctured/shortened bits");
        cmd->add_option("--mode", mode, "override mode: puncture | shorten");
        cmd->add_option("--pattern-file", pattern_file, "custom pattern JSON file");
    }

    bool given() const { return !family.empty() || !pattern_file.empty(); }

    polarws::Pattern resolve(int m) const {
        using polarws::PatternKind;
        using polarws::RateMatchMode;
        if (!pattern_file.empty()) {
            auto p = polarws::pattern_from_json(load_json(pattern_file));
            if (p.n() != (1 << m))
                throw polarws::validation_error("pattern length does not match the code");
            return p;
        }
        if (family.empty()) {
            if (i >= 0) throw polarws::validation_error("--i needs --pattern");
            return polarws::custom_pattern(1 << m, RateMatchMode::puncture, {});
        }
        PatternKind kind;
        RateMatchMode default_mode;
        if (family == "qup") {
            kind = PatternKind::qup;
            default_mode = RateMatchMode::puncture;
        } else if (family == "wl") {
            kind = PatternKind::wl;
            default_mode = RateMatchMode::shorten;
        } else if (family == "br") {
            kind = PatternKind::br;
            default_mode = RateMatchMode::shorten;
        } else {
            throw polarws::validation_error("unknown pattern family: " + family);
        }
        if (i < 0) throw polarws::validation_error("--pattern needs --i");
        RateMatchMode rm = default_mode;
        if (mode == "puncture")
            rm = RateMatchMode::puncture;
        else if (mode == "shorten")
            rm = RateMatchMode::shorten;
        else if (!mode.empty())
            throw polarws::validation_error("unknown mode: " + mode);
        return polarws::make_pattern(kind, m, i, rm);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Weight-spectrum toolkit for rate-compatible polar codes"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    OutputOptions out;
    app.add_option("--out", out.path, "write output to a file instead of stdout");
    app.add_flag("--csv", out.csv, "emit CSV instead of JSON");
    int threads = default_threads();
    app.add_option("--threads", threads, "worker threads (default: POLARWS_THREADS or 1)")
        ->check(CLI::PositiveNumber);

    // construct
    auto* c_construct = app.add_subcommand("construct", "build an information set");
    int cm = -1, ck = -1;
    std::optional<int> ce;
    std::string seq_file;
    c_construct->add_option("--m", cm, "block-length exponent")->required();
    c_construct->add_option("--K", ck, "code dimension")->required();
    c_construct->add_option("--E", ce, "rate-matched length (validated: K <= E <= N)");
    c_construct->add_option("--seq", seq_file,
                            "reliability sequence file (indices, most reliable first)");

    // minwt
    auto* c_minwt = app.add_subcommand("minwt", "minimum-weight codeword count under rate matching");
    SpecArgs minwt_spec;
    minwt_spec.attach(c_minwt);
    std::string minwt_family;
    int minwt_i = -1;
    c_minwt->add_option("--pattern", minwt_family, "rate-matching family: qup | wl | br")
        ->required();
    c_minwt->add_option("--i", minwt_i, "number of punctured/shortened bits")->required();

    // coset-spectrum
    auto* c_coset = app.add_subcommand("coset-spectrum", "exact polar coset weight spectrum");
    int coset_m = -1;
    std::string prefix_bits;
    int zeros_len = -1, unit_len = -1;
    PatternArgs coset_pattern;
    c_coset->add_option("--m", coset_m, "block-length exponent")->required();
    c_coset->add_option("--prefix", prefix_bits, "explicit prefix bits, e.g. 0010");
    c_coset->add_option("--zeros", zeros_len, "all-zero prefix of this length");
    c_coset->add_option("--unit", unit_len, "unit-last prefix of this length");
    coset_pattern.attach(c_coset);

    // avg-spectrum
    auto* c_avg = app.add_subcommand("avg-spectrum",
                                     "exact average spectrum of pre-transformed codes");
    SpecArgs avg_spec;
    avg_spec.attach(c_avg);
    PatternArgs avg_pattern;
    avg_pattern.attach(c_avg);

    // union-bound
    auto* c_ub = app.add_subcommand("union-bound", "ML union bound from a spectrum file");
    std::string spectrum_file, sigma_list, snr_list;
    bool literal_sign = false;
    c_ub->add_option("--spectrum", spectrum_file, "spectrum JSON file")->required();
    c_ub->add_option("--sigma", sigma_list, "comma-separated noise sigmas");
    c_ub->add_option("--snr-db", snr_list, "comma-separated Es/N0 values in dB");
    c_ub->add_flag("--paper-literal-sign", literal_sign, "use Q(-sqrt(d)/sigma)");

    // check
    auto* c_check = app.add_subcommand("check", "run oracle-equivalence self checks");
    int check_m = 4, check_patterns = 60, check_prefixes = 60, check_trials = 40;
    long check_samples = 20000;
    std::uint64_t seed = 1;
    c_check->add_option("--max-m", check_m, "largest exponent for the sweeps")
        ->check(CLI::Range(1, 4));
    c_check->add_option("--patterns", check_patterns, "random pattern trials");
    c_check->add_option("--prefixes", check_prefixes, "random explicit-prefix trials");
    c_check->add_option("--samples", check_samples, "Monte-Carlo samples");
    c_check->add_option("--trials", check_trials, "LTA invariance trials");
    c_check->add_option("--seed", seed, "random seed");

    // dump-table
    auto* c_dump = app.add_subcommand("dump-table", "prefix weight table of one monomial");
    int dump_m = -1, dump_amax = -1;
    std::string dump_monomial;
    c_dump->add_option("--m", dump_m, "block-length exponent")->required();
    c_dump->add_option("--monomial", dump_monomial, "monomial, e.g. x2*x3")->required();
    c_dump->add_option("--a-max", dump_amax, "largest prefix length (default 2^m)");

    CLI11_PARSE(app, argc, argv);

    if (c_construct->parsed()) {
        polarws::CodeSpec spec = [&] {
            if (seq_file.empty()) return polarws::pw_construct(cm, ck, ce);
            std::ifstream f(seq_file);
            if (!f) throw polarws::validation_error("cannot open file: " + seq_file);
            std::vector<int> order, info;
            int z;
            while (f >> z) order.push_back(z);
            if (static_cast<int>(order.size()) < ck)
                throw polarws::validation_error("sequence file has fewer than K indices");
            info.assign(order.begin(), order.begin() + ck);
            return polarws::CodeSpec(cm, std::move(info));
        }();
        Json config{{"m", cm}, {"K", ck}};
        if (ce) config["E"] = *ce;
        if (!seq_file.empty()) config["seq"] = seq_file;
        Json result = polarws::to_json(spec);
        result["decreasing"] = spec.decreasing();
        std::ostringstream csv;
        csv << "row\n";
        for (int r : spec.info_rows()) csv << r << "\n";
        emit(out, config, result, "construct", csv.str());
        return 0;
    }

    if (c_minwt->parsed()) {
        const polarws::CodeSpec spec = minwt_spec.resolve();
        Json config{{"spec", polarws::to_json(spec)},
                    {"pattern", minwt_family},
                    {"i", minwt_i}};
        Json result;
        std::ostringstream csv;
        if (minwt_family == "qup") {
            const auto r = polarws::qup_min_weight(spec, minwt_i);
            result = polarws::to_json(r);
            csv << "d_min,count,count_exact\n"
                << r.min_weight << ',' << r.count.str() << ',' << (r.count_exact ? 1 : 0) << '\n';
        } else if (minwt_family == "wl") {
            const auto r = polarws::wl_min_weight(spec, minwt_i);
            result = polarws::to_json(r);
            csv << "d_min,count\n" << r.min_weight << ',' << r.count.str() << '\n';
        } else if (minwt_family == "br") {
            const auto r = polarws::br_min_weight_count(spec, minwt_i);
            result = polarws::to_json(r);
            csv << "d_min,count\n" << r.min_weight << ',' << r.total.str() << '\n';
        } else {
            throw polarws::validation_error(
                "minwt handles the proven families only: qup, wl, br");
        }
        emit(out, config, result, "minwt", csv.str());
        return 0;
    }

    if (c_coset->parsed()) {
        const auto prefix = [&] {
            if (!prefix_bits.empty()) {
                std::vector<std::uint8_t> bits;
                for (char ch : prefix_bits) {
                    if (ch != '0' && ch != '1')
                        throw polarws::validation_error("prefix bits must be 0/1");
                    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
                }
                return polarws::CosetPrefix::from_bits(std::move(bits));
            }
            if (zeros_len >= 0) return polarws::CosetPrefix::all_zero(zeros_len);
            if (unit_len >= 0) return polarws::CosetPrefix::unit_last(unit_len);
            throw polarws::validation_error("provide --prefix, --zeros, or --unit");
        }();
        const auto pattern = coset_pattern.resolve(coset_m);
        const auto spectrum = polarws::coset_spectrum(coset_m, prefix, pattern);
        Json config{{"m", coset_m}, {"pattern", polarws::to_json(pattern)}};
        std::string pbits;
        for (auto b : prefix.bits()) pbits += static_cast<char>('0' + b);
        config["prefix"] = pbits;
        emit(out, config, {{"spectrum", polarws::to_json(spectrum)}}, "coset-spectrum",
             polarws::spectrum_csv(spectrum));
        return 0;
    }

    if (c_avg->parsed()) {
        const polarws::CodeSpec spec = avg_spec.resolve();
        // Without pattern arguments this is the mother-length average.
        const auto pattern = avg_pattern.resolve(spec.m());
        const auto avg = polarws::avg_spectrum(spec, pattern, threads);
        Json config{{"spec", polarws::to_json(spec)}, {"pattern", polarws::to_json(pattern)},
                    {"threads", threads}};
        emit(out, config, {{"spectrum", polarws::to_json(avg)}}, "avg-spectrum",
             polarws::spectrum_csv(avg));
        return 0;
    }

    if (c_ub->parsed()) {
        const auto spectrum = polarws::double_spectrum_from_json(load_json(spectrum_file));
        std::vector<double> sigmas = parse_doubles(sigma_list);
        for (double snr : parse_doubles(snr_list))
            sigmas.push_back(std::pow(10.0, -snr / 20.0));
        if (sigmas.empty())
            throw polarws::validation_error("provide --sigma or --snr-db values");
        polarws::UnionBoundOptions opts;
        opts.paper_literal_sign = literal_sign;
        const auto curve = polarws::union_bound(spectrum, sigmas, opts);
        Json config{{"spectrum_file", spectrum_file},
                    {"paper_literal_sign", literal_sign}};
        emit(out, config, {{"points", polarws::to_json(curve)}}, "union-bound",
             polarws::union_bound_csv(curve));
        return 0;
    }

    if (c_check->parsed()) {
        struct Suite {
            const char* name;
            std::function<std::string(polarws::selfcheck::SweepStats*)> run;
        };
        using namespace polarws::selfcheck;
        std::vector<Suite> suites;
        for (int m = 2; m <= check_m; ++m)
            suites.push_back({"minwt-oracle-sweep",
                              [m](SweepStats* s) { return check_minwt_families(m, s); }});
        suites.push_back({"coset-recursion", [&](SweepStats* s) {
                              return check_coset_recursion(check_m, check_patterns,
                                                           check_prefixes, seed, s);
                          }});
        suites.push_back({"enumeration-laws",
                          [&](SweepStats* s) { return check_enumeration_laws(5, s); }});
        suites.push_back({"avg-vs-mc",
                          [&](SweepStats* s) { return check_avg_vs_mc(check_samples, seed, s); }});
        suites.push_back({"lta-invariance", [&](SweepStats* s) {
                              return check_lta_pattern_invariance(check_m, check_trials, seed, s);
                          }});
        bool all_ok = true;
        for (auto& suite : suites) {
            SweepStats stats;
            const std::string msg = suite.run(&stats);
            if (msg.empty()) {
                std::cout << "[PASS] " << suite.name << " (" << stats.checked << " cases";
                if (stats.skipped) std::cout << ", " << stats.skipped << " skipped";
                std::cout << ")\n";
            } else {
                std::cout << "[FAIL] " << suite.name << ": " << msg << "\n";
                all_ok = false;
            }
        }
        std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << " (seed " << seed
                  << ")\n";
        return all_ok ? 0 : 1;
    }

    if (c_dump->parsed()) {
        const auto f = parse_monomial(dump_monomial);
        const int amax = dump_amax >= 0 ? dump_amax : (1 << dump_m);
        const auto table = polarws::build_prefix_table(f, amax, dump_m);
        Json config{{"m", dump_m}, {"monomial", f.to_string()}, {"a_max", amax}};
        Json rows = Json::object();
        for (long w = 0; w <= table.row_weight; ++w) {
            Json row = Json::array();
            bool nonzero = false;
            for (int a = 0; a <= table.a_max; ++a) {
                const auto v = table.p_value(w, a);
                if (v != 0) nonzero = true;
                row.push_back(v.str());
            }
            if (nonzero) rows[std::to_string(w)] = row;
        }
        emit(out, config, {{"punctured_counts", rows}}, "dump-table",
             polarws::prefix_table_csv(table));
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const polarws::cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const polarws::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
