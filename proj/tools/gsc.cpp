#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsc/analysis.hpp"
#include "gsc/cache.hpp"
#include "gsc/errors.hpp"
#include "gsc/graph6.hpp"
#include "gsc/report.hpp"
#include "gsc/svg.hpp"

namespace fs = std::filesystem;
using gsc::ordered_json;

namespace {

constexpr uint64_t kDefaultSeed = 20240817;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::cout << data;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << data;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

fs::path resolve_cache_dir(const std::string& cli_value) {
    if (!cli_value.empty()) return cli_value;
    if (const char* env = std::getenv("GSC_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "gsc";
    return fs::path(".gsc-cache");
}

gsc::Codebook load_or_build_codebook(int n, const fs::path& cache_dir, int n_max_exact) {
    gsc::ClassOrdering expect = gsc::class_ordering(gsc::exact_count_table(n));
    fs::path file = cache_dir / ("codebook_n" + std::to_string(n) + ".bin");
    std::error_code ec;
    if (fs::exists(file, ec)) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        if (auto cb = gsc::deserialize_codebook(ss.str(), expect)) return std::move(*cb);
        std::cerr << "gsc: cached codebook " << file.string()
                  << " is stale or corrupt; rebuilding\n";
    }
    gsc::Codebook cb = gsc::build_codebook(n, n_max_exact);
    fs::create_directories(cache_dir, ec);
    std::ofstream out(file, std::ios::binary);
    if (out)
        out << gsc::serialize_codebook(cb);
    else
        std::cerr << "gsc: cannot write codebook cache to " << file.string() << "\n";
    return cb;
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_encode(int n, const std::string& in, const std::string& out, double p, bool has_p,
               bool binary, const fs::path& cache_dir, int n_max_exact) {
    gsc::Codebook cb = load_or_build_codebook(n, cache_dir, n_max_exact);
    std::vector<std::string> lines = split_lines(read_input(in));
    std::string payload;
    uint64_t total_bits = 0;
    for (size_t i = 0; i < lines.size(); ++i) {
        gsc::LabeledGraph g(1);
        try {
            g = gsc::parse_graph6(lines[i]);
        } catch (const gsc::ParseError& e) {
            throw gsc::ParseError("line " + std::to_string(i + 1) + ": " + e.what());
        }
        if (g.n != n)
            throw gsc::ParseError("line " + std::to_string(i + 1) + ": graph has " +
                                  std::to_string(g.n) + " vertices, expected " +
                                  std::to_string(n));
        std::string cw = gsc::encode(g, cb);
        total_bits += cw.size();
        if (binary)
            gsc::append_codeword_record(payload, cw);
        else
            payload += (cw.empty() ? std::string("(empty)") : cw) + "\n";
    }
    write_output(out, payload);
    if (has_p) {
        std::vector<double> dist = gsc::length_distribution(n, p, cb);
        double expected = 0.0;
        for (size_t k = 0; k < dist.size(); ++k) expected += static_cast<double>(k) * dist[k];
        double mean = lines.empty() ? 0.0
                                    : static_cast<double>(total_bits) /
                                          static_cast<double>(lines.size());
        std::cerr << "gsc: encoded " << lines.size() << " graphs, " << total_bits
                  << " code bits total, mean " << mean << " bits/graph, model expectation "
                  << expected << " bits/graph at p=" << p << "\n";
    }
    return 0;
}

int cmd_decode(int n, const std::string& in, const std::string& out, bool binary,
               const fs::path& cache_dir, int n_max_exact) {
    gsc::Codebook cb = load_or_build_codebook(n, cache_dir, n_max_exact);
    std::vector<std::string> codewords;
    std::string data = read_input(in);
    if (binary) {
        size_t pos = 0;
        while (pos < data.size()) codewords.push_back(gsc::read_codeword_record(data, pos));
    } else {
        std::vector<std::string> lines = split_lines(data);
        for (size_t i = 0; i < lines.size(); ++i) {
            std::string line = lines[i] == "(empty)" ? "" : lines[i];
            for (size_t c = 0; c < line.size(); ++c)
                if (line[c] != '0' && line[c] != '1')
                    throw gsc::ParseError("line " + std::to_string(i + 1) +
                                          ": codeword must be over {0,1}");
            codewords.push_back(line);
        }
    }
    std::string payload;
    for (const std::string& cw : codewords)
        payload += gsc::write_graph6(gsc::decode(cw, cb).to_labeled()) + "\n";
    write_output(out, payload);
    return 0;
}

int cmd_count(int n, int64_t j_opt, const std::string& mode, const std::string& format,
              const std::string& out, double slack_bits, double mu_min) {
    gsc::TypeClassTable table = gsc::exact_count_table(n);
    uint64_t m = gsc::num_pairs(n);
    std::vector<uint64_t> js;
    if (j_opt >= 0) {
        if (static_cast<uint64_t>(j_opt) > m)
            throw std::domain_error("count: j out of range for n");
        js.push_back(static_cast<uint64_t>(j_opt));
    } else {
        for (uint64_t j = 0; j <= m; ++j) js.push_back(j);
    }
    if (mode == "bounds" && j_opt >= 0 && (js[0] == 0 || js[0] == m)) {
        std::cerr << "gsc: class j=" << js[0] << " at n=" << n
                  << " is degenerate (empty or complete); size bounds need 0 < j < m\n";
        return 1;
    }

    ordered_json rows = ordered_json::array();
    std::string csv;
    if (mode == "exact")
        csv = "n,j,N_exact\n";
    else if (mode == "wright")
        csv = "n,j,N_exact,log2_lambda,mu,ratio,regime_ok\n";
    else
        csv = "n,j,N_exact,log2_lambda,mu,lower_bits,upper_bits\n";
    for (uint64_t j : js) {
        ordered_json row;
        row["n"] = n;
        row["j"] = j;
        row["N_exact"] = table.counts[j].str();
        char buf[256];
        if (mode == "exact") {
            std::snprintf(buf, sizeof buf, "%d,%llu,%s\n", n, (unsigned long long)j,
                          table.counts[j].str().c_str());
            csv += buf;
        } else if (mode == "wright") {
            gsc::LambdaApprox la = gsc::lambda_approx(n, j);
            double muv = gsc::mu(n, j);
            double ratio = std::exp2(gsc::log2_big(table.counts[j]) - la.log2_lambda);
            bool ok = gsc::wright_condition(n, j, mu_min);
            row["log2_lambda"] = la.log2_lambda;
            row["mu"] = muv;
            row["ratio"] = ratio;
            row["regime_ok"] = ok;
            std::snprintf(buf, sizeof buf, "%d,%llu,%s,%.10g,%.10g,%.10g,%d\n", n,
                          (unsigned long long)j, table.counts[j].str().c_str(), la.log2_lambda,
                          muv, ratio, ok ? 1 : 0);
            csv += buf;
        } else if (mode == "bounds") {
            gsc::LambdaApprox la = gsc::lambda_approx(n, j);
            double muv = gsc::mu(n, j);
            row["log2_lambda"] = la.log2_lambda;
            row["mu"] = muv;
            if (j == 0 || j == m) {
                row["lower_bits"] = nullptr;
                row["upper_bits"] = nullptr;
                std::snprintf(buf, sizeof buf, "%d,%llu,%s,%.10g,%.10g,,\n", n,
                              (unsigned long long)j, table.counts[j].str().c_str(),
                              la.log2_lambda, muv);
            } else {
                gsc::ClassSizeBounds b = gsc::class_size_bounds(n, j, slack_bits, mu_min);
                row["lower_bits"] = b.lower;
                row["upper_bits"] = b.upper;
                row["exact_bits"] = b.exact;
                row["regime_ok"] = b.wright_ok;
                std::snprintf(buf, sizeof buf, "%d,%llu,%s,%.10g,%.10g,%.10g,%.10g\n", n,
                              (unsigned long long)j, table.counts[j].str().c_str(),
                              la.log2_lambda, muv, b.lower, b.upper);
            }
            csv += buf;
        } else {
            throw std::runtime_error("count: unknown mode " + mode);
        }
        rows.push_back(row);
    }
    if (format == "json") {
        ordered_json doc;
        doc["schema"] = "gsc.count/v1";
        doc["mode"] = mode;
        doc["rows"] = rows;
        write_output(out, json_text(doc));
    } else {
        write_output(out, csv);
    }
    return 0;
}

int cmd_rate(const std::string& n_list, double p, double eps, const std::string& mode,
             const std::string& out, const fs::path& cache_dir, int n_max_exact) {
    std::vector<int> ns;
    std::stringstream ss(n_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        ns.push_back(std::stoi(tok));
    }
    if (ns.empty()) throw std::runtime_error("rate: no n values given");

    ordered_json rows = ordered_json::array();
    for (int n : ns) {
        uint64_t m = gsc::num_pairs(n);
        ordered_json row;
        row["n"] = n;
        row["m"] = m;
        gsc::RateBound rb = gsc::theoretical_rate_bound(n, p, eps);
        ordered_json bound = gsc::rate_bound_json(rb);
        for (auto it = bound.begin(); it != bound.end(); ++it) row[it.key()] = it.value();
        if (mode == "exact") {
            gsc::Codebook cb = load_or_build_codebook(n, cache_dir, n_max_exact);
            gsc::ExactRate er = gsc::epsilon_rate_exact(n, p, eps, cb);
            row["k"] = er.k;
            row["exact_rate"] = er.rate;
            row["residual_bits"] = static_cast<double>(er.k) - rb.total_bits;
        } else if (mode == "bracket") {
            gsc::TypeClassTable table = gsc::exact_count_table(n);
            gsc::RateBracket br = gsc::epsilon_rate_bracket(n, p, eps, table);
            row["k_low"] = br.k_low;
            row["k_high"] = br.k_high;
            row["bracket_low"] = br.low;
            row["bracket_high"] = br.high;
            row["residual_bits"] = static_cast<double>(br.k_high) - rb.total_bits;
        } else if (mode != "bound") {
            throw std::runtime_error("rate: unknown mode " + mode);
        }
        rows.push_back(row);
    }
    ordered_json doc;
    doc["schema"] = gsc::kSchemaRate;
    doc["p"] = p;
    doc["eps"] = eps;
    doc["mode"] = mode;
    doc["rows"] = rows;
    write_output(out, json_text(doc));
    return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed, uint64_t trials, const std::string& out) {
    ordered_json checks = ordered_json::array();
    bool all_pass = true;
    ordered_json single_report;  // schema-tagged report for one-suite runs

    auto note_result = [&](const std::string& name, bool pass, double observed, double bound) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": observed " << observed
                  << " vs bound " << bound << "\n";
        if (!pass) all_pass = false;
    };

    if (suite == "chernoff" || suite == "all") {
        gsc::BoundCheckReport rep = gsc::chernoff_check(30, 0.3, 0.5, trials, seed);
        note_result(rep.name, rep.pass, rep.observed, rep.bound);
        for (const std::string& n : rep.notes) std::cout << "       note: " << n << "\n";
        checks.push_back(gsc::bound_check_json(rep));
    }
    if (suite == "stirling" || suite == "all") {
        gsc::BoundCheckReport rep = gsc::stirling_sweep(10000, 10000, seed);
        note_result(rep.name, rep.pass, rep.observed, rep.bound);
        checks.push_back(gsc::bound_check_json(rep));
    }
    if (suite == "berry" || suite == "all") {
        gsc::BerryEsseenReport rep =
            gsc::berry_esseen_check({100, 400, 1600, 6400}, 0.2, trials, seed);
        double worst = 0.0;
        for (double s : rep.scaled) worst = std::max(worst, s);
        note_result("berry_esseen", rep.pass, worst, rep.a_config);
        ordered_json rj = gsc::berry_report_json(rep);
        if (suite == "berry") single_report = rj;
        ordered_json wrap;
        wrap["name"] = "berry_esseen";
        wrap["pass"] = rep.pass;
        wrap["report"] = rj;
        checks.push_back(wrap);
    }
    if (suite == "wright" || suite == "all") {
        std::vector<gsc::WrightRow> rows = gsc::wright_convergence_report({10, 20, 25, 30});
        bool decreasing = true;
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].abs_err >= rows[i - 1].abs_err) decreasing = false;
        bool small_at_top = rows.back().abs_err <= 0.05;
        bool pass = decreasing && small_at_top;
        note_result("wright_convergence", pass, rows.back().abs_err, 0.05);
        ordered_json rj = gsc::wright_report_json(rows);
        if (suite == "wright") single_report = rj;
        ordered_json wrap;
        wrap["name"] = "wright_convergence";
        wrap["pass"] = pass;
        wrap["report"] = rj;
        checks.push_back(wrap);
        if (!pass) all_pass = false;
    }
    if (suite == "theorem1" || suite == "all") {
        gsc::Theorem1Report rep =
            gsc::theorem1_check({3, 4, 5, 6}, {0.1, 0.3, 0.5, 0.7}, {0.05, 0.1, 0.25});
        bool pass = rep.violations_one_to_one == 0;
        note_result("budget_log_vs_rate", pass,
                    static_cast<double>(rep.violations_one_to_one), 0.0);
        if (rep.violations_published > 0)
            std::cout << "       note: published ceil(log2 M) form fails on "
                      << rep.violations_published
                      << " cells where M is a power of two; the one-to-one form "
                         "floor(log2 M)+1 holds everywhere\n";
        checks.push_back(gsc::theorem1_report_json(rep));
        if (!pass) all_pass = false;
    }
    if (checks.empty()) throw std::runtime_error("verify: unknown suite " + suite);

    if (!out.empty()) {
        if (!single_report.is_null()) {
            write_output(out, json_text(single_report));
        } else {
            ordered_json doc;
            doc["schema"] = gsc::kSchemaVerify;
            doc["suite"] = suite;
            doc["seed"] = seed;
            doc["trials"] = trials;
            doc["checks"] = checks;
            doc["pass"] = all_pass;
            write_output(out, json_text(doc));
        }
    }
    std::cout << (all_pass ? "all checks passed\n" : "some checks FAILED\n");
    return all_pass ? 0 : 1;
}

int cmd_plot(const std::string& report_path, const std::string& out) {
    std::string text = read_input(report_path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw gsc::ParseError(std::string("plot: report is not valid JSON: ") + e.what());
    }
    write_output(out, gsc::render_plot(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type-size compressor and analysis suite for unlabeled graph structures"};
    app.require_subcommand(1);

    std::string cache_dir_opt;
    uint64_t seed = kDefaultSeed;
    int n_max_exact = 7;
    app.add_option("--cache-dir", cache_dir_opt, "codebook cache directory");
    app.add_option("--seed", seed, "random seed for sampled commands");
    app.add_option("--n-max-exact", n_max_exact, "largest n with an exact codebook");

    auto* enc = app.add_subcommand("encode", "graph6 lines -> codewords");
    int enc_n = 0;
    std::string enc_in = "-", enc_out = "-";
    double enc_p = 0.0;
    bool enc_binary = false;
    enc->add_option("--n", enc_n, "vertex count")->required();
    enc->add_option("--in", enc_in, "graph6 input file or -");
    enc->add_option("--out", enc_out, "output file or -");
    auto* enc_p_opt = enc->add_option("--p", enc_p, "edge probability for a model summary");
    enc->add_flag("--binary", enc_binary, "emit length-prefixed binary records");

    auto* dec = app.add_subcommand("decode", "codewords -> canonical graph6 lines");
    int dec_n = 0;
    std::string dec_in = "-", dec_out = "-";
    bool dec_binary = false;
    dec->add_option("--n", dec_n, "vertex count")->required();
    dec->add_option("--in", dec_in, "codeword input file or -");
    dec->add_option("--out", dec_out, "output file or -");
    dec->add_flag("--binary", dec_binary, "read length-prefixed binary records");

    auto* cnt = app.add_subcommand("count", "class counts and size bounds");
    int cnt_n = 0;
    int64_t cnt_j = -1;
    std::string cnt_mode = "exact", cnt_format = "csv", cnt_out = "-";
    double slack_bits = 2.0, mu_min = 10.0;
    cnt->add_option("--n", cnt_n, "vertex count")->required();
    cnt->add_option("--j", cnt_j, "single edge count (default: all)");
    cnt->add_option("--mode", cnt_mode, "exact|wright|bounds")
        ->check(CLI::IsMember({"exact", "wright", "bounds"}));
    cnt->add_option("--format", cnt_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    cnt->add_option("--out", cnt_out, "output file or -");
    cnt->add_option("--slack-bits", slack_bits, "upper-bound slack in bits");
    cnt->add_option("--mu-min", mu_min, "regime threshold for the density parameter");

    auto* rate = app.add_subcommand("rate", "epsilon-coding rates and the explicit bound");
    std::string rate_n = "4", rate_mode = "bound", rate_out = "-";
    double rate_p = 0.5, rate_eps = 0.1;
    rate->add_option("--n", rate_n, "comma-separated vertex counts")->required();
    rate->add_option("--p", rate_p, "edge probability");
    rate->add_option("--eps", rate_eps, "overflow tolerance");
    rate->add_option("--mode", rate_mode, "exact|bracket|bound")
        ->check(CLI::IsMember({"exact", "bracket", "bound"}));
    rate->add_option("--out", rate_out, "output file or -");

    auto* ver = app.add_subcommand("verify", "statistical and exact bound checks");
    std::string ver_suite = "all", ver_out;
    uint64_t ver_trials = 100000;
    ver->add_option("suite", ver_suite, "chernoff|stirling|berry|wright|theorem1|all")
        ->check(CLI::IsMember({"chernoff", "stirling", "berry", "wright", "theorem1", "all"}));
    ver->add_option("--trials", ver_trials, "Monte Carlo trials");
    ver->add_option("--out", ver_out, "JSON report file");

    auto* plot = app.add_subcommand("plot", "render a JSON report as SVG");
    std::string plot_report, plot_out = "-";
    plot->add_option("--report", plot_report, "report JSON file")->required();
    plot->add_option("--out", plot_out, "SVG output file or -");

    CLI11_PARSE(app, argc, argv);

    try {
        fs::path cache_dir = resolve_cache_dir(cache_dir_opt);
        if (enc->parsed())
            return cmd_encode(enc_n, enc_in, enc_out, enc_p, enc_p_opt->count() > 0, enc_binary,
                              cache_dir, n_max_exact);
        if (dec->parsed())
            return cmd_decode(dec_n, dec_in, dec_out, dec_binary, cache_dir, n_max_exact);
        if (cnt->parsed())
            return cmd_count(cnt_n, cnt_j, cnt_mode, cnt_format, cnt_out, slack_bits, mu_min);
        if (rate->parsed())
            return cmd_rate(rate_n, rate_p, rate_eps, rate_mode, rate_out, cache_dir,
                            n_max_exact);
        if (ver->parsed()) return cmd_verify(ver_suite, seed, ver_trials, ver_out);
        if (plot->parsed()) return cmd_plot(plot_report, plot_out);
    } catch (const gsc::CapacityError& e) {
        std::cerr << "gsc: " << e.what() << "\n";
        return 2;
    } catch (const gsc::ParseError& e) {
        std::cerr << "gsc: " << e.what() << "\n";
        return 3;
    } catch (const gsc::InvalidCodewordError& e) {
        std::cerr << "gsc: " << e.what() << "\n";
        return 4;
    } catch (const gsc::SchemaError& e) {
        std::cerr << "gsc: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "gsc: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
