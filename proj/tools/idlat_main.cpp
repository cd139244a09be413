#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "idlat/audit.hpp"
#include "idlat/density.hpp"
#include "idlat/records.hpp"
#include "idlat/wr_family.hpp"

namespace {

using namespace idlat;

struct Options {
    std::string field;
    std::string a, b;
    std::string g = "1";
    bool ideal = false;
    std::string b_max;
    std::string gamma;
    std::string eps;
    std::string x_max;
    int n = 0;
    std::string cos_t;
    std::string format = "csv";
    std::string out_path;
    int threads = 0;
};

struct Sink {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = &std::cout;
    bool csv = true;
    bool header_done = false;

    // Fixed-schema subcommands print their header up front so an empty
    // result set still yields a parseable document.
    void header(const std::string& line) {
        if (csv && !header_done) {
            *stream << line << '\n';
            header_done = true;
        }
    }

    void emit(const Record& r) {
        if (csv && !header_done) {
            *stream << csv_header(r) << '\n';
            header_done = true;
        }
        *stream << (csv ? csv_row(r) : jsonl_row(r)) << '\n';
    }
};

Sink make_sink(const Options& opt) {
    Sink s;
    if (opt.format == "jsonl") {
        s.csv = false;
    } else if (opt.format != "csv") {
        throw std::invalid_argument("--format must be csv or jsonl");
    }
    if (!opt.out_path.empty()) {
        s.file = std::make_unique<std::ofstream>(opt.out_path);
        if (!*s.file) throw std::invalid_argument("cannot open output file: " + opt.out_path);
        s.stream = s.file.get();
    }
    return s;
}

Int parse_int(const std::string& text, const std::string& flag) {
    if (text.empty()) throw std::invalid_argument("missing required value for " + flag);
    try {
        return Int(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(flag + ": not an integer: " + text);
    }
}

int effective_threads(const Options& opt) {
    // IDLAT_THREADS, when set, wins over --threads.
    if (const char* env = std::getenv("IDLAT_THREADS")) {
        try {
            return std::stoi(env);
        } catch (...) {
            throw std::invalid_argument("IDLAT_THREADS is not an integer");
        }
    }
    return opt.threads;
}

PairAB input_pair(const Options& opt) {
    const Int d = parse_int(opt.field, "--field");
    const Int a = parse_int(opt.a, "--a");
    const Int b = parse_int(opt.b, "--b");
    if (!opt.ideal) return pair_ab(d, a, b);
    const FieldData fd = field_data(d);
    const Int g = parse_int(opt.g, "--g");
    if (g <= 0 || a <= 0 || b < 0 || !validate_ideal(fd, a, b, g))
        throw std::invalid_argument("not a canonical ideal triple for this field");
    return to_pair(fd, {a, b, g});
}

void run_classify(const Options& opt, Sink& sink) {
    const PairAB p = input_pair(opt);
    const VerdictRecord rec = verdict(p);
    Band band = Band::NoClaim;
    bool counter = false;
    if (!opt.gamma.empty()) {
        band = predict(p, parse_ratio(opt.gamma)).band;
        counter = band == Band::StableBand && !rec.semistable;
    }
    sink.emit(census_record(rec, band, counter));
}

void run_census(const Options& opt, Sink& sink) {
    const AuditReport report =
        census(parse_int(opt.field, "--field"), parse_int(opt.b_max, "--b-max"),
               parse_ratio(opt.gamma), effective_threads(opt));
    sink.header(census_csv_header());
    for (const auto& row : report.rows) sink.emit(census_record(row));
}

void run_estimate_gamma(const Options& opt, Sink& sink) {
    const Int d = parse_int(opt.field, "--field");
    const Int b_max = parse_int(opt.b_max, "--b-max");
    const Ratio gamma_hat = estimate_gamma(d, b_max, effective_threads(opt));
    sink.emit({{"D", d.get_str(), false},
               {"b_max", b_max.get_str(), false},
               {"gamma_hat", ratio_str(gamma_hat), true}});
}

void run_audit_ratio(const Options& opt, Sink& sink) {
    const Int d = parse_int(opt.field, "--field");
    const Int b_max = parse_int(opt.b_max, "--b-max");
    const Ratio r = audit_ratio(d, b_max, effective_threads(opt));
    sink.emit({{"D", d.get_str(), false},
               {"b_max", b_max.get_str(), false},
               {"max_ratio", ratio_str(r), true}});
}

void run_divisor_scan(const Options& opt, Sink& sink) {
    const Int d = parse_int(opt.field, "--field");
    const Ratio eps = parse_ratio(opt.eps);
    const Int x_max = parse_int(opt.x_max, "--x-max");
    sink.header("D,eps,x");
    for (const Int& x : divisor_scan(d, eps, x_max)) {
        sink.emit({{"D", d.get_str(), false},
                   {"eps", ratio_str(eps), true},
                   {"x", x.get_str(), false}});
    }
}

void run_s1_census(const Options& opt, Sink& sink) {
    const Int d = parse_int(opt.field, "--field");
    const Int b_max = parse_int(opt.b_max, "--b-max");
    sink.header("D,a,b");
    for (const PairAB& p : s1_census(d, b_max, effective_threads(opt))) {
        sink.emit({{"D", d.get_str(), false},
                   {"a", p.a.get_str(), false},
                   {"b", p.b.get_str(), false}});
    }
}

void run_wr_demo(const Options& opt, Sink& sink) {
    if (opt.n < 2) throw std::invalid_argument("--n must be >= 2");
    const WrLattice w = wr_lattice(opt.n, parse_ratio(opt.cos_t));
    const bool wr = wr_minima_check(w);
    const WrStability st = wr_stability(w);
    sink.emit({{"n", std::to_string(opt.n), false},
               {"cos", ratio_str(w.t), true},
               {"s", ratio_str(st.s), true},
               {"wr", wr ? "true" : "false", false},
               {"unstable", st.unstable ? "true" : "false", false}});
}

void run_density(const Options& opt, Sink& sink) {
    const Int d = parse_int(opt.field, "--field");
    const Int x = parse_int(opt.x_max, "--x-max");
    const int threads = effective_threads(opt);
    const std::vector<std::pair<Ratio, Ratio>> halves{{Ratio(0), Ratio(1, 2)},
                                                      {Ratio(1, 2), Ratio(1)}};
    const DensityStats stats = m_count(d, x, halves, threads);
    const double xd = mpz_get_d(x.get_mpz_t());
    const double c = mpz_get_d(stats.m_count.get_mpz_t()) * std::sqrt(std::log(xd)) / xd;
    char c_buf[32];
    std::snprintf(c_buf, sizeof(c_buf), "%.4f", c);

    Record r{{"D", d.get_str(), false},
             {"x", x.get_str(), false},
             {"m_count", stats.m_count.get_str(), false},
             {"count_lo_half", std::get<2>(stats.subinterval_counts[0]).get_str(), false},
             {"count_hi_half", std::get<2>(stats.subinterval_counts[1]).get_str(), false},
             {"c_estimate", c_buf, false}};
    if (!opt.b_max.empty()) {
        const auto [num, den] = semistable_fraction(d, parse_int(opt.b_max, "--b-max"), threads);
        r.push_back({"semistable", num.get_str(), false});
        r.push_back({"total", den.get_str(), false});
    }
    sink.emit(r);
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "csv or jsonl (default csv)");
    cmd->add_option("--out", opt.out_path, "output path (default standard output)");
    cmd->add_option("--threads", opt.threads, "worker threads (default all cores)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact semi-stability toolkit for ideal lattices of real quadratic fields"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* classify = app.add_subcommand("classify", "verdict for one pair or ideal triple");
    classify->add_option("--field", opt.field)->required();
    classify->add_option("--a", opt.a)->required();
    classify->add_option("--b", opt.b)->required();
    classify->add_option("--g", opt.g, "ideal coefficient g (default 1)");
    classify->add_flag("--ideal", opt.ideal, "treat a,b,g as a canonical ideal triple");
    classify->add_option("--gamma", opt.gamma, "band constant p/q (adds a band column)");
    add_common(classify, opt);

    CLI::App* census_cmd = app.add_subcommand("census", "exact verdicts and band audit over S(D)");
    census_cmd->add_option("--field", opt.field)->required();
    census_cmd->add_option("--b-max", opt.b_max)->required();
    census_cmd->add_option("--gamma", opt.gamma)->required();
    add_common(census_cmd, opt);

    CLI::App* eg = app.add_subcommand("estimate-gamma", "measured band constant over a census");
    eg->add_option("--field", opt.field)->required();
    eg->add_option("--b-max", opt.b_max)->required();
    add_common(eg, opt);

    CLI::App* ar = app.add_subcommand("audit-ratio", "max |beta|/alpha over S3 minimizers");
    ar->add_option("--field", opt.field)->required();
    ar->add_option("--b-max", opt.b_max)->required();
    add_common(ar, opt);

    CLI::App* ds = app.add_subcommand("divisor-scan", "x with a divisor of x^2-D just above x");
    ds->add_option("--field", opt.field)->required();
    ds->add_option("--eps", opt.eps)->required();
    ds->add_option("--x-max", opt.x_max)->required();
    add_common(ds, opt);

    CLI::App* s1 = app.add_subcommand("s1-census", "pairs whose minimizer is (1,0)");
    s1->add_option("--field", opt.field)->required();
    s1->add_option("--b-max", opt.b_max)->required();
    add_common(s1, opt);

    CLI::App* wr = app.add_subcommand("wr-demo", "well-rounded family check");
    wr->add_option("--n", opt.n)->required();
    wr->add_option("--cos", opt.cos_t, "cos(theta) as p/q in (0, 1/2]")->required();
    add_common(wr, opt);

    CLI::App* dens = app.add_subcommand("density", "quadratic-residue modulus counting");
    dens->add_option("--field", opt.field)->required();
    dens->add_option("--x-max", opt.x_max)->required();
    dens->add_option("--b-max", opt.b_max, "also report the semi-stable fraction up to b-max");
    add_common(dens, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Sink sink = make_sink(opt);
        if (classify->parsed()) run_classify(opt, sink);
        else if (census_cmd->parsed()) run_census(opt, sink);
        else if (eg->parsed()) run_estimate_gamma(opt, sink);
        else if (ar->parsed()) run_audit_ratio(opt, sink);
        else if (ds->parsed()) run_divisor_scan(opt, sink);
        else if (s1->parsed()) run_s1_census(opt, sink);
        else if (wr->parsed()) run_wr_demo(opt, sink);
        else if (dens->parsed()) run_density(opt, sink);
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
