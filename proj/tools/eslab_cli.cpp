// Command-line front end: continued-fraction reports, batch verification of
// the no-Type-III property, per-prime censuses, lattice counts, and the
// a/p exploratory scan. Emits JSON (newline-delimited), CSV, or text.
//
// Exit codes: 0 success, 1 mathematical violation / cross-method mismatch,
// 2 usage error.

#include "eslab/cf.hpp"
#include "eslab/lattice.hpp"
#include "eslab/parallel.hpp"
#include "eslab/primes.hpp"
#include "eslab/report.hpp"
#include "eslab/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace eslab;

enum class Format { json, csv, text };

struct Output {
    Format format = Format::text;
    std::ostream* os = &std::cout;
    std::ofstream file;
    bool csv_header_done = false;

    bool open(const std::string& path) {
        if (path.empty()) return true;
        file.open(path);
        if (!file) return false;
        os = &file;
        return true;
    }

    static std::string csv_cell(const json& v) {
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }

    void row(const json& r) {
        switch (format) {
            case Format::json:
                *os << r.dump() << '\n';
                break;
            case Format::csv: {
                if (!csv_header_done) {
                    bool first = true;
                    for (auto it = r.begin(); it != r.end(); ++it) {
                        if (!first) *os << ',';
                        *os << it.key();
                        first = false;
                    }
                    *os << '\n';
                    csv_header_done = true;
                }
                bool first = true;
                for (auto it = r.begin(); it != r.end(); ++it) {
                    if (!first) *os << ',';
                    *os << csv_cell(it.value());
                    first = false;
                }
                *os << '\n';
                break;
            }
            case Format::text: {
                bool first = true;
                for (auto it = r.begin(); it != r.end(); ++it) {
                    if (!first) *os << "  ";
                    *os << it.key() << '=' << csv_cell(it.value());
                    first = false;
                }
                *os << '\n';
                break;
            }
        }
    }

    void note(const std::string& line) {
        if (format == Format::text) *os << line << '\n';
    }
};

unsigned resolve_jobs(int jobs_flag) {
    if (jobs_flag >= 0) return static_cast<unsigned>(jobs_flag);
    if (const char* env = std::getenv("ES_LAB_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // auto
}

std::string shape_string(const CFShape& shape) {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ',';
        s += shape[i] < 0 ? "*" : std::to_string(shape[i]);
    }
    s += ']';
    return s;
}

std::string expansion_string(const CFExpansion& cf) {
    std::string s = "[";
    for (std::size_t i = 0; i < cf.length(); ++i) {
        if (i) s += i == 1 ? ";" : ",";
        s += cf.quotients[i].str();
    }
    s += ']';
    return s;
}

int cmd_cf(std::uint64_t num, std::uint64_t den, Output& out) {
    if (den == 0) {
        std::cerr << "cf: denominator must be >= 1\n";
        return 2;
    }
    Rational r{Integer(num), Integer(den)};
    auto cf = cf_expand(r);
    auto cs = convergents(cf);
    json row;
    row["value"] = r.str();
    row["expansion"] = expansion_string(cf);
    std::vector<std::string> convs, errors;
    for (const auto& c : cs) {
        convs.push_back(c.value().str());
        errors.push_back(error_term(r, c.k).r_k.str());
    }
    row["convergents"] = convs;
    row["error_terms"] = errors;
    if (num == 4 && den >= 5 && is_prime(den)) {
        auto closed = four_over_p_closed_form(den);
        bool match = closed.expansion == cf;
        if (match)
            for (std::size_t i = 0; i < cs.size(); ++i)
                match = match && closed.convergent_values[i] == cs[i].value();
        row["closed_form_match"] = match;
    }
    out.row(row);
    return 0;
}

int cmd_verify(std::uint64_t from, std::uint64_t to, std::uint64_t xy_cap, unsigned jobs,
               Output& out) {
    if (from < 5 || from > to) {
        std::cerr << "verify: need 5 <= from <= to\n";
        return 2;
    }
    auto primes = primes_in(from, to);
    struct Row {
        std::uint64_t p;
        std::size_t n_convergents;
        bool numerators_one;
        bool d_negative;
        std::uint64_t violations;
    };
    auto rows = parallel_map<Row>(primes.size(), jobs, [&](std::size_t i) {
        std::uint64_t p = primes[i];
        auto trace = proof_trace(static_cast<i64>(p));
        bool numerators_one = true, d_negative = true;
        for (const auto& r : trace.rows) {
            if (r.p_k != 1) numerators_one = false;
            if (!(r.discriminant < 0)) d_negative = false;
        }
        auto scan = verify_type_iii_absent(static_cast<i64>(p), static_cast<i64>(xy_cap));
        std::uint64_t violations =
            scan.violations.size() + static_cast<std::uint64_t>(scan.enumeration_type_iii);
        return Row{p, trace.rows.size() + 2, numerators_one, d_negative, violations};
    });
    std::uint64_t total_violations = 0;
    for (const auto& r : rows) {
        json row;
        row["p"] = r.p;
        row["n_convergents"] = r.n_convergents;
        row["all_numerators_one"] = r.numerators_one;
        row["all_D_negative"] = r.d_negative;
        row["violations"] = r.violations;
        out.row(row);
        total_violations += r.violations;
    }
    out.note("primes checked: " + std::to_string(rows.size()));
    return total_violations == 0 ? 0 : 1;
}

int cmd_census(std::uint64_t from, std::uint64_t to, unsigned jobs, Output& out) {
    if (from < 5 || from > to) {
        std::cerr << "census: need 5 <= from <= to\n";
        return 2;
    }
    auto primes = primes_in(from, to);
    auto rows = parallel_map<Census>(primes.size(), jobs, [&](std::size_t i) {
        return census(static_cast<i64>(primes[i]));
    });
    for (const auto& c : rows) {
        json row;
        row["p"] = c.n;
        row["f_ordered"] = c.f_ordered;
        row["f_unordered"] = c.f_unordered;
        row["f_I"] = c.f_I;
        row["f_II"] = c.f_II;
        row["f_III"] = c.f_III;
        row["identity_holds"] = c.identity_holds;
        out.row(row);
    }
    return 0;
}

int cmd_lattice(const std::vector<std::uint64_t>& n_values, const std::string& method,
                Output& out) {
    for (std::uint64_t N : n_values) {
        std::uint64_t a_brute = 0, a_sliced = 0;
        bool have_brute = false, have_sliced = false;
        if (method == "brute" || method == "both") {
            a_brute = count_lattice_brute(N).a_N;
            have_brute = true;
        }
        if (method == "sliced" || method == "both") {
            a_sliced = count_lattice_sliced(N).a_N;
            have_sliced = true;
        }
        if (have_brute && have_sliced && a_brute != a_sliced) {
            std::cerr << "lattice: method mismatch at N=" << N << ": brute=" << a_brute
                      << " sliced=" << a_sliced << '\n';
            return 1;
        }
        std::uint64_t a = have_brute ? a_brute : a_sliced;
        json row;
        row["N"] = N;
        row["a_N"] = a;
        row["a_N_over_N"] = decimal_string(Rational(Integer(a), Integer(N)));
        row["a_N_over_N_5_2"] = ratio_over_n_five_halves(a, N);
        row["method"] = method;
        out.row(row);
    }
    return 0;
}

int cmd_sierpinski(std::uint64_t a, std::uint64_t from, std::uint64_t to, Output& out) {
    if (a < 2) {
        std::cerr << "sierpinski: need a >= 2\n";
        return 2;
    }
    if (from > to) {
        std::cerr << "sierpinski: need from <= to\n";
        return 2;
    }
    for (std::uint64_t p : primes_in(from, to)) {
        if (a % p == 0) continue;
        json row;
        row["p"] = p;
        row["p_mod_a"] = p % a;
        row["cf_shape"] = shape_string(cf_shape(static_cast<i64>(a), static_cast<i64>(p)));
        auto sols = enumerate_solutions_general(static_cast<i64>(a), static_cast<i64>(p));
        row["f_general_positive"] = !sols.empty();
        out.row(row);
    }
    for (const auto& [residue, shapes] : cf_residue_classifier(static_cast<i64>(a),
                                                               static_cast<i64>(from),
                                                               static_cast<i64>(to))) {
        json row;
        row["residue_class"] = residue;
        std::vector<std::string> ss;
        for (const auto& s : shapes) ss.push_back(shape_string(s));
        row["shapes"] = ss;
        out.row(row);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for 4/n = 1/x + 1/y + 1/z: continued "
                 "fractions, solution censuses, and lattice counts"};
    app.require_subcommand(1);

    std::string format = "text", out_path, method = "both";
    int jobs = -1;
    std::uint64_t from = 0, to = 0, xy_cap = 1000, cf_num = 0, cf_den = 0, sp_a = 0;
    std::string n_list;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", out_path);
        sub->add_option("--jobs", jobs);
    };

    auto* cf = app.add_subcommand("cf", "continued fraction report for num/den");
    cf->add_option("num", cf_num)->required();
    cf->add_option("den", cf_den)->required();
    add_common(cf);

    auto* verify = app.add_subcommand("verify", "verify absence of Type III solutions");
    verify->add_option("--from", from)->required();
    verify->add_option("--to", to)->required();
    verify->add_option("--xy-cap", xy_cap);
    add_common(verify);

    auto* census_cmd = app.add_subcommand("census", "per-prime solution census");
    census_cmd->add_option("--from", from)->required();
    census_cmd->add_option("--to", to)->required();
    add_common(census_cmd);

    auto* lattice = app.add_subcommand("lattice", "lattice count a_N");
    lattice->add_option("--n", n_list, "comma-separated N values")->required();
    lattice->add_option("--method", method)->check(CLI::IsMember({"brute", "sliced", "both"}));
    add_common(lattice);

    auto* sierpinski = app.add_subcommand("sierpinski", "a/p exploratory scan");
    sierpinski->add_option("--a", sp_a)->required();
    sierpinski->add_option("--from", from)->default_val(5);
    sierpinski->add_option("--to", to)->default_val(100);
    add_common(sierpinski);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    out.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    if (!out.open(out_path)) {
        std::cerr << "cannot open output file: " << out_path << '\n';
        return 2;
    }

    try {
        if (cf->parsed()) return cmd_cf(cf_num, cf_den, out);
        if (verify->parsed()) return cmd_verify(from, to, xy_cap, resolve_jobs(jobs), out);
        if (census_cmd->parsed()) return cmd_census(from, to, resolve_jobs(jobs), out);
        if (lattice->parsed()) {
            std::vector<std::uint64_t> ns;
            std::stringstream ss(n_list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::uint64_t v = std::stoull(item);
                if (v < 1 || (!ns.empty() && v <= ns.back())) {
                    std::cerr << "lattice: N values must be >= 1 and ascending\n";
                    return 2;
                }
                ns.push_back(v);
            }
            if (ns.empty()) {
                std::cerr << "lattice: no N values\n";
                return 2;
            }
            return cmd_lattice(ns, method, out);
        }
        if (sierpinski->parsed()) return cmd_sierpinski(sp_a, from, to, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
