// Command-line front end: compute divisor-interval polynomials,
// evaluate them exactly at roots of unity, run verification sweeps,
// and cross-check OEIS b-files.
//
// Exit codes: 0 full pass, 1 mathematical counterexample, 2 usage or
// I/O error.
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "divpoly/poly.hpp"
#include "divpoly/verify.hpp"

namespace {

using divpoly::i64;

divpoly::Family parse_family(const std::string& s) {
    return s == "P" ? divpoly::Family::P : divpoly::Family::L;
}

void parse_range(const std::string& s, i64& lo, i64& hi) {
    const auto dots = s.find("..");
    auto to_i64 = [&](std::string_view part, i64& out) {
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec != std::errc{} || ptr != last)
            throw std::invalid_argument("bad range '" + s + "', expected LO..HI");
    };
    if (dots == std::string::npos)
        throw std::invalid_argument("bad range '" + s + "', expected LO..HI");
    to_i64(std::string_view(s).substr(0, dots), lo);
    to_i64(std::string_view(s).substr(dots + 2), hi);
}

long long ms(double seconds) { return std::llround(seconds * 1000.0); }

struct ComputeArgs {
    std::string family = "L";
    i64 n = 1;
    std::string format = "text";
};

int run_compute(const ComputeArgs& args) {
    const auto p = divpoly::build_poly(args.n, parse_family(args.family));
    const auto cs = p.coeffs();
    if (args.format == "text") {
        std::cout << "family=" << args.family << " n=" << p.n()
                  << " center=" << p.center() << "\n[";
        for (std::size_t j = 0; j < cs.size(); ++j)
            std::cout << (j ? "," : "") << cs[j];
        std::cout << "]\n";
    } else if (args.format == "csv") {
        for (std::size_t j = 0; j < cs.size(); ++j)
            std::cout << static_cast<i64>(j) - p.center() << ',' << cs[j] << '\n';
    } else {
        nlohmann::ordered_json out;
        out["family"] = args.family;
        out["n"] = p.n();
        out["center"] = p.center();
        auto& arr = out["coeffs"] = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < cs.size(); ++j)
            arr.push_back({{"k", static_cast<i64>(j) - p.center()}, {"c", cs[j]}});
        std::cout << out.dump(2) << '\n';
    }
    return 0;
}

struct EvalArgs {
    std::string family = "L";
    i64 n = 1;
    std::string at = "1";
};

int run_eval(const EvalArgs& args) {
    const auto p = divpoly::build_poly(args.n, parse_family(args.family));
    std::cout << "family=" << args.family << "\nn=" << args.n
              << "\nat=" << args.at << "\n";
    if (args.at == "1") {
        std::cout << "value=" << divpoly::eval_at_one(p) << "\n";
    } else if (args.at == "-1") {
        std::cout << "value=" << divpoly::eval_at_minus_one(p) << "\n";
    } else {
        const int order = args.at == "i" ? 4 : (args.at == "zeta3" ? 3 : 6);
        const auto v = divpoly::eval_cyclotomic(p, order);
        std::cout << "order=" << v.order << "\na=" << v.a << "\nb=" << v.b
                  << "\nnorm_squared=" << divpoly::norm_squared(v) << "\n";
        if (order != 4)
            std::cout << "real_part_doubled=" << divpoly::real_part_doubled(v)
                      << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::string range;
    int workers = 1;
    int order = 0;
};

int run_verify(const VerifyArgs& args) {
    const auto suite = divpoly::suite_from_name(args.suite);
    if (!suite) throw std::invalid_argument("unknown suite '" + args.suite + "'");

    divpoly::VerifyOptions opts;
    opts.workers = args.workers;
    opts.order = args.order;
    if (!args.range.empty()) {
        if (*suite == divpoly::Suite::series)
            throw std::invalid_argument("the series suite takes --order, not --range");
        parse_range(args.range, opts.lo, opts.hi);
    }
    if (args.order != 0 && *suite != divpoly::Suite::series)
        throw std::invalid_argument("--order applies to the series suite only");

    const auto rep = divpoly::run_suite(*suite, opts);
    std::cout << "suite: " << rep.suite << "\n";
    if (*suite == divpoly::Suite::series)
        std::cout << "order: " << rep.hi << "\n";
    else
        std::cout << "range: " << rep.lo << ".." << rep.hi << "\n";
    for (const auto& c : rep.checks) {
        std::cout << "check: " << c.name << " range=" << c.lo << ".." << c.hi
                  << " pass=" << c.pass << " fail=" << c.fail << "\n";
        if (c.first_counterexample)
            std::cout << "  counterexample: n=" << c.first_counterexample->n
                      << " expected=" << c.first_counterexample->expected
                      << " actual=" << c.first_counterexample->actual << "\n";
    }
    std::cout << "result: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
    std::cout << "elapsed_ms: " << ms(rep.elapsed_seconds) << "\n";
    return rep.ok() ? 0 : 1;
}

struct OeisArgs {
    std::string seq;
    std::string bfile;
    std::string range;
};

int run_oeis_check(const OeisArgs& args) {
    const auto seq = divpoly::sequence_from_name(args.seq);
    if (!seq) throw std::invalid_argument("unknown sequence '" + args.seq + "'");

    std::ifstream in(args.bfile);
    if (!in) throw std::runtime_error("cannot open b-file '" + args.bfile + "'");
    std::vector<divpoly::BFileEntry> entries;
    try {
        entries = divpoly::parse_bfile(in);
    } catch (const divpoly::BFileError& e) {
        throw std::runtime_error(args.bfile + ": " + e.what());
    }

    i64 lo = 0, hi = 0;
    if (!args.range.empty()) parse_range(args.range, lo, hi);

    const auto rep = divpoly::oeis_check(*seq, entries, lo, hi);
    std::cout << "sequence: " << rep.sequence << "\n"
              << "bfile: " << args.bfile << "\n"
              << "range: " << rep.lo << ".." << rep.hi << "\n"
              << "checked: " << rep.checked << "\n";
    if (rep.mismatch)
        std::cout << "mismatch: n=" << rep.mismatch->n
                  << " file=" << rep.mismatch->expected
                  << " computed=" << rep.mismatch->actual << "\n";
    std::cout << "result: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
    std::cout << "elapsed_ms: " << ms(rep.elapsed_seconds) << "\n";
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor-interval polynomial toolkit"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand(
        "compute", "Build a polynomial and print its centered coefficients");
    compute->add_option("--family", compute_args.family, "L or P")
        ->required()
        ->check(CLI::IsMember({"L", "P"}));
    compute->add_option("--n", compute_args.n, "index n >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    compute->add_option("--format", compute_args.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    EvalArgs eval_args;
    auto* eval = app.add_subcommand(
        "eval", "Evaluate a polynomial exactly at a root of unity");
    eval->add_option("--family", eval_args.family, "L or P")
        ->required()
        ->check(CLI::IsMember({"L", "P"}));
    eval->add_option("--n", eval_args.n, "index n >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    eval->add_option("--at", eval_args.at, "evaluation point")
        ->required()
        ->check(CLI::IsMember({"1", "-1", "i", "zeta3", "zeta6"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify
        ->add_option("--suite", verify_args.suite,
                     "theorem-main, p-identities, lemmas, structural or series")
        ->required();
    verify->add_option("--range", verify_args.range, "LO..HI (default per suite)");
    verify->add_option("--workers", verify_args.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
    verify->add_option("--order", verify_args.order,
                       "truncation order for the series suite");

    OeisArgs oeis_args;
    auto* oeis = app.add_subcommand(
        "oeis-check", "Compare polynomial-route values against a b-file");
    oeis->add_option("--seq", oeis_args.seq, "A002324 or A096936")->required();
    oeis->add_option("--bfile", oeis_args.bfile, "path to the b-file")->required();
    oeis->add_option("--range", oeis_args.range, "LO..HI (default: file span)");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) return run_compute(compute_args);
        if (eval->parsed()) return run_eval(eval_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (oeis->parsed()) return run_oeis_check(oeis_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
