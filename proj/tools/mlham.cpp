// mlham: stream, inspect and verify the level-n/n+1 Hamilton cycle of the
// (2n+1)-cube.
//
//   gen     --n K [--limit M] [--out PATH] [--plan PATH]   stream the cycle
//   verify  --n K [--plan PATH]                            generate and check
//   factor  --n K                                          list factor cycles
//   lemmas  --n K                                          exhaustive lemma suite
//   next    --n K --prev WORD --at WORD                    one successor step
//   plan    --n K [--out PATH]                             write the plan cache
//
// Data goes to stdout, diagnostics to stderr. Exit codes: 0 ok/PASS,
// 1 verification failure, 2 bad usage or bad input.

#include "mlham/factor.hpp"
#include "mlham/gluing.hpp"
#include "mlham/hamilton.hpp"
#include "mlham/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

mlham::GluingPlan plan_for(int n, const std::string& plan_path) {
    if (plan_path.empty()) return mlham::build_gluing_plan(n);
    std::ifstream in(plan_path);
    if (!in) throw std::invalid_argument("cannot open plan cache '" + plan_path + "'");
    mlham::GluingPlan plan = mlham::load_plan(in);
    if (plan.n != n)
        throw std::invalid_argument("plan cache is for n=" + std::to_string(plan.n) +
                                    ", requested n=" + std::to_string(n));
    return plan;
}

int run_gen(int n, std::uint64_t limit, bool limited, const std::string& out_path,
            const std::string& plan_path) {
    const mlham::GluingPlan plan = plan_for(n, plan_path);

    std::FILE* out = stdout;
    if (!out_path.empty()) {
        out = std::fopen(out_path.c_str(), "w");
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    }

    std::string buf;
    buf.reserve(1 << 20);
    std::uint64_t emitted = 0;
    mlham::HamiltonStream stream(plan);
    do {
        if (limited && emitted == limit) break;
        buf += stream.current().str();
        buf += '\n';
        ++emitted;
        if (buf.size() >= (1 << 20) - 64) {
            std::fwrite(buf.data(), 1, buf.size(), out);
            buf.clear();
        }
    } while (stream.advance());
    std::fwrite(buf.data(), 1, buf.size(), out);
    std::fflush(out);
    if (out != stdout) std::fclose(out);

    std::cerr << "gen: emitted " << emitted << " of " << mlham::cycle_length(n) << " vertices\n";
    return 0;
}

int run_verify(int n, const std::string& plan_path) {
    mlham::CheckReport report;
    try {
        const mlham::GluingPlan plan = plan_for(n, plan_path);
        mlham::HamiltonStream stream(plan);
        bool more = true;
        report = mlham::check_stream(n, [&]() -> std::optional<mlham::BitWord> {
            if (!more) return std::nullopt;
            mlham::BitWord w = stream.current();
            more = stream.advance();
            return w;
        });
    } catch (const std::exception& e) {
        std::cout << "FAIL n=" << n << " (" << e.what() << ")\n";
        return 1;
    }
    if (report.passed()) {
        std::cout << "PASS n=" << n << " count=" << report.count << "\n";
        return 0;
    }
    for (const auto& issue : report.issues)
        std::cout << "FAIL n=" << n << " " << issue.kind << " at position " << issue.position << ": "
                  << issue.detail << "\n";
    return 1;
}

int run_factor(int n) {
    for (const mlham::FactorCycle& cls : mlham::enumerate_classes(n))
        std::cout << cls.canonical.str() << " " << cls.period << " " << cls.length << "\n";
    return 0;
}

int run_lemmas(int n) {
    bool all_pass = true;
    for (const mlham::LemmaResult& r : mlham::check_all_lemmas(n)) {
        std::cout << "LEMMA " << r.name << ": " << (r.pass ? "PASS" : "FAIL");
        if (!r.detail.empty()) std::cout << " " << r.detail;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

int run_next(int n, const std::string& prev_s, const std::string& at_s) {
    const mlham::GluingPlan plan = mlham::build_gluing_plan(n);
    const mlham::BitWord prev = mlham::BitWord::parse(prev_s);
    const mlham::BitWord at = mlham::BitWord::parse(at_s);
    std::cout << mlham::hamilton_successor(prev, at, plan).str() << "\n";
    return 0;
}

int run_plan(int n, const std::string& out_path) {
    const mlham::GluingPlan plan = mlham::build_gluing_plan(n);
    if (out_path.empty()) {
        mlham::save_plan(plan, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        mlham::save_plan(plan, out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamilton cycles through the middle two levels of odd hypercubes"};
    app.require_subcommand(1);

    int n = 0;
    std::uint64_t limit = 0;
    std::string out_path, plan_path, prev_s, at_s;

    auto add_n = [&n](CLI::App* cmd) {
        cmd->add_option("--n", n, "instance size (cube dimension 2n+1)")
            ->required()
            ->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("gen", "stream the Hamilton cycle, one vertex per line");
    add_n(gen);
    CLI::Option* limit_opt = gen->add_option("--limit", limit, "stop after this many vertices");
    gen->add_option("--out", out_path, "write vertices to a file instead of stdout");
    gen->add_option("--plan", plan_path, "load the gluing plan from a cache file");

    CLI::App* verify = app.add_subcommand("verify", "generate and verify the cycle in-process");
    add_n(verify);
    verify->add_option("--plan", plan_path, "load the gluing plan from a cache file");

    CLI::App* factor = app.add_subcommand("factor", "list the factor cycles (canonical word, period, length)");
    add_n(factor);

    CLI::App* lemmas = app.add_subcommand("lemmas", "run the exhaustive lemma suite");
    add_n(lemmas);

    CLI::App* next = app.add_subcommand("next", "print the cycle successor of --at coming from --prev");
    add_n(next);
    next->add_option("--prev", prev_s, "previous vertex word")->required();
    next->add_option("--at", at_s, "current vertex word")->required();

    CLI::App* plan = app.add_subcommand("plan", "write the gluing plan cache");
    add_n(plan);
    plan->add_option("--out", out_path, "write the plan to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints help/error text
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(n, limit, limit_opt->count() > 0, out_path, plan_path);
        if (verify->parsed()) return run_verify(n, plan_path);
        if (factor->parsed()) return run_factor(n);
        if (lemmas->parsed()) return run_lemmas(n);
        if (next->parsed()) return run_next(n, prev_s, at_s);
        if (plan->parsed()) return run_plan(n, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
