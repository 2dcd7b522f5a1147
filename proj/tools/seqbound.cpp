// seqbound: bounds on the conditional probability of a momentum measurement
// following a position selection.
//
//   seqbound lambda0 --xi 1
//   seqbound fig1 --xi-max 4 --step 0.02 --format csv --output fig1.csv
//   seqbound emit-optimal --xi 1 --output optimal.json
//   seqbound prob optimal.json --dq 1 --dk 6.283185307179586
//   seqbound timedelay --mass 1 --t 1 --dq 1 --dq2 1 --h 1
//
// Exit codes: 0 success, 2 usage error, 3 numeric error, 4 I/O error.

#include "seqbound/bounds.hpp"
#include "seqbound/errors.hpp"
#include "seqbound/measurement.hpp"
#include "seqbound/oracle.hpp"
#include "seqbound/spectrum.hpp"
#include "seqbound/state_io.hpp"
#include "seqbound/table.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

namespace {

using namespace seqbound;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

// ξ̃ below this is reported as the strong-disturbance regime
constexpr double kDisturbanceXi = 0.1;

std::string fmt(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

struct Lambda0Args {
    double xi = 0.0;
    int order = 0;
    double tolerance = 1e-10;
    int count = 5;
    bool json = false;
};

int run_lambda0(const Lambda0Args& a) {
    if (!(a.xi >= 0.0)) throw ArgumentError("--xi must be >= 0");
    std::vector<double> values;
    std::vector<ConvergenceStep> history;
    double change = 0.0;
    int order = 0;
    if (a.order > 0) {
        const auto r = top_eigenvalues(a.xi, a.order, std::min(a.count, a.order));
        values.assign(r.eigenvalues().begin(), r.eigenvalues().end());
        order = a.order;
    } else {
        ConvergenceOptions opt;
        opt.tolerance = a.tolerance;
        const auto r = solve_converged(a.xi, a.count, opt);
        values.assign(r.result.eigenvalues().begin(), r.result.eigenvalues().end());
        history = r.history;
        change = r.last_change;
        order = r.result.order();
    }
    if (a.json) {
        nlohmann::ordered_json j;
        j["xi"] = a.xi;
        j["lambda0"] = values.front();
        j["eigenvalues"] = values;
        j["order"] = order;
        j["converged_change"] = change;
        auto& h = j["history"] = nlohmann::ordered_json::array();
        for (const auto& s : history) h.push_back({{"order", s.order}, {"lambda0", s.lambda0}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "xi: " << fmt(a.xi) << "\n";
    std::cout << "lambda0: " << fmt(values.front(), 15) << "\n";
    std::cout << "eigenvalues:";
    for (double v : values) std::cout << " " << fmt(v, 15);
    std::cout << "\norder: " << order << "\n";
    if (!history.empty()) {
        std::cout << "convergence:";
        for (const auto& s : history) std::cout << " [" << s.order << ": " << fmt(s.lambda0, 15) << "]";
        std::cout << "\nlast_change: " << fmt(change, 3) << "\n";
    }
    return 0;
}

struct Fig1Args {
    double xi_max = 4.0;
    double step = 0.02;
    std::string output = "-";
    std::string format = "csv";
};

OutputTable fig1_table(double xi_max, double step) {
    OutputTable table({"xi", "lambda0", "p_slit", "trace", "hs", "erf"});
    if (xi_max == 0.0) return table;
    const int n = static_cast<int>(std::floor(xi_max / step + 1e-9));
    for (int i = 0; i <= n; ++i) {
        const double xi = i * step;
        table.add_row({xi, lambda0(xi), slit_probability(xi), trace_bound(xi), hs_bound(xi), erf_envelope(xi)});
    }
    return table;
}

int run_fig1(const Fig1Args& a) {
    if (!(a.step > 0.0)) throw ArgumentError("--step must be positive");
    if (!(a.xi_max >= 0.0 && a.xi_max <= 10.0)) throw ArgumentError("--xi-max must lie in [0, 10]");
    const TableFormat format = parse_table_format(a.format);
    write_text(a.output, fig1_table(a.xi_max, a.step).render(format));
    return 0;
}

struct ProbArgs {
    std::string path;
    double dq = 0.0, dk = 0.0, q = 0.0, k = 0.0;
    double h = kDefaultAction;
    bool reversed = false;
};

int run_prob(const ProbArgs& a) {
    const PrecisionPair precision(a.dq, a.dk, a.h);
    const StateGrid state = read_state_file(a.path);
    const Window wq(a.q, a.dq), wk(a.k, a.dk);
    const double p = a.reversed ? reversed_order_probability(state, wk, wq, a.h)
                                : conditional_probability(state, wq, wk, a.h);
    const double xi = precision.xi();
    const double bound = lambda0(xi);
    std::cout << "order: " << (a.reversed ? "momentum-then-position" : "position-then-momentum") << "\n";
    std::cout << "probability: " << fmt(p, 15) << "\n";
    std::cout << "xi: " << fmt(xi, 15) << "\n";
    std::cout << "lambda0: " << fmt(bound, 15) << "\n";
    std::cout << "margin: " << fmt(bound - p, 6) << "\n";
    return 0;
}

struct EmitArgs {
    double xi = 0.0;
    OptimalStateOptions grid;
    std::string output = "-";
};

int run_emit(const EmitArgs& a) {
    write_state_file(a.output, optimal_state(a.xi, a.grid));
    return 0;
}

struct DelayArgs {
    double mass = 0.0, t = 0.0, dq = 0.0, dq2 = 0.0;
    double h = kDefaultAction;
};

int run_timedelay(const DelayArgs& a) {
    const double xi = time_delay_xi(a.mass, a.t, a.dq, a.dq2, a.h);
    std::cout << "xi_tilde: " << fmt(xi, 15) << "\n";
    std::cout << "lambda0: " << fmt(lambda0(xi), 15) << "\n";
    if (xi < kDisturbanceXi)
        std::cerr << "warning: xi_tilde << 1; the delay is long enough that the measurement device causes an "
                     "essential disturbance of the result\n";
    return 0;
}

int run_bounds(double xi) {
    const BoundReport r = bound_report(xi);
    std::cout << "xi: " << fmt(r.xi) << "\n";
    std::cout << "lambda0: " << fmt(r.lambda0, 15) << "\n";
    std::cout << "trace_bound: " << fmt(std::min(1.0, r.trace_bound), 15) << "\n";
    std::cout << "hs_bound: " << fmt(std::min(1.0, r.hs_bound), 15) << "\n";
    std::cout << "small_xi: " << (r.small_xi ? fmt(*r.small_xi, 15) : std::string("n/a")) << "\n";
    std::cout << "large_xi: " << (r.large_xi ? fmt(*r.large_xi, 15) : std::string("n/a")) << "\n";
    std::cout << "erf_envelope: " << fmt(r.erf_envelope, 15) << "\n";
    std::cout << "slit_probability: " << fmt(slit_probability(xi), 15) << "\n";
    return 0;
}

struct OracleArgs {
    double xi = 1.0;
    int grid = 2048;
    int trials = 1000;
    std::uint64_t seed = kDefaultOracleSeed;
};

int run_oracle_cmd(const OracleArgs& a) {
    const OracleReport r = run_oracle(a.xi, a.grid, a.trials, a.seed);
    const double nystrom = lambda0(a.xi);
    std::cout << "xi: " << fmt(r.xi) << "\n";
    std::cout << "power_iteration_lambda: " << fmt(r.power_iteration_lambda, 15) << "\n";
    std::cout << "iterations: " << r.iterations << "\n";
    std::cout << "random_scan_max: " << fmt(r.random_scan_max, 15) << "\n";
    std::cout << "trials: " << r.trials << "\n";
    std::cout << "seed: " << r.seed << "\n";
    std::cout << "nystrom_lambda0: " << fmt(nystrom, 15) << "\n";
    std::cout << "difference: " << fmt(r.power_iteration_lambda - nystrom, 3) << "\n";
    return 0;
}

int run_tail(double cutoff, double step) {
    const TailIntegral t = tail_integral(cutoff, step);
    std::cout << "integral: " << fmt(t.value, 12) << "\n";
    std::cout << "error_estimate: " << fmt(t.error_estimate, 3) << "\n";
    std::cout << "head: " << fmt(t.head, 15) << "\n";
    std::cout << "tail: " << fmt(t.tail, 6) << "\n";
    std::cout << "intervals: " << t.intervals << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Least upper bounds for successive position and momentum measurements"};
    app.require_subcommand(1);
    // --h is the action constant, so help is --help only
    app.set_help_flag("--help", "Print this help message and exit");

    Lambda0Args l0;
    auto* c_l0 = app.add_subcommand("lambda0", "largest eigenvalue of the sinc-kernel operator");
    c_l0->add_option("--xi", l0.xi, "dimensionless precision product dk dq / h")->required();
    c_l0->add_option("--order", l0.order, "fixed quadrature order (disables convergence doubling)");
    c_l0->add_option("--tol", l0.tolerance, "convergence tolerance on lambda0");
    c_l0->add_option("--count", l0.count, "number of eigenvalues to list")->check(CLI::PositiveNumber);
    c_l0->add_flag("--json", l0.json, "emit JSON");

    Fig1Args f1;
    auto* c_f1 = app.add_subcommand("fig1", "table of lambda0, slit curve, trace, HS and erf envelope");
    c_f1->add_option("--xi-max", f1.xi_max, "upper end of the xi range (<= 10)");
    c_f1->add_option("--step", f1.step, "xi step");
    c_f1->add_option("--output,-o", f1.output, "output path, - for stdout");
    c_f1->add_option("--format", f1.format, "csv or json");

    ProbArgs pr;
    auto* c_pr = app.add_subcommand("prob", "conditional probability for a state file");
    c_pr->add_option("state", pr.path, "state file")->required();
    c_pr->add_option("--dq", pr.dq, "position window width")->required();
    c_pr->add_option("--dk", pr.dk, "momentum window width")->required();
    c_pr->add_option("--q", pr.q, "position window center");
    c_pr->add_option("--k", pr.k, "momentum window center");
    c_pr->set_help_flag("--help", "Print this help message and exit");
    c_pr->add_option("--h", pr.h, "action constant (default 2 pi, hbar = 1)");
    c_pr->add_flag("--reversed", pr.reversed, "momentum selection first, then position");

    EmitArgs em;
    auto* c_em = app.add_subcommand("emit-optimal", "write the lambda0-attaining state as a state file");
    c_em->add_option("--xi", em.xi, "dimensionless precision product")->required();
    c_em->add_option("--samples", em.grid.samples, "grid samples");
    c_em->add_option("--q", em.grid.center, "window center");
    c_em->add_option("--dq", em.grid.width, "window width");
    c_em->add_option("--padding", em.grid.padding, "relative grid padding beyond the window");
    c_em->add_option("--output,-o", em.output, "output path, - for stdout");

    DelayArgs td;
    auto* c_td = app.add_subcommand("timedelay", "xi for two position measurements separated by a delay");
    c_td->add_option("--mass", td.mass, "particle mass")->required();
    c_td->add_option("--t", td.t, "delay between the measurements")->required();
    c_td->add_option("--dq", td.dq, "first position precision")->required();
    c_td->add_option("--dq2", td.dq2, "second position precision")->required();
    c_td->set_help_flag("--help", "Print this help message and exit");
    c_td->add_option("--h", td.h, "action constant (default 2 pi)");

    double bounds_xi = 0.0;
    auto* c_bd = app.add_subcommand("bounds", "all closed-form and asymptotic bounds at one xi");
    c_bd->add_option("--xi", bounds_xi, "dimensionless precision product")->required();

    OracleArgs orc;
    auto* c_or = app.add_subcommand("oracle", "power iteration and random-state scan on a trapezoid grid");
    c_or->add_option("--xi", orc.xi, "dimensionless precision product");
    c_or->add_option("--grid", orc.grid, "uniform grid size (>= 128)");
    c_or->add_option("--trials", orc.trials, "random states (>= 100)");
    c_or->add_option("--seed", orc.seed, "random seed");

    double tail_cutoff = 8.0, tail_step = 0.02;
    auto* c_tl = app.add_subcommand("tail", "integral of 1 - lambda0 over [0, inf)");
    c_tl->add_option("--cutoff", tail_cutoff, "numerical range upper end (>= 6)");
    c_tl->add_option("--step", tail_step, "grid step (<= 0.05)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*c_l0) return run_lambda0(l0);
        if (*c_f1) return run_fig1(f1);
        if (*c_pr) return run_prob(pr);
        if (*c_em) return run_emit(em);
        if (*c_td) return run_timedelay(td);
        if (*c_bd) return run_bounds(bounds_xi);
        if (*c_or) return run_oracle_cmd(orc);
        if (*c_tl) return run_tail(tail_cutoff, tail_step);
    } catch (const ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        if (!e.diagnostics().empty()) std::cerr << "  " << e.diagnostics() << "\n";
        return kExitNumeric;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
