// isorec: command-line front end.

#include "isorec_commands.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>

using namespace isorec;
using namespace isorec::cli;

int main(int argc, char** argv) {
    CLI::App app{"Periods of linear recursions, isobaric polynomials and the rings F_p[x]/(C)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(isorec::version));

    bool json = false;
    u64 seed = 0x5eed;
    u64 budget = default_enumeration_budget;
    app.add_flag("--json", json, "Print a JSON report instead of text");
    app.add_option("--seed", seed, "Seed for randomized algorithms and sampling");
    app.add_option("--budget", budget, "Largest ring enumerated element by element");

    PolyArgs poly;
    auto* c_poly = app.add_subcommand("poly", "Print an isobaric polynomial");
    c_poly->add_option("kind", poly.kind, "gfp, glp, wip or schur")->required()->check(CLI::IsMember({"gfp", "glp", "wip", "schur"}));
    c_poly->add_option("-k", poly.k, "Number of variables")->required()->check(CLI::PositiveNumber);
    c_poly->add_option("-n", poly.n, "Isobaric degree")->check(CLI::NonNegativeNumber);
    c_poly->add_option("--omega", poly.omega, "Weights w1,...,wk for wip");
    c_poly->add_option("--shape", poly.shape, "Partition for schur, e.g. 3,1,1");

    SeqArgs seq;
    std::optional<u64> seq_p;
    auto* c_seq = app.add_subcommand("seq", "Terms (or traces) of the recursion");
    c_seq->add_option("core", seq.core, "Core polynomial, e.g. [1,1]")->required();
    c_seq->add_option("--lo", seq.lo, "First index");
    c_seq->add_option("--hi", seq.hi, "Last index");
    c_seq->add_option("-p,--prime", seq.p, "Reduce modulo a prime");
    c_seq->add_flag("--traces", seq.traces, "Traces of A^n instead of terms");

    PeriodArgs period;
    auto* c_period = app.add_subcommand("period", "Period modulo p or over the integers");
    c_period->add_option("core", period.core)->required();
    auto* period_p = c_period->add_option("-p,--prime", period.p, "Prime modulus");
    c_period->add_flag("--integers", period.integers, "Periodicity over Z")->excludes(period_p);

    ScanArgs scan;
    auto* c_scan = app.add_subcommand("scan", "Period and ramification for a range of primes");
    c_scan->add_option("core", scan.core)->required();
    c_scan->add_option("--primes", scan.primes, "Prime range lo..hi")->capture_default_str();

    RingArgs ring;
    auto* c_ring = app.add_subcommand("ring", "Structure of F_p[x]/(C)");
    c_ring->add_option("core", ring.core)->required();
    c_ring->add_option("-p,--prime", ring.p, "Prime modulus")->required();
    c_ring->add_flag("--orbits", ring.orbits, "Include the orbit partition under multiplication by lambda");

    VerifyArgs verify;
    auto* c_verify = app.add_subcommand("verify", "Run a property sweep");
    c_verify->add_option("suite", verify.suite, "Suite name")->capture_default_str()->check(CLI::IsMember(suite_names()));
    c_verify->add_option("--k-max", verify.params.k_max, "Largest k")->capture_default_str();
    c_verify->add_option("--t-range", verify.params.t_range, "Coefficients range over [-t, t]")->capture_default_str();
    c_verify->add_option("--p-max", verify.params.p_max, "Largest prime")->capture_default_str();
    c_verify->add_option("--ring-cap", verify.params.ring_cap, "Largest p^k for orbit and trace sweeps")->capture_default_str();
    c_verify->add_option("--samples", verify.params.samples, "Random samples for the schur suite")->capture_default_str();

    FactorArgs factor;
    auto* c_factor = app.add_subcommand("factor", "Factor C modulo p");
    c_factor->add_option("core", factor.core)->required();
    c_factor->add_option("-p,--prime", factor.p, "Prime modulus")->required();

    DiscArgs disc;
    auto* c_disc = app.add_subcommand("disc", "Discriminant and different of C");
    c_disc->add_option("core", disc.core)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : usage_error;
    }

    std::string command;
    for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

    const auto start = std::chrono::steady_clock::now();
    CommandResult result;
    try {
        if (*c_poly) result = cmd_poly(poly);
        else if (*c_seq) result = cmd_seq(seq);
        else if (*c_period) result = cmd_period(period);
        else if (*c_scan) result = cmd_scan(scan);
        else if (*c_ring) {
            ring.budget = budget;
            result = cmd_ring(ring);
        } else if (*c_verify) {
            verify.params.seed = seed;
            verify.params.budget = budget;
            result = cmd_verify(verify);
        } else if (*c_factor) {
            factor.seed = seed;
            result = cmd_factor(factor);
        } else if (*c_disc) result = cmd_disc(disc);
    } catch (const not_invertible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain_error;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return domain_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (json) std::cout << envelope(command, result.payload, seconds).dump(2) << "\n";
    else std::cout << result.text << "\n";
    return result.exit_code;
}
