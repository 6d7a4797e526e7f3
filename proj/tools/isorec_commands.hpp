#ifndef ISOREC_TOOLS_COMMANDS_HPP
#define ISOREC_TOOLS_COMMANDS_HPP

// Subcommand implementations. Each returns a JSON payload, the text
// rendering and an exit code; argument parsing lives in isorec.cpp.

#include "isorec/isorec.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace isorec::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, domain_error = 3 };

struct CommandResult {
    Json payload;
    std::string text;
    int exit_code = ok;
};

inline std::vector<i64> parse_int_list(const std::string& s) {
    std::vector<i64> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

/// "lo..hi" or a single number.
inline std::pair<u64, u64> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const u64 v = std::stoull(s);
        return {v, v};
    }
    const u64 lo = std::stoull(s.substr(0, dots)), hi = std::stoull(s.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range " + s);
    return {lo, hi};
}

inline std::string join(const std::vector<BigInt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s;
}

// poly ----------------------------------------------------------------------

struct PolyArgs {
    std::string kind; // gfp | glp | wip | schur
    int k = 1;
    long n = 0;
    std::string omega = {};
    std::string shape = {};
};

inline CommandResult cmd_poly(const PolyArgs& a) {
    IsobaricPolynomial poly(a.k, 0);
    if (a.kind == "gfp") {
        poly = gfp(a.k, a.n);
    } else if (a.kind == "glp") {
        poly = glp(a.k, a.n);
    } else if (a.kind == "wip") {
        if (a.omega.empty()) throw std::invalid_argument("wip needs --omega");
        poly = wip(parse_int_list(a.omega), a.k, a.n);
    } else if (a.kind == "schur") {
        if (a.shape.empty()) throw std::invalid_argument("schur needs --shape");
        std::vector<long> parts;
        for (i64 v : parse_int_list(a.shape)) parts.push_back(static_cast<long>(v));
        poly = schur_via_jacobi_trudi(PartitionShape(parts), a.k);
    } else {
        throw std::invalid_argument("unknown polynomial kind: " + a.kind);
    }
    Json payload = to_json(poly);
    payload["kind"] = a.kind;
    payload["text"] = poly.to_string();
    return {payload, poly.to_string()};
}

// seq -----------------------------------------------------------------------

struct SeqArgs {
    std::string core;
    std::optional<i64> lo = {}, hi = {};
    std::optional<u64> p = {};
    bool traces = false;
};

inline CommandResult cmd_seq(const SeqArgs& a) {
    const auto core = CorePolynomial::parse(a.core);
    const i64 lo = a.lo.value_or(a.traces ? 1 : 0);
    const i64 hi = a.hi.value_or(lo + 14);
    std::vector<std::string> terms;
    auto keep = [&](const auto& values) {
        using isorec::to_string;
        using std::to_string;
        for (const auto& v : values) terms.push_back(to_string(v));
    };
    if (!a.traces) keep(generate(core, lo, hi, a.p));
    else if (a.p) keep(trace_sequence(core, lo, hi, PrimeField(*a.p)));
    else if (lo < 0 && std::abs(core.last()) != 1) keep(trace_sequence(core, lo, hi, RationalField{}));
    else keep(trace_sequence(core, lo, hi, IntegerRing{}));
    Json payload{{"core", core.coefficients()}, {"lo", lo}, {"hi", hi}, {"series", a.traces ? "traces" : "terms"}, {"values", terms}};
    if (a.p) payload["p"] = *a.p;
    std::string text;
    for (std::size_t i = 0; i < terms.size(); ++i) text += (i ? "," : "") + terms[i];
    return {payload, text};
}

// period --------------------------------------------------------------------

struct PeriodArgs {
    std::string core;
    std::optional<u64> p = {};
    bool integers = false;
};

inline CommandResult cmd_period(const PeriodArgs& a) {
    const auto core = CorePolynomial::parse(a.core);
    if (a.integers == a.p.has_value()) throw std::invalid_argument("period needs exactly one of -p or --integers");
    if (a.integers) {
        const auto v = is_periodic_over_Z(core);
        std::string text;
        switch (v.kind) {
        case PeriodKind::pure: text = "periodic over Z, period " + std::to_string(v.period); break;
        case PeriodKind::eventually_periodic:
            text = "eventually periodic over Z, period " + std::to_string(v.period) + " after " + std::to_string(v.preperiod) + " terms";
            break;
        case PeriodKind::not_periodic: text = "not periodic over Z"; break;
        }
        return {{{"core", core.coefficients()}, {"domain", "Z"}, {"verdict", to_json(v)}}, text + " (" + v.witness + ")"};
    }
    const u64 p = *a.p;
    require_prime(p);
    const auto brute = period_mod_p_bruteforce(core, p);
    Json payload{{"core", core.coefficients()}, {"p", p}, {"bruteforce", to_json(brute)}};
    std::string text = "c_" + std::to_string(p) + " = " + std::to_string(brute.period);
    int code = ok;
    if (brute.kind == PeriodKind::pure) {
        const u64 order = period_mod_p_matrix_order(core, p);
        payload["matrix_order"] = order;
        payload["c_p"] = order;
        text += " (pure)";
        if (order != brute.period) {
            text += "; matrix order " + std::to_string(order) + " disagrees";
            code = check_failed;
        }
    } else {
        payload["c_p"] = brute.period;
        payload["degenerate"] = true;
        text += " (" + to_string(brute.kind) + ", preperiod " + std::to_string(brute.preperiod) + "; p divides t_k)";
    }
    return {payload, text, code};
}

// scan ----------------------------------------------------------------------

struct ScanArgs {
    std::string core;
    std::string primes = "2..50";
};

inline CommandResult cmd_scan(const ScanArgs& a) {
    const auto core = CorePolynomial::parse(a.core);
    const auto [lo, hi] = parse_range(a.primes);
    const auto primes = primes_in_range(lo, hi);
    if (primes.empty()) throw std::invalid_argument("no primes in " + a.primes);
    const auto rows = period_scan(core, primes);
    Json jr = Json::array();
    std::ostringstream out;
    out << "core " << core.to_string() << ", disc " << to_string(discriminant(core)) << "\n";
    out << "    p        c_p  p|c_p  ramified  agree\n";
    int code = ok;
    for (const auto& r : rows) {
        jr.push_back(to_json(r));
        char line[128];
        std::snprintf(line, sizeof line, "%5llu %10llu  %-5s  %-8s  %s\n", static_cast<unsigned long long>(r.p),
                      static_cast<unsigned long long>(r.c_p), r.p_divides_c ? "yes" : "no", r.ramified ? "yes" : "no",
                      r.degenerate ? "degenerate" : (r.ramification_consistent && r.algorithms_agree) ? "yes" : "NO");
        out << line;
        if (!r.ramification_consistent || !r.algorithms_agree) code = check_failed;
    }
    std::string text = out.str();
    text.pop_back();
    return {{{"core", core.coefficients()}, {"discriminant", to_string(discriminant(core))}, {"rows", jr}}, text, code};
}

// ring ----------------------------------------------------------------------

struct RingArgs {
    std::string core;
    u64 p = 0;
    bool orbits = false;
    u64 budget = default_enumeration_budget;
};

inline CommandResult cmd_ring(const RingArgs& a) {
    const auto core = CorePolynomial::parse(a.core);
    const auto st = decompose(core, a.p);
    Json payload = to_json(st);
    std::ostringstream out;
    out << "R_" << a.p << " = F_" << a.p << "[x]/(" << PolyFp::from(core_to_poly(core), a.p).to_string() << ")\n";
    out << "  factors:";
    for (const auto& lf : st.factors) {
        out << " (" << lf.f.to_string() << ")";
        if (lf.e > 1) out << "^" << lf.e;
    }
    out << "\n  classification: " << to_string(st.classification) << ", s = " << st.s << "\n";
    out << "  |R| = " << st.ring_order << ", |J| = " << st.radical_order << ", |G| = " << st.unit_group_order << "\n";
    if (st.period) {
        out << "  c = |H| = " << *st.period << ", [G:H] = " << *st.unit_index << ", lcm of factor periods = " << *st.lcm_factor_periods << "\n";
        out << "  p | c <=> ramified: " << (*st.ramification_consistent ? "consistent" : "INCONSISTENT") << "\n";
        out << "  c = lcm * |J|: " << (*st.radical_period_law_holds ? "holds" : "fails") << "\n";
    } else {
        out << "  p divides t_k: lambda is not a unit, no period\n";
    }
    out << "  idempotents (" << st.idempotents.size() << "):";
    for (std::size_t i = 0; i < st.idempotents.size(); ++i) out << " " << st.idempotents[i].to_string() << " rank " << st.ranks[i] << (i + 1 < st.idempotents.size() ? "," : "");
    if (a.orbits) {
        try {
            const auto part = orbit_partition(core, a.p, a.budget);
            payload["orbit_partition"] = to_json(part);
            out << "\n  orbits (" << part.orbits.size() << "):";
            for (const auto& o : part.orbits)
                out << "\n    " << RingElement(core, a.p, o.representative).to_string() << " length " << o.length << " " << to_string(o.kind);
            for (const auto& v : part.violations) out << "\n  VIOLATION: " << v;
        } catch (const budget_exceeded& e) {
            payload["orbit_partition"] = nullptr;
            payload["orbit_partition_skipped"] = e.what();
            out << "\n  orbits skipped: " << e.what();
        }
    }
    return {payload, out.str()};
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    SweepParams params = {};
};

inline CommandResult cmd_verify(const VerifyArgs& a) {
    const auto r = run_suite(a.suite, a.params);
    std::ostringstream out;
    out << (r.passed() ? "PASS" : "FAIL") << " (" << r.checked << " cases checked, " << r.failures.size() << " failures)";
    for (const auto& f : r.failures) out << "\n  failure: " << f;
    if (!r.reports.empty()) {
        out << "\nreports (not asserted): " << r.reports.size();
        for (const auto& rep : r.reports) out << "\n  " << rep;
    }
    for (const auto& [key, v] : r.counts) out << "\n  " << key << " = " << v;
    Json counts = Json::object();
    for (const auto& [key, v] : r.counts) counts[key] = v;
    Json payload{{"suite", a.suite},
                 {"params", {{"k_max", a.params.k_max}, {"t_range", a.params.t_range}, {"p_max", a.params.p_max}, {"seed", a.params.seed}, {"ring_cap", a.params.ring_cap}, {"samples", a.params.samples}}},
                 {"passed", r.passed()},
                 {"checked", r.checked},
                 {"failures", r.failures},
                 {"reports", r.reports},
                 {"counts", counts}};
    return {payload, out.str(), r.passed() ? ok : check_failed};
}

// factor / disc -------------------------------------------------------------

struct FactorArgs {
    std::string core;
    u64 p = 0;
    u64 seed = 0x5eed;
};

inline CommandResult cmd_factor(const FactorArgs& a) {
    const auto core = CorePolynomial::parse(a.core);
    const auto c = PolyFp::from(core_to_poly(core), require_prime(a.p));
    const auto fac = factor_mod_p(c, a.seed);
    std::string text = c.to_string() + " =";
    for (const auto& [f, e] : fac.factors) text += " (" + f.to_string() + ")" + (e > 1 ? "^" + std::to_string(e) : "");
    text += " mod " + std::to_string(a.p);
    Json payload = to_json(fac);
    payload["core"] = core.coefficients();
    payload["squarefree"] = fac.squarefree();
    return {payload, text};
}

struct DiscArgs {
    std::string core;
};

inline CommandResult cmd_disc(const DiscArgs& a) {
    const auto core = CorePolynomial::parse(a.core);
    const auto d = discriminant(core);
    std::vector<BigInt> diff = different_element(core);
    Json payload{{"core", core.coefficients()},
                 {"polynomial", core_to_poly(core).to_string()},
                 {"discriminant", to_string(d)},
                 {"different", Json::array()}};
    for (const auto& v : diff) payload["different"].push_back(to_string(v));
    std::string text = "disc(" + core_to_poly(core).to_string() + ") = " + to_string(d) + "\ndifferent C'(lambda) = (" + join(diff) + ")";
    const BigInt ad = abs(d);
    if (d != 0 && ad <= BigInt(1'000'000'000'000ULL)) {
        Json ram = Json::array();
        std::string list;
        for (auto [q, e] : factor_u64(static_cast<u64>(ad))) {
            ram.push_back(q);
            list += (list.empty() ? "" : ", ") + std::to_string(q);
        }
        payload["ramified_primes"] = ram;
        text += "\nramified primes: " + (list.empty() ? std::string("none") : list);
    }
    return {payload, text};
}

/// Wraps a payload with the invocation, version and timing.
inline Json envelope(const std::string& command, const Json& payload, double seconds) {
    return {{"command", command}, {"version", version}, {"timing", {{"seconds", seconds}}}, {"payload", payload}};
}

} // namespace isorec::cli

#endif // ISOREC_TOOLS_COMMANDS_HPP
