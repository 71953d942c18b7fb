// normff - exact arithmetic for the A^2 + T*B^2 norm form over F_q[T]:
// counting, constructive representation, prime statistics, and the
// verification suites behind the asymptotic reports.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "normff/verify.hpp"

using nlohmann::json;
using namespace normff;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotRepresentable = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerifyFail = 4;

struct Common {
    std::uint64_t q = 3;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10000000;
    unsigned precision = 50;
    unsigned threads = 1;
    std::string format = "csv";
    std::string modulus; // optional coefficient list over F_p
};

void add_common(CLI::App* cmd, Common& c, bool with_q = true) {
    if (with_q) cmd->add_option("--q", c.q, "field order, an odd prime power");
    cmd->add_option("--seed", c.seed, "seed for the deterministic factorization randomness");
    cmd->add_option("--budget", c.budget, "max enumeration size (env NORMFIELD_BUDGET)");
    cmd->add_option("--precision", c.precision, "working precision, decimal digits (>= 30)");
    cmd->add_option("--threads", c.threads, "worker threads for exhaustive enumeration");
    cmd->add_option("--format", c.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--modulus", c.modulus,
                    "extension-field modulus override, coefficients over F_p from degree 0");
}

const Field& field_for(const Common& c) {
    std::uint64_t p;
    unsigned k;
    if (!odd_prime_power(c.q, &p, &k))
        throw std::invalid_argument("q must be an odd prime power");
    if (c.modulus.empty()) return Field::make(p, k);
    std::vector<std::uint32_t> m;
    std::stringstream ss(c.modulus);
    std::string item;
    while (std::getline(ss, item, ',')) m.push_back(std::uint32_t(std::stoul(item)));
    return Field::make(p, k, m);
}

// NORMFIELD_BUDGET sets the default; an explicit --budget still wins.
void apply_env_budget(Common& c) {
    if (const char* env = std::getenv("NORMFIELD_BUDGET"))
        c.budget = std::strtoull(env, nullptr, 10);
}

json count_to_json(const CountReport& r) {
    json j{{"q", r.q.str()}, {"n", r.n}, {"method", r.method}, {"B", r.value.str()}};
    if (r.f_part_sizes) {
        json parts = json::array();
        for (const auto& p : *r.f_part_sizes) parts.push_back(p.str());
        j["f_part_sizes"] = parts;
    }
    return j;
}

int run_count(const Common& c, unsigned n, const std::string& method) {
    const Field& F = field_for(c);
    std::vector<CountReport> reports;
    if (method == "brute") {
        reports.push_back(brute_count(F, n, c.seed, c.threads, c.budget));
    } else if (method == "parts") {
        reports.push_back(count_parts(F, n, c.seed, c.threads, c.budget));
    } else {
        reports = series_count(Bigint(F.q()), n);
    }
    if (c.format == "json") {
        json j = json::array();
        for (const auto& r : reports) j.push_back(count_to_json(r));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << csv_count(reports);
    }
    return kExitOk;
}

int run_represent(const Common& c, const std::string& poly_text) {
    const Field& F = field_for(c);
    Poly f = Poly::parse(F, poly_text);
    if (f.is_zero() || !f.is_monic())
        throw std::invalid_argument("input polynomial must be monic");
    auto w = represent(f, c.seed);
    if (!w) {
        std::cout << json{{"representable", false}}.dump() << '\n';
        return kExitNotRepresentable;
    }
    json a = json::array(), b = json::array();
    for (auto v : w->A.coeffs()) a.push_back(v);
    for (auto v : w->B.coeffs()) b.push_back(v);
    if (a.empty()) a.push_back(0);
    if (b.empty()) b.push_back(0);
    std::cout << json{{"representable", true}, {"A", a}, {"B", b}}.dump() << '\n';
    return kExitOk;
}

int run_pi(const Common& c, unsigned d_max, const std::string& method) {
    PiTable table;
    table.q = c.q;
    if (method == "enum") {
        const Field& F = field_for(c);
        for (unsigned d = 1; d <= d_max; ++d) table.rows.push_back(pi_enum(F, d, c.budget));
    } else {
        if (!odd_prime_power(c.q)) throw std::invalid_argument("q must be an odd prime power");
        table = pi_exact(Bigint(c.q), d_max);
    }
    if (c.format == "json") {
        json rows = json::array();
        for (const auto& r : table.rows)
            rows.push_back({{"d", r.d}, {"pi_plus", r.plus.str()}, {"pi_minus", r.minus.str()}});
        std::cout << json{{"q", c.q}, {"rows", rows}}.dump() << '\n';
    } else {
        std::cout << csv_pi(table);
    }
    return kExitOk;
}

int run_constant(const Common& c, unsigned depth) {
    if (!odd_prime_power(c.q)) throw std::invalid_argument("q must be an odd prime power");
    Bigint q(c.q);
    if (depth == 0) depth = kq_default_depth(q);
    KqValue k = kq(q, depth);
    if (c.format == "json") {
        std::cout << json{{"q", c.q},
                          {"depth", k.depth},
                          {"value", format_real(k.value)},
                          {"tail_bound", format_real(k.tail_bound)}}
                         .dump()
                  << '\n';
    } else {
        std::cout << csv_constant(k);
    }
    return kExitOk;
}

int run_limits(const Common& c, unsigned n_max, std::uint64_t q_max) {
    std::vector<Bigint> qs;
    for (auto q : odd_prime_powers_upto(q_max)) qs.emplace_back(q);
    std::cout << csv_limits(iterated_limits_report(n_max, qs));
    return kExitOk;
}

int run_verify(const Common& c, const std::string& suite, unsigned deg_max, unsigned N,
               unsigned n_max, std::uint64_t q_max, const std::string& out_dir) {
    SuiteResult result;
    if (suite == "elementary") {
        result = verify_elementary(field_for(c), deg_max, c.seed, c.threads);
    } else if (suite == "identity") {
        result = verify_identity(Bigint(c.q), N);
    } else if (suite == "largeq") {
        result = verify_largeq(n_max ? std::min(n_max, 4u) : 4u, q_max);
    } else if (suite == "largen") {
        result = verify_largen(Bigint(c.q), n_max ? n_max : 200);
    } else {
        result = verify_limits(n_max ? n_max : 30, q_max);
    }
    for (const auto& [name, contents] : result.files) {
        std::filesystem::create_directories(out_dir);
        std::ofstream f(std::filesystem::path(out_dir) / name, std::ios::binary);
        f << contents;
    }
    for (const auto& check : result.checks)
        std::cout << (check.pass ? "PASS" : "FAIL") << ' ' << check.name << " (" << check.detail
                  << ")\n";
    return result.all_pass() ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"norm-form counting in F_q[T]"};
    app.require_subcommand(1);

    Common c;
    apply_env_budget(c);
    unsigned n = 0, d_max = 6, depth = 0, N = 50, deg_max = 4, n_max = 0;
    std::uint64_t q_max = 101;
    std::string method = "series", poly_text, suite, pi_method = "exact", out_dir = ".";

    auto* cmd_count = app.add_subcommand("count", "B_q(n) by one of three methods");
    add_common(cmd_count, c);
    cmd_count->add_option("--n", n, "degree")->required();
    cmd_count->add_option("--method", method, "brute | series | parts")
        ->check(CLI::IsMember({"brute", "series", "parts"}));

    auto* cmd_repr = app.add_subcommand("represent", "witness f = A^2 + T*B^2");
    add_common(cmd_repr, c);
    cmd_repr->add_option("--poly", poly_text, "coefficients from degree 0, comma-separated")
        ->required();

    auto* cmd_pi = app.add_subcommand("pi", "prime counts by Legendre class");
    add_common(cmd_pi, c);
    cmd_pi->add_option("--dmax", d_max, "max degree");
    cmd_pi->add_option("--method", pi_method, "exact | enum")
        ->check(CLI::IsMember({"exact", "enum"}));

    auto* cmd_const = app.add_subcommand("constant", "the constant K_q with tail bound");
    add_common(cmd_const, c);
    cmd_const->add_option("--depth", depth, "Euler-product truncation depth (0 = auto)");

    auto* cmd_limits = app.add_subcommand("limits", "iterated-limit sequences");
    add_common(cmd_limits, c, false);
    cmd_limits->add_option("--nmax", n_max, "n-sequence length")->default_val(30);
    cmd_limits->add_option("--qmax", q_max, "largest q in the q-sequence");

    auto* cmd_verify = app.add_subcommand("verify", "run an assertable suite");
    add_common(cmd_verify, c);
    cmd_verify
        ->add_option("--suite", suite, "elementary | largeq | largen | identity | limits")
        ->required()
        ->check(CLI::IsMember({"elementary", "largeq", "largen", "identity", "limits"}));
    cmd_verify->add_option("--degmax", deg_max, "elementary: max degree");
    cmd_verify->add_option("--N", N, "identity: truncation degree");
    cmd_verify->add_option("--nmax", n_max, "largen/largeq/limits: max n");
    cmd_verify->add_option("--qmax", q_max, "largeq/limits: largest q");
    cmd_verify->add_option("--out", out_dir, "directory for report CSVs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return kExitBadInput;
    }

    try {
        set_working_precision(c.precision);
        if (app.got_subcommand(cmd_count)) return run_count(c, n, method);
        if (app.got_subcommand(cmd_repr)) return run_represent(c, poly_text);
        if (app.got_subcommand(cmd_pi)) return run_pi(c, d_max, pi_method);
        if (app.got_subcommand(cmd_const)) return run_constant(c, depth);
        if (app.got_subcommand(cmd_limits)) return run_limits(c, n_max, q_max);
        return run_verify(c, suite, deg_max, N, n_max, q_max, out_dir);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}
