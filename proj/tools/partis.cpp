// partis — exact stake-division calculator for interrupted games.
//
// Subcommands: solve (the four 1654 division methods), triangle (Pascal's
// arithmetic triangle), value-first (the first-game advantage formulas),
// dice (the renouncement problem of the undated letter), simulate (seeded
// Monte Carlo check of the exact solvers). Every subcommand takes
// --format text|json; all fractions are printed exactly, decimals are
// display-only approximations.
//
// Exit codes: 0 success (simulate: gate passed), 2 usage or domain error,
// 3 enumeration cap exceeded, 4 simulation gate failed.

#include "CLI11.hpp"
#include "json.hpp"

#include "partis/expectation.hpp"
#include "partis/game.hpp"
#include "partis/rational.hpp"
#include "partis/simulate.hpp"
#include "partis/solver.hpp"
#include "partis/triangle.hpp"

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace partis;

constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitGate = 4;

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ", ";
        out += parts[i];
    }
    return out;
}

std::vector<std::string> fraction_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Rational& v : values) out.push_back(v.to_string());
    return out;
}

std::vector<std::string> decimal_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const Rational& v : values) out.push_back(v.to_decimal_string());
    return out;
}

std::string three_digits(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

std::string missing_list(const std::vector<unsigned>& missing) {
    std::string out;
    for (std::size_t i = 0; i < missing.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(missing[i]);
    }
    return out;
}

void emit(const json& envelope, const std::string& format,
          const std::string& text) {
    if (format == "json") {
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

struct SolveArgs {
    std::vector<unsigned> missing;
    std::string method = "recursive";
    std::string stake;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::string format = "text";
};

int run_solve(const SolveArgs& args) {
    GameState state(args.missing);
    bool two_players = state.players() == 2;
    if (args.method == "triangle" && !two_players) {
        std::cerr << "error: the triangle method divides a two-player stake; "
                     "got " << state.players() << " players\n";
        return kExitUsage;
    }

    auto run_method = [&](const std::string& name) -> Division {
        if (name == "recursive") return solve_recursive(state);
        if (name == "feigned") return solve_feigned(state, args.cap);
        if (name == "exact-length") return solve_exact_length(state, args.cap);
        return base_partition(args.missing[0], args.missing[1]);
    };

    std::vector<std::string> method_names;
    if (args.method == "all") {
        method_names = {"recursive", "feigned", "exact-length"};
        if (two_players) method_names.push_back("triangle");
    } else {
        method_names = {args.method};
    }

    std::map<std::string, Division> by_method;
    for (const std::string& name : method_names) {
        by_method.emplace(name, run_method(name));
    }
    const Division& division = by_method.at(method_names.front());
    bool agreement = true;
    for (const std::string& name : method_names) {
        if (!(by_method.at(name) == division)) agreement = false;
    }

    json envelope;
    envelope["command"] = "solve";
    envelope["inputs"] = {{"missing", args.missing},
                          {"method", args.method},
                          {"cap", args.cap}};
    if (!args.stake.empty()) envelope["inputs"]["stake"] = args.stake;

    std::string text = "state: missing " + missing_list(args.missing) + "\n";
    json results;
    if (args.method == "all") {
        json methods;
        for (const std::string& name : method_names) {
            methods[name] = fraction_strings(by_method.at(name).shares);
            text += "method " + name + ": " +
                    join(fraction_strings(by_method.at(name).shares)) + "\n";
        }
        results["methods"] = std::move(methods);
        text += std::string("methods agree: ") + (agreement ? "yes" : "no") +
                "\n";
    } else {
        text += "method: " + args.method + "\n";
    }
    results["shares"] = fraction_strings(division.shares);
    results["decimal_approx"] = decimal_strings(division.shares);
    text += "shares: " + join(fraction_strings(division.shares)) + "\n";
    text += "approx: " + join(decimal_strings(division.shares)) + "\n";
    if (!args.stake.empty()) {
        Rational stake = Rational::from_string(args.stake);
        std::vector<Rational> amounts = division.amounts(stake);
        results["amounts"] = fraction_strings(amounts);
        text += "amounts (stake " + stake.to_string() + "): " +
                join(fraction_strings(amounts)) + "\n";
    }
    envelope["results"] = std::move(results);
    if (args.method == "all") envelope["method_agreement"] = agreement;

    emit(envelope, args.format, text);
    return 0;
}

struct TriangleArgs {
    unsigned rows = 0;
    std::string format = "text";
};

constexpr unsigned kTriangleDisplayCap = 64;

int run_triangle(const TriangleArgs& args) {
    if (args.rows < 1 || args.rows > kTriangleDisplayCap) {
        std::cerr << "error: --rows must lie in 1.." << kTriangleDisplayCap
                  << "\n";
        return kExitUsage;
    }
    Triangle triangle = build_triangle(args.rows);

    json envelope;
    envelope["command"] = "triangle";
    envelope["inputs"] = {{"rows", args.rows}};
    json bases = json::array();
    for (unsigned b = 1; b <= args.rows; ++b) {
        json base = json::array();
        for (const BigInt& v : triangle.base(b)) {
            base.push_back(v.convert_to<std::uint64_t>());
        }
        bases.push_back(std::move(base));
    }
    envelope["results"] = {{"bases", std::move(bases)}};

    emit(envelope, args.format, triangle.render());
    return 0;
}

struct ValueFirstArgs {
    unsigned n = 0;
    std::string format = "text";
};

int run_value_first(const ValueFirstArgs& args) {
    AdvantageCoefficient product = first_game_value_product(args.n);
    AdvantageCoefficient binomial = first_game_value_binomial(args.n);
    bool equal = product == binomial;
    Rational p = advantage_to_probability(product);

    json envelope;
    envelope["command"] = "value-first";
    envelope["inputs"] = {{"n", args.n}};
    envelope["results"] = {{"p_prime_product", product.value.to_string()},
                           {"p_prime_binomial", binomial.value.to_string()},
                           {"forms_equal", equal},
                           {"p", p.to_string()},
                           {"p_decimal_approx", p.to_decimal_string()}};

    std::string text = "match to: " + std::to_string(args.n) + " wins\n";
    text += "p' (product form): " + product.value.to_string() + "\n";
    text += "p' (binomial form): " + binomial.value.to_string() + "\n";
    text += std::string("forms equal: ") + (equal ? "yes" : "no") + "\n";
    text += "p (leader probability after one win): " + p.to_string() + "\n";
    text += "approx: " + p.to_decimal_string() + "\n";

    emit(envelope, args.format, text);
    return 0;
}

struct DiceArgs {
    unsigned throw_number = 0;
    unsigned throws_total = 8;
    unsigned faces = 6;
    unsigned favorable = 1;
    std::string mode = "unconditional";
    std::string stake = "1";
    std::string format = "text";
};

int run_dice(const DiceArgs& args) {
    DiceGame game{args.faces, args.favorable, args.throws_total,
                  Rational::from_string(args.stake)};
    Rational value = args.mode == "conditional"
                         ? renounce_value_conditional(game)
                         : renounce_value_unconditional(game,
                                                        args.throw_number);
    Rational win = win_probability(game);

    json envelope;
    envelope["command"] = "dice";
    envelope["inputs"] = {{"throw", args.throw_number},
                          {"throws_total", args.throws_total},
                          {"faces", args.faces},
                          {"favorable", args.favorable},
                          {"mode", args.mode},
                          {"stake", args.stake}};
    envelope["results"] = {
        {"renounce_value", value.to_string()},
        {"renounce_value_decimal_approx", value.to_decimal_string()},
        {"win_probability", win.to_string()},
        {"win_probability_decimal_approx", win.to_decimal_string()}};

    std::string text = "die: " + std::to_string(args.faces) + " faces, " +
                       std::to_string(args.favorable) + " favorable; " +
                       std::to_string(args.throws_total) + " throws; stake " +
                       game.stake.to_string() + "\n";
    text += "mode: " + args.mode + "\n";
    text += "value of renouncing throw " + std::to_string(args.throw_number) +
            ": " + value.to_string() + "\n";
    text += "approx: " + value.to_decimal_string() + "\n";
    text += "win probability (whole wager): " + win.to_string() + "\n";
    text += "approx: " + win.to_decimal_string() + "\n";

    emit(envelope, args.format, text);
    return 0;
}

struct SimulateArgs {
    std::vector<unsigned> missing;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 0;
    double sigma_gate = 4.0;
    std::string format = "text";
};

int run_simulate(const SimulateArgs& args) {
    GameState state(args.missing);
    SimReport report = estimate_division(state, args.trials, args.seed);
    Division exact = solve_recursive(state);
    CheckResult check = check_against(exact, report, args.sigma_gate);

    std::vector<std::string> sigmas;
    sigmas.reserve(check.sigma_distance.size());
    for (double s : check.sigma_distance) sigmas.push_back(three_digits(s));

    json envelope;
    envelope["command"] = "simulate";
    envelope["inputs"] = {{"missing", args.missing},
                          {"trials", args.trials},
                          {"seed", args.seed},
                          {"sigma_gate", args.sigma_gate}};
    envelope["results"] = {{"trials", report.trials},
                           {"wins", report.wins},
                           {"empirical", fraction_strings(report.empirical)},
                           {"exact", fraction_strings(exact.shares)},
                           {"sigma_distance", sigmas},
                           {"pass", check.pass}};

    std::string text = "state: missing " + missing_list(args.missing) + "\n";
    text += "trials: " + std::to_string(args.trials) + "\n";
    text += "seed: " + std::to_string(args.seed) + "\n";
    text += "exact: " + join(fraction_strings(exact.shares)) + "\n";
    std::string wins;
    for (std::size_t i = 0; i < report.wins.size(); ++i) {
        if (i > 0) wins += ", ";
        wins += std::to_string(report.wins[i]);
    }
    text += "wins: " + wins + "\n";
    text += "empirical: " + join(fraction_strings(report.empirical)) + "\n";
    text += "sigma distance: " + join(sigmas) + "\n";
    text += "sigma gate: " + three_digits(args.sigma_gate) + "\n";
    text += std::string("result: ") + (check.pass ? "PASS" : "FAIL") + "\n";

    emit(envelope, args.format, text);
    return check.pass ? 0 : kExitGate;
}

void add_format_option(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "partis — exact stake division for interrupted games, after the "
        "1654 Pascal–Fermat correspondence"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "Divide the stake of an interrupted match");
    solve_cmd
        ->add_option("--missing", solve_args.missing,
                     "Games each player still needs, comma separated")
        ->required()
        ->delimiter(',');
    solve_cmd
        ->add_option("--method", solve_args.method,
                     "recursive | feigned | exact-length | triangle | all")
        ->check(CLI::IsMember(
            {"recursive", "feigned", "exact-length", "triangle", "all"}))
        ->capture_default_str();
    solve_cmd->add_option("--stake", solve_args.stake,
                          "Total stake as an exact rational, e.g. 64 or 3/2");
    solve_cmd
        ->add_option("--cap", solve_args.cap,
                     "Enumeration cap for sequence-based methods")
        ->capture_default_str();
    add_format_option(solve_cmd, solve_args.format);

    TriangleArgs triangle_args;
    CLI::App* triangle_cmd =
        app.add_subcommand("triangle", "Print Pascal's arithmetic triangle");
    triangle_cmd
        ->add_option("--rows", triangle_args.rows,
                     "Number of bases to generate (max 64)")
        ->required();
    add_format_option(triangle_cmd, triangle_args.format);

    ValueFirstArgs value_first_args;
    CLI::App* value_first_cmd = app.add_subcommand(
        "value-first", "Value of winning the first game of a match to n");
    value_first_cmd->add_option("--n", value_first_args.n, "Wins needed (>= 2)")
        ->required();
    add_format_option(value_first_cmd, value_first_args.format);

    DiceArgs dice_args;
    CLI::App* dice_cmd = app.add_subcommand(
        "dice", "Value of renouncing one throw of the dice wager");
    dice_cmd->add_option("--throw", dice_args.throw_number,
                         "Which scheduled throw is renounced")
        ->required();
    dice_cmd
        ->add_option("--throws-total", dice_args.throws_total,
                     "Throws in the whole wager")
        ->capture_default_str();
    dice_cmd->add_option("--faces", dice_args.faces, "Die faces")
        ->capture_default_str();
    dice_cmd
        ->add_option("--favorable", dice_args.favorable,
                     "Winning faces per throw")
        ->capture_default_str();
    dice_cmd
        ->add_option("--mode", dice_args.mode,
                     "unconditional (priced up front) | conditional (prior "
                     "throws already lost)")
        ->check(CLI::IsMember({"unconditional", "conditional"}))
        ->capture_default_str();
    dice_cmd->add_option("--stake", dice_args.stake, "Stake as a rational")
        ->capture_default_str();
    add_format_option(dice_cmd, dice_args.format);

    SimulateArgs simulate_args;
    CLI::App* simulate_cmd = app.add_subcommand(
        "simulate", "Monte Carlo check of the exact division");
    simulate_cmd
        ->add_option("--missing", simulate_args.missing,
                     "Games each player still needs, comma separated")
        ->required()
        ->delimiter(',');
    simulate_cmd->add_option("--trials", simulate_args.trials, "Match count")
        ->capture_default_str();
    simulate_cmd
        ->add_option("--seed", simulate_args.seed,
                     "RNG seed (required: runs must be reproducible)")
        ->required();
    simulate_cmd
        ->add_option("--sigma-gate", simulate_args.sigma_gate,
                     "Pass threshold in binomial standard errors")
        ->capture_default_str();
    add_format_option(simulate_cmd, simulate_args.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_args);
        if (triangle_cmd->parsed()) return run_triangle(triangle_args);
        if (value_first_cmd->parsed()) return run_value_first(value_first_args);
        if (dice_cmd->parsed()) return run_dice(dice_args);
        if (simulate_cmd->parsed()) return run_simulate(simulate_args);
    } catch (const EnumerationCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
