#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "mularith/asymptotics.hpp"
#include "mularith/congruence.hpp"
#include "mularith/gcdsum.hpp"
#include "mularith/orbicyclic.hpp"
#include "mularith/ramanujan.hpp"
#include "mularith/unified.hpp"
#include "mularith/verify.hpp"

namespace mularith::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised after a property check already reported its failure.
class PropertyFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Evaluation {
    std::string value;
    std::string method;
};

struct PairOptions {
    std::string pair;
    std::string g_table;
    std::string h_table;
};

ValueTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read table file '" + path + "'");
    }
    return ValueTable::parse(in);
}

ApostolPair resolve_pair(const PairOptions& o) {
    const bool tables = !o.g_table.empty() || !o.h_table.empty();
    if (tables && !o.pair.empty()) {
        throw UsageError("use either --pair or --g-table/--h-table, not both");
    }
    if (tables) {
        if (o.g_table.empty() || o.h_table.empty()) {
            throw UsageError("--g-table and --h-table must be given together");
        }
        return pair_from_tables(read_table(o.g_table), read_table(o.h_table));
    }
    if (o.pair.empty()) {
        throw UsageError("Fgh needs --pair or --g-table/--h-table");
    }
    return builtin_pair(o.pair);
}

Evaluation evaluate(const std::string& function, const std::vector<Nat>& args, const std::string& method,
                    std::optional<Nat> modulus, const PairOptions& pair_options) {
    const std::string& m = method;
    if (function == "c") {
        if (args.size() != 2) {
            throw UsageError("c takes exactly two arguments: n k");
        }
        if (m == "definition") {
            return {to_string(c_exponential(args[0], args[1])), m};
        }
        if (m == "divisor") {
            return {to_string(c_divisor(args[0], args[1])), m};
        }
        if (m == "multiplicative" || m == "auto") {
            return {to_string(c_prime_power_method(args[0], args[1])), "multiplicative"};
        }
        throw UsageError("method '" + m + "' is not available for c");
    }

    const ArgTuple t(args);
    if (modulus && !(function == "E" && m == "definition")) {
        throw UsageError("--modulus only applies to E with --method definition");
    }
    if (function == "E") {
        if (m == "definition") {
            return {to_string(e_definition(t, modulus.value_or(t.lcm()))), m};
        }
        if (m == "convolution") {
            return {to_string(e_convolution(t)), m};
        }
        if (m == "divisor") {
            return {to_string(e_divisor(t)), m};
        }
        if (m == "multiplicative" || m == "auto") {
            return {to_string(e_multiplicative(t)), "multiplicative"};
        }
    } else if (function == "A") {
        if (m == "definition") {
            return {to_string(a_definition(t)), m};
        }
        if (m == "convolution") {
            return {to_string(a_convolution(t)), m};
        }
        if (m == "divisor") {
            return {to_string(a_divisor(t)), m};
        }
        if (m == "multiplicative" || m == "auto") {
            return {to_string(a_multiplicative(t)), "multiplicative"};
        }
    } else if (function == "Ftau" || function == "Fgh") {
        const ApostolPair pair = function == "Ftau" ? builtin_pair("tau") : resolve_pair(pair_options);
        if (m == "definition") {
            return {to_string(f_general_definition(pair, t)), m};
        }
        if (m == "convolution") {
            return {to_string(function == "Ftau" ? f_tau(t) : f_general_convolution(pair, t)), m};
        }
        if (m == "divisor") {
            return {to_string(f_general_divisor(pair, t)), m};
        }
        if (m == "multiplicative" || (m == "auto" && pair.multiplicative)) {
            return {to_string(f_general_multiplicative(pair, t)), "multiplicative"};
        }
        if (m == "auto") {
            return {to_string(f_general_convolution(pair, t)), "convolution"};
        }
    } else {
        throw UsageError("unknown function '" + function + "' (expected E, A, c, Ftau or Fgh)");
    }
    throw UsageError("unknown method '" + m + "'");
}

Json record(const std::string& function, const std::vector<std::string>& args, const Evaluation& e) {
    Json j;
    j["function"] = function;
    j["args"] = args;
    j["value"] = e.value;
    j["method"] = e.method;
    return j;
}

std::vector<std::string> decimal_strings(const std::vector<Nat>& xs) {
    std::vector<std::string> out;
    for (Nat x : xs) {
        out.push_back(std::to_string(x));
    }
    return out;
}

std::string csv_header(std::size_t arity) {
    std::string header;
    for (std::size_t i = 1; i <= arity; ++i) {
        header += "m" + std::to_string(i) + ",";
    }
    return header + "value";
}

std::string csv_row(const std::vector<Nat>& args, const Evaluation& e) {
    std::string row;
    for (Nat a : args) {
        row += std::to_string(a) + ",";
    }
    return row + e.value;
}

Json hp_or_null(const std::optional<HighPrecision>& v) { return v ? Json(to_decimal(*v)) : Json(nullptr); }

Json asympt_record(const PartialSumReport& report) {
    Json j;
    j["function"] = "S";
    j["args"] = {std::to_string(report.r), std::to_string(report.x)};
    j["value"] = to_string(report.exact_sum);
    j["method"] = "sieve";
    j["r"] = report.r;
    j["x"] = report.x;
    j["exact_sum"] = to_string(report.exact_sum);
    if (report.constant) {
        j["prime_bound"] = report.constant->prime_bound;
        j["Cr"] = to_decimal(report.constant->value);
        j["tail_bound"] = to_decimal(report.constant->tail_bound, 6);
    } else {
        j["prime_bound"] = nullptr;
        j["Cr"] = nullptr;
        j["tail_bound"] = nullptr;
    }
    j["predicted"] = hp_or_null(report.predicted);
    j["ratio"] = hp_or_null(report.ratio);
    j["precision"] = kReportDigits;
    return j;
}

void check_format(const std::string& format) {
    if (format != "json" && format != "csv") {
        throw UsageError("--format must be json or csv");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact evaluation of Ramanujan sums, the orbicyclic function E, gcd-sum means, "
                 "their common generalization and constrained linear congruences."};
    app.name("mularith");
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "Write records to this file instead of standard output");

    // eval
    std::string function;
    std::vector<Nat> eval_args;
    std::string method = "auto";
    std::optional<Nat> modulus;
    std::string format = "json";
    PairOptions pair_options;
    auto* eval = app.add_subcommand("eval", "Evaluate one function value");
    eval->add_option("function", function, "E, A, c, Ftau or Fgh")->required();
    eval->add_option("args", eval_args, "Arguments (for c: n k)")->required();
    eval->add_option("--method", method, "definition, convolution, divisor, multiplicative or auto");
    eval->add_option("--modulus", modulus, "Modulus M for E --method definition (default lcm)");
    eval->add_option("--format", format, "json or csv");
    eval->add_option("--pair", pair_options.pair, "Built-in (g,h) pair for Fgh: ramanujan, gcd, tau, tau-mu");
    eval->add_option("--g-table", pair_options.g_table, "File of 'n value' lines defining g");
    eval->add_option("--h-table", pair_options.h_table, "File of 'n value' lines defining h");

    // table
    unsigned table_r = 1;
    Nat table_max = 1;
    auto* table = app.add_subcommand("table", "Tabulate a function over [1,max]^r");
    table->add_option("function", function, "E, A, Ftau or Fgh")->required();
    table->add_option("--r", table_r, "Arity")->required()->check(CLI::PositiveNumber);
    table->add_option("--max", table_max, "Largest argument")->required()->check(CLI::PositiveNumber);
    table->add_option("--method", method, "definition, convolution, divisor, multiplicative or auto");
    table->add_option("--format", format, "json or csv");
    table->add_option("--pair", pair_options.pair, "Built-in (g,h) pair for Fgh");
    table->add_option("--g-table", pair_options.g_table, "File of 'n value' lines defining g");
    table->add_option("--h-table", pair_options.h_table, "File of 'n value' lines defining h");

    // verify
    VerifyOptions verify_options;
    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("--suite", suite, "ramanujan, orbicyclic, gcdsum, unified, congruence, inversion or all")
        ->required();
    verify->add_option("--max", verify_options.max, "Largest argument or modulus")->check(CLI::PositiveNumber);
    verify->add_option("--r", verify_options.r, "Largest arity")->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_options.seed, "Seed for sampled properties");
    verify->add_option("--samples", verify_options.samples, "Random samples per sampled property");

    // congruence
    Nat cong_modulus = 1;
    std::int64_t cong_target = 0;
    std::string sets_text;
    bool brute = false;
    auto* congruence = app.add_subcommand("congruence", "Count solutions of x_1+...+x_r = n (mod M)");
    congruence->add_option("--M", cong_modulus, "Modulus")->required()->check(CLI::PositiveNumber);
    congruence->add_option("--n", cong_target, "Target residue")->required();
    congruence->add_option("--sets", sets_text, "Allowed gcd(x_i, M) values, e.g. \"1;1\" or \"1,2;4\"")
        ->required();
    congruence->add_flag("--brute", brute, "Cross-check against enumeration");

    // asympt
    unsigned asympt_r = 3;
    std::vector<Nat> xs;
    Nat prime_bound = kDefaultPrimeBound;
    auto* asympt = app.add_subcommand("asympt", "Partial sums of f_r against the Euler-product main term");
    asympt->add_option("--r", asympt_r, "Arity r")->required()->check(CLI::PositiveNumber);
    asympt->add_option("--x", xs, "Cut-off(s) x")->required();
    asympt->add_option("--prime-bound", prime_bound, "Largest prime in the Euler product");

    std::vector<const char*> argv{"mularith"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "mularith: " << e.what() << "\n";
        return kUsageError;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "mularith: cannot open '" << out_path << "' for writing\n";
            return kUsageError;
        }
    }
    std::ostream& sink = out_path.empty() ? out : file;
    std::ostringstream buffer;

    try {
        if (*eval) {
            check_format(format);
            const auto e = evaluate(function, eval_args, method, modulus, pair_options);
            if (format == "csv") {
                buffer << csv_header(eval_args.size()) << "\n" << csv_row(eval_args, e) << "\n";
            } else {
                buffer << record(function, decimal_strings(eval_args), e).dump() << "\n";
            }
        } else if (*table) {
            check_format(format);
            if (function == "c") {
                throw UsageError("table supports E, A, Ftau and Fgh");
            }
            Nat count = 1;
            for (unsigned i = 0; i < table_r; ++i) {
                if (count > 1000000 / table_max) {
                    throw GuardError("table: max^r exceeds 10^6 entries");
                }
                count *= table_max;
            }
            std::vector<std::vector<Nat>> axes(table_r, std::vector<Nat>(table_max));
            for (auto& axis : axes) {
                for (Nat i = 0; i < table_max; ++i) {
                    axis[i] = i + 1;
                }
            }
            if (format == "csv") {
                buffer << csv_header(table_r) << "\n";
            }
            for_each_tuple(axes, [&](std::span<const Nat> tuple) {
                const std::vector<Nat> targs(tuple.begin(), tuple.end());
                const auto e = evaluate(function, targs, method, std::nullopt, pair_options);
                if (format == "csv") {
                    buffer << csv_row(targs, e) << "\n";
                } else {
                    buffer << record(function, decimal_strings(targs), e).dump() << "\n";
                }
            });
        } else if (*verify) {
            const auto results = run_suites(suite, verify_options);
            bool ok = true;
            std::size_t properties = 0;
            for (const auto& result : results) {
                for (const auto& p : result.properties) {
                    ++properties;
                    buffer << result.suite << "/" << p.name << ": " << (p.failed == 0 ? "pass" : "FAIL") << " ("
                           << p.checked - p.failed << "/" << p.checked << ")\n";
                    if (p.counterexample) {
                        buffer << "  first counterexample: " << *p.counterexample << "\n";
                        ok = false;
                    }
                }
            }
            buffer << "verify " << suite << ": " << (ok ? "PASS" : "FAIL") << " (" << properties
                   << " properties, max=" << verify_options.max << ", r=" << verify_options.r
                   << ", seed=" << verify_options.seed << ")\n";
            sink << buffer.str();
            return ok ? kSuccess : kPropertyFailure;
        } else if (*congruence) {
            const CongruenceInstance inst(cong_modulus, cong_target, parse_divisor_sets(sets_text));
            const Int count = count_formula(inst);
            if (brute) {
                const Int check = count_bruteforce(inst);
                if (check != count) {
                    throw PropertyFailure("formula gives " + to_string(count) + " but enumeration finds " +
                                          to_string(check));
                }
            }
            Json j;
            j["function"] = "N";
            j["args"] = {std::to_string(cong_modulus), std::to_string(inst.target())};
            j["sets"] = sets_text;
            j["value"] = to_string(count);
            j["method"] = "formula";
            buffer << j.dump() << "\n";
        } else if (*asympt) {
            if (asympt_r == 1) {
                for (Nat x : xs) {
                    buffer << asympt_record(partial_sum(1, x, prime_bound)).dump() << "\n";
                }
            } else {
                for (const auto& report : asymptotic_report(asympt_r, xs, prime_bound)) {
                    buffer << asympt_record(report).dump() << "\n";
                }
            }
        }
    } catch (const GuardError& e) {
        err << "mularith: resource guard: " << e.what() << "\n";
        return kGuardViolation;
    } catch (const PropertyFailure& e) {
        err << "mularith: check failed: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const PrecisionError& e) {
        err << "mularith: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const std::logic_error& e) {
        // invalid_argument, out_of_range and domain_error are usage problems;
        // any other logic_error is a failed integrity check.
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
            dynamic_cast<const std::domain_error*>(&e)) {
            err << "mularith: " << e.what() << "\n";
            return kUsageError;
        }
        err << "mularith: internal check failed: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const std::exception& e) {
        err << "mularith: " << e.what() << "\n";
        return kUsageError;
    }
    sink << buffer.str();
    return kSuccess;
}

}  // namespace mularith::cli
