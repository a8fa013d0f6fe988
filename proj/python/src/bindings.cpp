#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mularith/asymptotics.hpp"
#include "mularith/congruence.hpp"
#include "mularith/gcdsum.hpp"
#include "mularith/orbicyclic.hpp"
#include "mularith/ramanujan.hpp"
#include "mularith/unified.hpp"
#include "mularith/verify.hpp"

namespace py = pybind11;
using namespace mularith;

namespace {

py::object to_py(const Int& v) {
    const std::string digits = v.get_str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(Int(v.get_num())), to_py(Int(v.get_den())));
}

ArgTuple tuple_of(const std::vector<Nat>& args) { return ArgTuple(args); }

py::object eval_e(const std::vector<Nat>& args, const std::string& method, std::optional<Nat> modulus) {
    const auto t = tuple_of(args);
    if (method == "definition") {
        return to_py(e_definition(t, modulus.value_or(t.lcm())));
    }
    if (modulus) {
        throw std::invalid_argument("modulus only applies to method 'definition'");
    }
    if (method == "convolution") {
        return to_py(e_convolution(t));
    }
    if (method == "divisor") {
        return to_py(e_divisor(t));
    }
    if (method == "multiplicative" || method == "auto") {
        return to_py(e_multiplicative(t));
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

py::object eval_a(const std::vector<Nat>& args, const std::string& method) {
    const auto t = tuple_of(args);
    if (method == "definition") {
        return to_py(a_definition(t));
    }
    if (method == "convolution") {
        return to_py(a_convolution(t));
    }
    if (method == "divisor") {
        return to_py(a_divisor(t));
    }
    if (method == "multiplicative" || method == "auto") {
        return to_py(a_multiplicative(t));
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

py::object eval_f(const std::string& pair_name, const std::vector<Nat>& args, const std::string& method) {
    const auto pair = builtin_pair(pair_name);
    const auto t = tuple_of(args);
    if (method == "definition") {
        return to_py(f_general_definition(pair, t));
    }
    if (method == "convolution" || (method == "auto" && !pair.multiplicative)) {
        return to_py(f_general_convolution(pair, t));
    }
    if (method == "divisor") {
        return to_py(f_general_divisor(pair, t));
    }
    if (method == "multiplicative" || method == "auto") {
        return to_py(f_general_multiplicative(pair, t));
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

py::object ramanujan(Nat n, Nat k, const std::string& method) {
    if (method == "definition") {
        return to_py(c_exponential(n, k));
    }
    if (method == "divisor") {
        return to_py(c_divisor(n, k));
    }
    if (method == "multiplicative" || method == "auto") {
        return to_py(c_prime_power_method(n, k));
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

py::object congruence(Nat modulus, std::int64_t target, const std::string& sets, bool brute) {
    const CongruenceInstance inst(modulus, target, parse_divisor_sets(sets));
    return to_py(brute ? count_bruteforce(inst) : count_formula(inst));
}

py::dict report_dict(const PartialSumReport& r) {
    py::dict d;
    d["r"] = r.r;
    d["x"] = r.x;
    d["exact_sum"] = to_py(r.exact_sum);
    d["Cr"] = r.constant ? py::object(py::str(to_decimal(r.constant->value))) : py::none();
    d["tail_bound"] = r.constant ? py::object(py::str(to_decimal(r.constant->tail_bound, 6))) : py::none();
    d["predicted"] = r.predicted ? py::object(py::str(to_decimal(*r.predicted))) : py::none();
    d["ratio"] = r.ratio ? py::object(py::str(to_decimal(*r.ratio))) : py::none();
    d["precision"] = kReportDigits;
    return d;
}

py::list asympt(unsigned r, const std::vector<Nat>& xs, Nat prime_bound) {
    py::list out;
    if (r == 1) {
        for (Nat x : xs) {
            out.append(report_dict(partial_sum(1, x, prime_bound)));
        }
        return out;
    }
    for (const auto& report : asymptotic_report(r, xs, prime_bound)) {
        out.append(report_dict(report));
    }
    return out;
}

py::list verify(const std::string& suite, Nat max, unsigned r, std::uint64_t seed) {
    VerifyOptions options;
    options.max = max;
    options.r = r;
    options.seed = seed;
    py::list out;
    for (const auto& result : run_suites(suite, options)) {
        for (const auto& p : result.properties) {
            py::dict d;
            d["suite"] = result.suite;
            d["property"] = p.name;
            d["checked"] = p.checked;
            d["failed"] = p.failed;
            d["counterexample"] = p.counterexample ? py::object(py::str(*p.counterexample)) : py::none();
            out.append(d);
        }
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact multiplicative arithmetic: Ramanujan sums, E, A, F_f and congruence counts";

    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);

    m.def("ramanujan_sum", &ramanujan, py::arg("n"), py::arg("k"), py::arg("method") = "auto");
    m.def("E", &eval_e, py::arg("args"), py::arg("method") = "auto", py::arg("modulus") = py::none());
    m.def("A", &eval_a, py::arg("args"), py::arg("method") = "auto");
    m.def("F", &eval_f, py::arg("pair"), py::arg("args"), py::arg("method") = "auto");
    m.def("Ftau", [](const std::vector<Nat>& args) { return to_py(f_tau(tuple_of(args))); }, py::arg("args"));
    m.def("builtin_pairs", &builtin_pair_names);
    m.def("f_r", [](Nat m_, unsigned r) { return to_py(f_r_diagonal(m_, r)); }, py::arg("m"), py::arg("r"));
    m.def("h", [](unsigned s, long x) { return to_py(h_poly(s, Int(x))); }, py::arg("s"), py::arg("x"));
    m.def("count_congruence", &congruence, py::arg("M"), py::arg("n"), py::arg("sets"), py::arg("brute") = false);
    m.def("count_singleton_divisor",
          [](Nat modulus, std::int64_t n, const std::vector<Nat>& ds) {
              return to_py(count_singleton_divisor(modulus, n, ds));
          },
          py::arg("M"), py::arg("n"), py::arg("ds"));
    m.def("asympt", &asympt, py::arg("r"), py::arg("xs"), py::arg("prime_bound") = kDefaultPrimeBound);
    m.def("verify", &verify, py::arg("suite"), py::arg("max") = 20, py::arg("r") = 2, py::arg("seed") = 1);
    m.def("suite_names", &suite_names);
}
