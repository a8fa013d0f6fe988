#include "mularith/unified.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "periodic_sum.hpp"

namespace mularith {

namespace {

ArithmeticFunction from_rule(const MultiplicativeRule& rule) {
    return [rule](Nat n) { return eval_multiplicative(rule, n); };
}

// w_i(d) = g(d) h(m_i / d) for every d | m_i, over a common denominator.
struct WeightRow {
    std::vector<Nat> divisors;
    std::vector<Int> numerators;
    Int denominator = 1;
};

WeightRow weights_for(const ApostolPair& pair, Nat m) {
    WeightRow row;
    std::vector<Rational> values;
    for (Nat d : divisors(m)) {
        Rational w = pair.g(d) * pair.h(m / d);
        if (w == 0) {
            continue;
        }
        row.divisors.push_back(d);
        mpz_lcm(row.denominator.get_mpz_t(), row.denominator.get_mpz_t(), w.get_den_mpz_t());
        values.push_back(std::move(w));
    }
    for (const auto& w : values) {
        row.numerators.push_back(w.get_num() * (row.denominator / w.get_den()));
    }
    return row;
}

}  // namespace

ApostolPair ApostolPair::from_rules(const MultiplicativeRule& g, const MultiplicativeRule& h) {
    return {"(" + g.name + "," + h.name + ")", from_rule(g), from_rule(h), true};
}

ValueTable ValueTable::parse(std::istream& in) {
    std::map<Nat, Rational> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string n_text;
        std::string value_text;
        std::string extra;
        if (!(fields >> n_text) || n_text.front() == '#') {
            continue;
        }
        const auto where = " (line " + std::to_string(line_no) + ")";
        if (!(fields >> value_text) || (fields >> extra)) {
            throw std::invalid_argument("value table: expected 'n value'" + where);
        }
        const Rational n = parse_rational(n_text);
        if (n.get_den() != 1 || n <= 0 || !n.get_num().fits_ulong_p()) {
            throw std::invalid_argument("value table: n must be a positive integer" + where);
        }
        if (!values.emplace(n.get_num().get_ui(), parse_rational(value_text)).second) {
            throw std::invalid_argument("value table: duplicate n" + where);
        }
    }
    return ValueTable(std::move(values));
}

const Rational& ValueTable::at(Nat n) const {
    const auto it = values_.find(n);
    if (it == values_.end()) {
        throw std::out_of_range("value table has no entry for n = " + std::to_string(n));
    }
    return it->second;
}

ArithmeticFunction dirichlet_convolution(ArithmeticFunction f, ArithmeticFunction g) {
    return [f = std::move(f), g = std::move(g)](Nat n) {
        Rational sum = 0;
        for (Nat d : divisors(n)) {
            sum += f(d) * g(n / d);
        }
        return sum;
    };
}

ApostolPair pair_from_tables(ValueTable g, ValueTable h, std::string name) {
    return {std::move(name), [g = std::move(g)](Nat n) { return g.at(n); },
            [h = std::move(h)](Nat n) { return h.at(n); }, false};
}

ApostolPair builtin_pair(std::string_view name) {
    if (name == "ramanujan") {
        return ApostolPair::from_rules(rules::identity(), rules::mu());
    }
    if (name == "gcd") {
        return ApostolPair::from_rules(rules::phi(), rules::one());
    }
    if (name == "tau") {
        return ApostolPair::from_rules(rules::one(), rules::one());
    }
    if (name == "tau-mu") {
        return ApostolPair::from_rules(rules::tau(), rules::mu());
    }
    throw std::invalid_argument("unknown (g,h) pair '" + std::string(name) + "'");
}

std::vector<std::string> builtin_pair_names() { return {"ramanujan", "gcd", "tau", "tau-mu"}; }

Rational f_two_var(const ApostolPair& pair, Nat k, Nat n) {
    if (k == 0 || n == 0) {
        throw std::invalid_argument("f_two_var: arguments must be positive");
    }
    Rational sum = 0;
    for (Nat d : divisors(std::gcd(k, n))) {
        sum += pair.g(d) * pair.h(n / d);
    }
    return sum;
}

Rational f_general_definition(const ApostolPair& pair, const ArgTuple& t, Nat limit) {
    const Nat m = t.lcm();
    if (m > limit) {
        throw GuardError("f_general_definition: lcm " + std::to_string(m) + " exceeds limit " +
                         std::to_string(limit));
    }
    // f(k, n) depends on k only through k mod n.
    std::vector<std::vector<Rational>> tables;
    tables.reserve(t.arity());
    for (Nat mi : t.args()) {
        auto& row = tables.emplace_back(mi);
        for (Nat j = 1; j <= mi; ++j) {
            row[j % mi] = f_two_var(pair, j, mi);
        }
    }
    return detail::periodic_product_sum(tables, m) / Rational(to_int(m));
}

Rational f_general_convolution(const ApostolPair& pair, const ArgTuple& t) {
    const Nat m = t.lcm();
    std::vector<WeightRow> rows;
    Int denominator = to_int(m);
    for (Nat mi : t.args()) {
        rows.push_back(weights_for(pair, mi));
        denominator *= rows.back().denominator;
    }
    // Every lcm(d) divides m, so m / lcm(d) is an integer weight.
    Int numerator = 0;
    const std::size_t r = rows.size();
    auto visit = [&](auto&& self, std::size_t i, const Int& prod, Nat l) -> void {
        if (i == r) {
            numerator += prod * (m / l);
            return;
        }
        const auto& row = rows[i];
        for (std::size_t j = 0; j < row.divisors.size(); ++j) {
            self(self, i + 1, prod * row.numerators[j], std::lcm(l, row.divisors[j]));
        }
    };
    visit(visit, 0, Int(1), 1);
    return make_rational(numerator, denominator);
}

Rational f_general_divisor(const ApostolPair& pair, const ArgTuple& t) {
    const Nat m = t.lcm();
    Rational total = 0;
    for (Nat d : divisors(m)) {
        Rational term = Rational(to_int(euler_phi(m / d)));
        for (Nat mi : t.args()) {
            term *= f_two_var(pair, d, mi);
            if (term == 0) {
                break;
            }
        }
        total += term;
    }
    return total / Rational(to_int(m));
}

Rational f_general_multiplicative(const ApostolPair& pair, const ArgTuple& t) {
    if (!pair.multiplicative) {
        throw std::invalid_argument("f_general_multiplicative: pair " + pair.name + " is not declared multiplicative");
    }
    Rational value = 1;
    for (Nat p : t.primes()) {
        value *= f_general_convolution(pair, t.local_part(p));
    }
    return value;
}

Rational f_tau(const ArgTuple& t) {
    std::vector<std::vector<Nat>> lists;
    for (Nat m : t.args()) {
        lists.push_back(divisors(m));
    }
    const Nat m = t.lcm();
    Int numerator = 0;
    for_each_tuple(lists, [&](std::span<const Nat> ds) { numerator += to_int(m / lcm_all(ds)); });
    return make_rational(numerator, to_int(m));
}

}  // namespace mularith
