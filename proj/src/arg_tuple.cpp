#include "mularith/arg_tuple.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mularith {

namespace {

std::vector<Nat> validated(std::vector<Nat> args) {
    if (args.empty()) {
        throw std::invalid_argument("argument tuple must be nonempty");
    }
    if (std::find(args.begin(), args.end(), Nat{0}) != args.end()) {
        throw std::invalid_argument("arguments must be positive integers");
    }
    return args;
}

}  // namespace

ArgTuple::ArgTuple(std::vector<Nat> args) : args_(validated(std::move(args))), lcm_(lcm_all(args_)) {}

std::vector<unsigned> ArgTuple::exponents_at(Nat prime) const {
    std::vector<unsigned> out;
    out.reserve(args_.size());
    for (Nat m : args_) {
        unsigned e = 0;
        while (m % prime == 0) {
            m /= prime;
            ++e;
        }
        out.push_back(e);
    }
    return out;
}

std::vector<Nat> ArgTuple::primes() const {
    std::vector<Nat> out;
    for (const auto& pp : factorize(lcm_)) {
        out.push_back(pp.prime);
    }
    return out;
}

ArgTuple ArgTuple::local_part(Nat prime) const {
    std::vector<Nat> local;
    local.reserve(args_.size());
    for (unsigned e : exponents_at(prime)) {
        Nat q = 1;
        for (unsigned i = 0; i < e; ++i) {
            q *= prime;
        }
        local.push_back(q);
    }
    return ArgTuple(std::move(local));
}

std::string ArgTuple::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(args_[i]);
    }
    return out + ")";
}

Nat divisor_tuple_count(const ArgTuple& t) {
    Nat count = 1;
    for (Nat m : t.args()) {
        const Nat d = tau(m);
        if (count > std::numeric_limits<Nat>::max() / d) {
            return std::numeric_limits<Nat>::max();
        }
        count *= d;
    }
    return count;
}

}  // namespace mularith
