#pragma once

#include <span>
#include <string>
#include <vector>

#include "mularith/arith.hpp"

namespace mularith {

/// The argument (m_1, ..., m_r) of E, A and F_f with its lcm cached.
class ArgTuple {
public:
    /// Throws std::invalid_argument on an empty list or a zero entry.
    explicit ArgTuple(std::vector<Nat> args);
    ArgTuple(std::initializer_list<Nat> args) : ArgTuple(std::vector<Nat>(args)) {}

    std::span<const Nat> args() const { return args_; }
    Nat operator[](std::size_t i) const { return args_[i]; }
    std::size_t arity() const { return args_.size(); }
    Nat lcm() const { return lcm_; }

    /// ν_p(m_i) for every i, zeros included.
    std::vector<unsigned> exponents_at(Nat prime) const;

    /// Primes dividing the lcm, ascending.
    std::vector<Nat> primes() const;

    /// The tuple (p^{ν_p(m_1)}, ..., p^{ν_p(m_r)}).
    ArgTuple local_part(Nat prime) const;

    std::string to_string() const;

    friend bool operator==(const ArgTuple& a, const ArgTuple& b) { return a.args_ == b.args_; }

private:
    std::vector<Nat> args_;
    Nat lcm_;
};

/// Calls visit(ds) for every (d_1, ..., d_r) in the cartesian product of the
/// given lists.
template <class Visitor>
void for_each_tuple(const std::vector<std::vector<Nat>>& lists, Visitor&& visit) {
    for (const auto& l : lists) {
        if (l.empty()) {
            return;
        }
    }
    std::vector<std::size_t> idx(lists.size(), 0);
    std::vector<Nat> current(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        current[i] = lists[i][0];
    }
    while (true) {
        visit(std::span<const Nat>(current));
        std::size_t i = lists.size();
        while (i > 0) {
            --i;
            if (++idx[i] < lists[i].size()) {
                current[i] = lists[i][idx[i]];
                break;
            }
            idx[i] = 0;
            current[i] = lists[i][0];
            if (i == 0) {
                return;
            }
        }
        if (lists.empty()) {
            return;
        }
    }
}

/// Product of tau(m_i): the number of divisor tuples of t.
Nat divisor_tuple_count(const ArgTuple& t);

}  // namespace mularith
