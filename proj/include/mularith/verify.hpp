#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mularith/types.hpp"

namespace mularith {

// Property suites cross-checking the evaluation routes of every module.

struct VerifyOptions {
    Nat max = 20;        // largest argument / modulus
    unsigned r = 2;      // largest arity
    std::uint64_t seed = 1;
    std::size_t samples = 10000;  // random tuples when the grid is too large
    std::size_t grid_limit = 20000;  // full grid when max^r is at most this
};

struct PropertyResult {
    explicit PropertyResult(std::string property) : name(std::move(property)) {}

    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::optional<std::string> counterexample;  // first failure

    void record(bool ok, const std::function<std::string()>& describe);
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

std::vector<std::string> suite_names();

/// Runs one suite by name, or every suite for "all". Throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suites(std::string_view name, const VerifyOptions& options);

/// Deterministic generator: the same seed yields the same sequence on every
/// platform (std distributions are implementation-defined).
class SeededRandom {
public:
    explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    Nat between(Nat lo, Nat hi) { return lo + engine_() % (hi - lo + 1); }

    std::vector<Nat> tuple(std::size_t arity, Nat max);

private:
    std::mt19937_64 engine_;
};

}  // namespace mularith
