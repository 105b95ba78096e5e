#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treepat/pattern.hpp"

namespace treepat {

// Machine-readable verification record. Everything except elapsed_ms is
// reproducible bit-for-bit across runs and worker counts.
struct Report {
    std::string family;
    int n = 0;
    uint64_t count = 0;
    std::optional<double> min_entropy;
    std::vector<Pattern> argmin;
    std::optional<double> reference;
    std::optional<double> gap;     // min_entropy - reference
    std::optional<double> margin;  // second-lowest entropy - min_entropy
    std::optional<bool> unique;
    double tol = 0.0;
    double elapsed_ms = 0.0;
    bool passed = true;
    bool precision_warning = false;
    std::vector<std::string> notes;
    std::vector<Pattern> counterexamples;

    std::string to_json(bool include_elapsed = true) const;
};

// The minimum entropy over the positive-entropy family at one period is
// log(lambda_n), attained uniquely by the canonical Q_n; the irreducible
// family gives the same minimum.
Report verify_min_entropy(int n, double value_tol = 1e-6, double tol = 1e-10,
                          bool parallel = true);

// At one composite period the minimum over reducible positive patterns is
// log(lambda_{n/p})/p and a p-extension of Q_{n/p} attains it.
Report verify_reducible_min(int n, double value_tol = 1e-6, double tol = 1e-10,
                            bool parallel = true);

// Positive-entropy patterns with at least two inner points, at least three
// openings and only zero-entropy openings must be pi-reducible.
Report verify_pi_reducibility(int n, double tol = 1e-10, bool parallel = true);

// Split-time formulas and covering bounds on two-petal zero-entropy patterns
// of period <= max_period, then walk-count and entropy bounds on
// pi-irreducible triple chains with zero-entropy openings up to chain_max_n.
Report run_splitting_suite(int max_period = 24, int chain_max_n = 8, double tol = 1e-10);

// Cross-module invariants over the full enumeration up to max_n.
Report run_structure_suite(int max_n = 8, double tol = 1e-10, bool parallel = true);

}  // namespace treepat
