#pragma once

#include <cstdint>
#include <vector>

namespace seqbound {

// Independent check on lambda0: the sinc-kernel operator discretized on a
// uniform grid over [-1, 1] with trapezoid weights, never the Gauss nodes
// used by the spectral solver.

struct PowerIterationResult {
    double lambda;
    int iterations;
    std::vector<double> quotients;  // Rayleigh quotient after each application
};

inline constexpr int kMaxPowerIterations = 10000;
inline constexpr std::uint64_t kDefaultOracleSeed = 20240611;

// Power iteration from a constant start vector plus small seeded noise until
// successive quotients differ by < tol. ArgumentError unless grid_size >= 128
// and tol >= 1e-12; NumericError after kMaxPowerIterations.
PowerIterationResult power_iteration(double xi, int grid_size, double tol, std::uint64_t seed = kDefaultOracleSeed);

double power_iteration_lambda0(double xi, int grid_size = 2048, double tol = 1e-12);

// Largest Rayleigh quotient of the trapezoid operator over `trials` random
// ensemble states on [-1, 1]. Deterministic in `seed`; ArgumentError if trials < 100.
double random_state_scan(double xi, int trials, std::uint64_t seed, int grid_size = 1024);

// Samples per random state. Few samples keep the ensemble smooth enough that
// the best of 10^4 draws approaches lambda0.
inline constexpr std::size_t kScanStateSamples = 16;

struct OracleReport {
    double xi;
    double power_iteration_lambda;
    int iterations;
    double random_scan_max;
    int trials;
    std::uint64_t seed;
};

OracleReport run_oracle(double xi, int grid_size, int trials, std::uint64_t seed, double tol = 1e-12);

} // namespace seqbound
