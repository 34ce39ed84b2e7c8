#ifndef HEXCACTI_RANDOM_MODEL_HPP
#define HEXCACTI_RANDOM_MODEL_HPP

#include <cstdint>

#include "hexcacti/expectation.hpp"

namespace hexcacti {

// Counter-based per-trial stream (splitmix64 core): stream (seed, trial)
// yields the same variates on every platform and regardless of scheduling.
class TrialStream {
public:
    TrialStream(std::uint64_t seed, std::uint64_t trial);

    std::uint64_t next_u64();

    // Uniform variate as an exact dyadic rational k / 2^53.
    BigRat next_unit_rational();

private:
    std::uint64_t state_;
};

// One draw per hexagon beyond the second: Ortho if u < a, Meta if u < a+b,
// else Para, with exact rational comparisons.
AttachmentSequence sample_sequence(int n, const ProbabilityTriple& p,
                                   TrialStream& stream);

struct McEstimate {
    Real mean;
    Real std_dev;
    Real std_err;  // std_dev / sqrt(trials)
    long trials = 0;
    int n = 0;
    IndexKind kind = IndexKind::Hosoya;
};

// Monte Carlo estimate of the expected index over `trials` sampled chains.
// Sums are exact integers, so results are bit-identical for any thread count.
// The default entry point parallelizes over trials with OpenMP;
// monte_carlo_serial is the reference implementation.
McEstimate monte_carlo(int n, const ProbabilityTriple& p, long trials,
                       std::uint64_t seed, IndexKind kind);
McEstimate monte_carlo_serial(int n, const ProbabilityTriple& p, long trials,
                              std::uint64_t seed, IndexKind kind);

}  // namespace hexcacti

#endif
