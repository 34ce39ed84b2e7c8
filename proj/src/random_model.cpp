#include "hexcacti/random_model.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>
#include <vector>

namespace hexcacti {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct TrialSums {
    BigInt sum;
    BigInt sum_sq;
    void add(const BigCount& x) {
        sum += x;
        sum_sq += x * x;
    }
    void merge(const TrialSums& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
    }
};

McEstimate finalize(int n, IndexKind kind, long trials, const TrialSums& s) {
    McEstimate est;
    est.n = n;
    est.kind = kind;
    est.trials = trials;
    BigRat mean_exact(s.sum, BigInt(trials));
    est.mean = to_real(mean_exact);
    BigRat var(0);
    if (trials > 1) {
        // Sample variance: (sum_sq - sum^2/T) / (T - 1), exact until here.
        var = (BigRat(s.sum_sq) - BigRat(s.sum * s.sum, BigInt(trials))) /
              (trials - 1);
        if (var < 0) var = 0;  // guards exact-zero variance against rounding
    }
    est.std_dev = sqrt(to_real(var));
    est.std_err = est.std_dev / sqrt(Real(trials));
    return est;
}

}  // namespace

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    std::uint64_t key = splitmix64(s);
    std::uint64_t t = trial;
    state_ = key ^ splitmix64(t);
}

std::uint64_t TrialStream::next_u64() { return splitmix64(state_); }

BigRat TrialStream::next_unit_rational() {
    constexpr std::int64_t denom = std::int64_t{1} << 53;
    return BigRat(BigInt(next_u64() >> 11), BigInt(denom));
}

AttachmentSequence sample_sequence(int n, const ProbabilityTriple& p,
                                   TrialStream& stream) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    int len = n >= 2 ? n - 2 : 0;
    BigRat ab = p.a + p.b;
    std::vector<Attachment> choices;
    choices.reserve(len);
    for (int i = 0; i < len; ++i) {
        BigRat u = stream.next_unit_rational();
        if (u < p.a)
            choices.push_back(Attachment::Ortho);
        else if (u < ab)
            choices.push_back(Attachment::Meta);
        else
            choices.push_back(Attachment::Para);
    }
    return AttachmentSequence(n, std::move(choices));
}

McEstimate monte_carlo_serial(int n, const ProbabilityTriple& p, long trials,
                              std::uint64_t seed, IndexKind kind) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    TrialSums sums;
    for (long i = 0; i < trials; ++i) {
        TrialStream stream(seed, static_cast<std::uint64_t>(i));
        sums.add(count_chain(sample_sequence(n, p, stream), kind));
    }
    return finalize(n, kind, trials, sums);
}

McEstimate monte_carlo(int n, const ProbabilityTriple& p, long trials,
                       std::uint64_t seed, IndexKind kind) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    TrialSums sums;
#ifdef _OPENMP
#pragma omp parallel
    {
        TrialSums local;
#pragma omp for schedule(static)
        for (long i = 0; i < trials; ++i) {
            TrialStream stream(seed, static_cast<std::uint64_t>(i));
            local.add(count_chain(sample_sequence(n, p, stream), kind));
        }
#pragma omp critical
        sums.merge(local);
    }
#else
    for (long i = 0; i < trials; ++i) {
        TrialStream stream(seed, static_cast<std::uint64_t>(i));
        sums.add(count_chain(sample_sequence(n, p, stream), kind));
    }
#endif
    return finalize(n, kind, trials, sums);
}

}  // namespace hexcacti
