// Times the OpenMP Monte Carlo kernel against the serial reference and
// checks that both produce bit-identical estimates.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "hexcacti/random_model.hpp"

using namespace hexcacti;

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 50;
    long trials = argc > 2 ? std::atol(argv[2]) : 20000;
    std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 0) : 42;
    ProbabilityTriple p(BigRat(1, 3), BigRat(1, 3), BigRat(1, 3));

    auto time_it = [&](auto&& fn, McEstimate& out) {
        auto t0 = std::chrono::steady_clock::now();
        out = fn();
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(t1 - t0).count();
    };

    McEstimate serial, parallel;
    double ts = time_it(
        [&] { return monte_carlo_serial(n, p, trials, seed, IndexKind::Hosoya); },
        serial);
    double tp = time_it(
        [&] { return monte_carlo(n, p, trials, seed, IndexKind::Hosoya); },
        parallel);

    std::cout << "n=" << n << " trials=" << trials << " seed=" << seed << "\n";
    std::cout << "serial:   " << ts << " s, mean=" << serial.mean << "\n";
    std::cout << "parallel: " << tp << " s, mean=" << parallel.mean << "\n";
    std::cout << "speedup:  " << ts / tp << "x\n";

    if (serial.mean != parallel.mean || serial.std_dev != parallel.std_dev) {
        std::cerr << "MISMATCH between serial and parallel estimates\n";
        return 1;
    }
    std::cout << "serial and parallel estimates identical\n";
    return 0;
}
