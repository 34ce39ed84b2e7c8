#ifndef HEXCACTI_ASYMPTOTICS_HPP
#define HEXCACTI_ASYMPTOTICS_HPP

#include <optional>

#include "hexcacti/expectation.hpp"

namespace hexcacti {

struct DegenerateDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoRealRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleData {
    Real dominant_root;                 // smallest-modulus real root x*
    Real growth_rate;                   // lambda = 1/x*
    Real amplitude;                     // c_n ~ amplitude * lambda^n
    std::optional<Real> secondary_root; // absent for a linear denominator
};

// Writing the denominator as 1 - s*x - t*x^2.
BigRat denominator_s(const RationalGF& gf);
BigRat denominator_t(const RationalGF& gf);

// Partial-fraction principal part at the dominant denominator root.
PoleData dominant_pole(const RationalGF& gf);

Real pole_approx(const PoleData& pd, int n);

// The published asymptotic formulas, evaluated literally as printed. This is
// a comparator only; dominant_pole is the normative asymptotic.
Real printed_asymptotic(int n, const ProbabilityTriple& p, IndexKind kind);

// The printed sigma_1^2 polynomial, exact (it should equal s^2 + 4t).
BigRat sigma1_squared_printed(const ProbabilityTriple& p, IndexKind kind);

struct AsymptoticReport {
    int n;
    IndexKind kind;
    Real exact;
    Real pole_approx;
    Real printed;
    Real rel_err_pole;
    Real rel_err_printed;
};

AsymptoticReport asymptotic_report(int n, const ProbabilityTriple& p,
                                   IndexKind kind);

}  // namespace hexcacti

#endif
