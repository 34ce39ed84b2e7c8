#ifndef HEXCACTI_EXPECTATION_HPP
#define HEXCACTI_EXPECTATION_HPP

#include <vector>

#include "hexcacti/cactus_graph.hpp"
#include "hexcacti/exact_count.hpp"
#include "hexcacti/rational.hpp"

namespace hexcacti {

struct ProbabilityTriple {
    BigRat a, b, c;

    ProbabilityTriple(BigRat a_, BigRat b_, BigRat c_);
    static ProbabilityTriple parse(const std::string& csv);  // "1/3,1/3,1/3"
    std::string str() const;
};

// Expected index of the chain plus the three pendant-path families at one n.
struct ExpectationState {
    int n = 0;
    BigRat base, prime, tilde, hat;
};

// Rational generating function; ascending powers, denominator constant term 1.
struct RationalGF {
    std::vector<BigRat> num;
    std::vector<BigRat> den;
};

// Coupled recurrence system over the base and auxiliary families, exact.
std::vector<ExpectationState> expect_states(int n_max,
                                            const ProbabilityTriple& p,
                                            IndexKind kind);

// Closed-form generating function of the expected index at (a, b, c).
RationalGF gf_closed_form(const ProbabilityTriple& p, IndexKind kind);

// First n_terms Taylor coefficients of num/den.
std::vector<BigRat> series_expand(const RationalGF& gf, int n_terms);

// The classical pure ortho/meta/para generating functions (note these count
// the empty chain as 2 for independent sets).
RationalGF special_case_gf(Attachment which, IndexKind kind);

// Definition-level oracle: weighted sum of count_chain over all 3^(n-2)
// attachment sequences. Throws SizeLimitExceeded for n > 8.
BigRat expect_by_enumeration(int n, const ProbabilityTriple& p, IndexKind kind);

}  // namespace hexcacti

#endif
