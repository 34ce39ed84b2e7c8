#include "hexcacti/expectation.hpp"

#include <sstream>
#include <stdexcept>

namespace hexcacti {

ProbabilityTriple::ProbabilityTriple(BigRat a_, BigRat b_, BigRat c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("probabilities must be nonnegative");
    if (a + b + c != 1)
        throw std::invalid_argument("probabilities must sum to exactly 1, got " +
                                    rat_str(a + b + c));
}

ProbabilityTriple ProbabilityTriple::parse(const std::string& csv) {
    std::vector<std::string> parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3)
        throw std::invalid_argument("expected three comma-separated rationals");
    return ProbabilityTriple(parse_rational(parts[0]), parse_rational(parts[1]),
                             parse_rational(parts[2]));
}

std::string ProbabilityTriple::str() const {
    return rat_str(a) + "," + rat_str(b) + "," + rat_str(c);
}

std::vector<ExpectationState> expect_states(int n_max,
                                            const ProbabilityTriple& p,
                                            IndexKind kind) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    bool hosoya = kind == IndexKind::Hosoya;
    // Per-family coefficients of the coupled system. Each auxiliary family
    // satisfies aux_n = u * base_n + v * (a*prime + b*tilde + c*hat)_{n-1};
    // the base satisfies base_n = B * base_{n-1} + A * (mix)_{n-2} for n >= 2.
    const int B = hosoya ? 8 : 5, A = hosoya ? 10 : 8;
    const int pu = 5, pv = 3;
    const int tu = 3, tv = hosoya ? 5 : 7;
    const int hu = 4, hv = hosoya ? 4 : 5;
    const BigRat aux0 = hosoya ? 8 : 13;

    std::vector<ExpectationState> states;
    states.reserve(n_max + 1);
    states.push_back({0, BigRat(1), aux0, aux0, aux0});
    auto mix = [&](const ExpectationState& s) {
        return p.a * s.prime + p.b * s.tilde + p.c * s.hat;
    };
    for (int n = 1; n <= n_max; ++n) {
        ExpectationState s;
        s.n = n;
        s.base = n == 1 ? BigRat(18)
                        : B * states[n - 1].base + A * mix(states[n - 2]);
        BigRat m = mix(states[n - 1]);
        s.prime = pu * s.base + pv * m;
        s.tilde = tu * s.base + tv * m;
        s.hat = hu * s.base + hv * m;
        states.push_back(std::move(s));
    }
    return states;
}

RationalGF gf_closed_form(const ProbabilityTriple& p, IndexKind kind) {
    const BigRat &a = p.a, &b = p.b, &c = p.c;
    RationalGF gf;
    if (kind == IndexKind::Hosoya) {
        gf.num = {BigRat(1), 10 - 3 * a - 5 * b - 4 * c};
        gf.den = {BigRat(1), -(8 + 3 * a + 5 * b + 4 * c),
                  -(26 * a - 10 * b + 8 * c)};
    } else {
        gf.num = {BigRat(1), 13 - 3 * a - 7 * b - 5 * c,
                  25 * a - 11 * b + 7 * c};
        gf.den = {BigRat(1), -(5 + 3 * a + 7 * b + 5 * c),
                  -(25 * a - 11 * b + 7 * c)};
    }
    return gf;
}

std::vector<BigRat> series_expand(const RationalGF& gf, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
    if (gf.den.empty() || gf.den[0] != 1)
        throw std::invalid_argument("denominator constant term must be 1");
    std::vector<BigRat> coeffs(n_terms);
    for (int n = 0; n < n_terms; ++n) {
        BigRat c = n < static_cast<int>(gf.num.size()) ? gf.num[n] : BigRat(0);
        for (int k = 1; k < static_cast<int>(gf.den.size()) && k <= n; ++k)
            c -= gf.den[k] * coeffs[n - k];
        coeffs[n] = std::move(c);
    }
    return coeffs;
}

RationalGF special_case_gf(Attachment which, IndexKind kind) {
    auto mk = [](std::initializer_list<int> num, std::initializer_list<int> den) {
        RationalGF gf;
        for (int x : num) gf.num.emplace_back(x);
        for (int x : den) gf.den.emplace_back(x);
        return gf;
    };
    if (kind == IndexKind::Hosoya) {
        switch (which) {
            case Attachment::Ortho: return mk({1, 7}, {1, -11, -26});
            case Attachment::Meta: return mk({1, 5}, {1, -13, 10});
            case Attachment::Para: return mk({1, 6}, {1, -12, -8});
        }
    } else {
        switch (which) {
            case Attachment::Ortho: return mk({2, 2}, {1, -8, -25});
            case Attachment::Meta: return mk({2, -6}, {1, -12, 11});
            case Attachment::Para: return mk({2, -2}, {1, -10, -7});
        }
    }
    throw std::logic_error("bad attachment");
}

BigRat expect_by_enumeration(int n, const ProbabilityTriple& p,
                             IndexKind kind) {
    if (n > 8)
        throw SizeLimitExceeded("expect_by_enumeration: n > 8 (3^(n-2) "
                                "sequences)");
    int len = n >= 2 ? n - 2 : 0;
    const BigRat probs[3] = {p.a, p.b, p.c};
    std::vector<int> digits(len, 0);
    BigRat total = 0;
    while (true) {
        std::vector<Attachment> ch;
        BigRat weight = 1;
        for (int d : digits) {
            ch.push_back(static_cast<Attachment>(d + 1));
            weight *= probs[d];
        }
        if (weight != 0)
            total += weight *
                     BigRat(count_chain(AttachmentSequence(n, ch), kind));
        int i = 0;
        for (; i < len; ++i) {
            if (++digits[i] < 3) break;
            digits[i] = 0;
        }
        if (i == len) break;
    }
    return total;
}

}  // namespace hexcacti
