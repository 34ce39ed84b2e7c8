#include "hexcacti/asymptotics.hpp"

#include <cmath>

namespace hexcacti {

namespace {

Real eval_poly(const std::vector<BigRat>& coeffs, const Real& x) {
    Real acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + to_real(*it);
    return acc;
}

BigRat coeff(const RationalGF& gf, size_t k) {
    return k < gf.den.size() ? gf.den[k] : BigRat(0);
}

}  // namespace

BigRat denominator_s(const RationalGF& gf) { return -coeff(gf, 1); }
BigRat denominator_t(const RationalGF& gf) { return -coeff(gf, 2); }

PoleData dominant_pole(const RationalGF& gf) {
    if (gf.den.empty() || gf.den[0] != 1)
        throw DegenerateDenominator("denominator constant term must be 1");
    BigRat s = denominator_s(gf), t = denominator_t(gf);
    if (s == 0 && t == 0)
        throw DegenerateDenominator("constant denominator has no pole");

    PoleData pd;
    if (t == 0) {
        pd.dominant_root = 1 / to_real(s);
    } else {
        // Roots of 1 - s*x - t*x^2.
        BigRat disc = s * s + 4 * t;
        if (disc < 0) throw NoRealRoot("complex denominator roots");
        Real sq = sqrt(to_real(disc));
        Real r1 = (to_real(s) + sq) / to_real(-2 * t);
        Real r2 = (to_real(s) - sq) / to_real(-2 * t);
        if (abs(r1) > abs(r2)) std::swap(r1, r2);
        if (abs(r1) == abs(r2)) throw NoRealRoot("no strictly dominant root");
        pd.dominant_root = r1;
        pd.secondary_root = r2;
    }
    pd.growth_rate = 1 / pd.dominant_root;
    // A = -N(x*) / (x* D'(x*)), the residue contribution to c_n = A lambda^n.
    std::vector<BigRat> dprime;
    for (size_t k = 1; k < gf.den.size(); ++k) dprime.push_back(k * gf.den[k]);
    pd.amplitude = -eval_poly(gf.num, pd.dominant_root) /
                   (pd.dominant_root * eval_poly(dprime, pd.dominant_root));
    return pd;
}

Real pole_approx(const PoleData& pd, int n) {
    return pd.amplitude * pow(pd.growth_rate, n);
}

BigRat sigma1_squared_printed(const ProbabilityTriple& p, IndexKind kind) {
    const BigRat &a = p.a, &b = p.b, &c = p.c;
    if (kind == IndexKind::Hosoya)
        return 9 * a * a + 30 * a * b + 24 * a * c + 152 * a + 25 * b * b +
               40 * b * c + 40 * b + 16 * c * c + 96 * c + 64;
    return 9 * a * a + 42 * a * b + 30 * a * c + 130 * a + 49 * b * b +
           70 * b * c + 26 * b + 25 * c * c + 78 * c + 25;
}

Real printed_asymptotic(int n, const ProbabilityTriple& p, IndexKind kind) {
    Real a = to_real(p.a), b = to_real(p.b), c = to_real(p.c);
    Real s1 = sqrt(to_real(sigma1_squared_printed(p, kind)));
    if (kind == IndexKind::Hosoya) {
        Real s2 = 46 * a - 30 * b + 8 * c + 30 * a * b + 24 * a * c +
                  40 * b * c;
        Real num = pow(Real(4), n + 1) *
                   (s2 - 3 * a * s1 - 5 * b * s1 - 4 * c * s1 + 9 * a * a +
                    25 * b * b + 16 * c * c + 10 * s1 - 80);
        Real base = -(3 * a + 5 * b + 4 * c - s1 + 8) /
                    (13 * a - 5 * b + 4 * c);
        Real den = pow(base, n + 1) * (52 * a - 20 * b + 16 * c) * s1;
        return num / den;
    }
    Real s2 = 25 * a - 11 * b + 7 * c;
    Real s3 = 9 * a * a + 49 * b * b + 25 * c * c - 20 + 53 * a - 15 * b +
              19 * c;
    // The "7b3a sigma1" and "5c3a sigma1" terms are evaluated as the literal
    // products 7b*3a*sigma1 and 5c*3a*sigma1.
    Real num = pow(Real(2), n + 1) *
               (-3 * a * s1 - 7 * b * 3 * a * s1 - 5 * c * 3 * a * s1 +
                42 * a * b + 30 * a * c + 70 * b * c + 4 * s1 + s3);
    Real base = -(3 * a + 7 * b + 5 * c - s1 + 5) / s2;
    Real den = pow(base, n + 1) * s1 * s2;
    return num / den;
}

AsymptoticReport asymptotic_report(int n, const ProbabilityTriple& p,
                                   IndexKind kind) {
    if (n < 2) throw std::invalid_argument("asymptotic_report requires n >= 2");
    AsymptoticReport rep;
    rep.n = n;
    rep.kind = kind;
    rep.exact = to_real(expect_states(n, p, kind).back().base);
    PoleData pd = dominant_pole(gf_closed_form(p, kind));
    rep.pole_approx = hexcacti::pole_approx(pd, n);
    rep.printed = printed_asymptotic(n, p, kind);
    rep.rel_err_pole = abs(rep.pole_approx / rep.exact - 1);
    rep.rel_err_printed = abs(rep.printed / rep.exact - 1);
    return rep;
}

}  // namespace hexcacti
