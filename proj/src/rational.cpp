#include "hexcacti/rational.hpp"

namespace hexcacti {

std::string rat_str(const BigRat& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigRat parse_rational(const std::string& s) {
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    std::string t = s.substr(first, last - first + 1);

    auto slash = t.find('/');
    if (slash != std::string::npos) {
        BigInt num(t.substr(0, slash));
        BigInt den(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return BigRat(num, den);
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        size_t frac_len = t.size() - dot - 1;
        bool neg = !digits.empty() && (digits[0] == '-' || digits[0] == '+');
        std::string sign = neg ? digits.substr(0, 1) : "";
        std::string body = neg ? digits.substr(1) : digits;
        // Strip leading zeros so the cpp_int parser does not read octal.
        size_t nz = body.find_first_not_of('0');
        body = nz == std::string::npos ? "0" : body.substr(nz);
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad decimal literal: " + s);
        BigInt num(sign + body);
        BigInt den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return BigRat(num, den);
    }
    return BigRat(BigInt(t));
}

Real to_real(const BigRat& q) {
    return Real(boost::multiprecision::numerator(q)) /
           Real(boost::multiprecision::denominator(q));
}

}  // namespace hexcacti
