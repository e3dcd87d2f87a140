#include "lwc/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace lwc {

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos) throw std::invalid_argument("bad rational: " + raw);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t scale = s.size() - dot - 1;
        BigInt num(digits.empty() || digits == "-" ? "0" : digits, 10);
        BigInt den = 1;
        for (std::size_t i = 0; i < scale; ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + raw);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + raw);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str() + "/1";
    return q.get_str();
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt matchings_count(unsigned n) {
    if (n % 2) throw std::invalid_argument("matchings of an odd set");
    if (n == 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), n - 1);
    return r;
}

BigInt falling(long n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= BigInt(n - static_cast<long>(i));
    return r;
}

BigInt falling_double(long n, unsigned k) {
    if (k % 2) throw std::invalid_argument("falling_double needs even k");
    BigInt r = 1;
    for (unsigned i = 0; i < k; i += 2) r *= BigInt(n - 1 - static_cast<long>(i));
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

double log_factorial(double n) { return std::lgamma(n + 1.0); }

}  // namespace lwc
