#include "latsieve/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace latsieve {

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int round_rat(const Rat& q) {
    // floor(q + 1/2) = floor((2*num + den) / (2*den))
    Int num2 = 2 * q.get_num() + q.get_den();
    Int den2 = 2 * q.get_den();
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    return r;
}

double to_double(const Rat& q) { return q.get_d(); }

double to_double(const Int& z) { return z.get_d(); }

double log_int(const Int& z) {
    if (z <= 0) throw std::domain_error("log_int: argument must be positive");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_rat(const Rat& q) {
    if (q <= 0) throw std::domain_error("log_rat: argument must be positive");
    return log_int(q.get_num()) - log_int(q.get_den());
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat q(s);
        q.canonicalize();
        if (q.get_den() == 0) throw std::invalid_argument("rat_from_string: zero denominator");
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(Int(s, 10));
    // decimal: digits before and after the point
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("rat_from_string: malformed number '" + s + "'");
    Int num(digits, 10);
    Int den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace latsieve
