#include "twisted/rational.hpp"

#include <stdexcept>
#include <string>

namespace twisted {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    // mpq_class accepts "p/q" but does not canonicalize and rejects stray spaces.
    auto trim = [](std::string& x) {
        const auto b = x.find_first_not_of(" \t");
        const auto e = x.find_last_not_of(" \t");
        x = (b == std::string::npos) ? std::string() : x.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (s.front() == '+') s.erase(0, 1);
            return Rational(BigInt(s, 10));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        trim(num);
        trim(den);
        if (!num.empty() && num.front() == '+') num.erase(0, 1);
        return Rational(BigInt(num, 10), BigInt(den, 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return;
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    v_ += t;
}

Rational binomial(const Rational& x, long m) {
    if (m < 0) return Rational(0);
    Rational r(1);
    for (long j = 0; j < m; ++j) {
        r *= (x - Rational(j));
        r /= Rational(j + 1);
    }
    return r;
}

BigInt binomial(const BigInt& n, unsigned long m) {
    if (n < 0) throw std::domain_error("integer binomial with negative top");
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), m);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigInt to_integer(const Rational& r) {
    if (!r.is_integer()) throw std::domain_error("expected an integer, got " + r.str());
    return r.numerator();
}

}  // namespace twisted
