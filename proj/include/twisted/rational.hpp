#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace twisted {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that no
/// expression template ever escapes into user code (`auto x = a * b` is safe).
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}                      // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}                       // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : v_(v) {}             // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return v_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return v_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const { return v_.get_str(); }
    [[nodiscard]] double to_double() const { return v_.get_d(); }

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational pow(long e) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    [[nodiscard]] const mpq_class& raw() const { return v_; }

    /// this += a * b, without temporaries beyond GMP's own.
    void add_product(const Rational& a, const Rational& b);

private:
    mpq_class v_;
};

/// Binomial coefficient binom(x, m) = x(x-1)...(x-m+1)/m! for any rational x.
Rational binomial(const Rational& x, long m);

/// Exact integer binomial; zero when 0 <= n < m.
BigInt binomial(const BigInt& n, unsigned long m);

BigInt factorial(unsigned long n);

BigInt ipow(const BigInt& base, unsigned long e);

/// Requires an integral value; throws std::domain_error otherwise.
BigInt to_integer(const Rational& r);

}  // namespace twisted
