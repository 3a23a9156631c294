#pragma once

#include "twisted/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace twisted {

/// Dense univariate polynomial with rational coefficients, ascending degree.
/// Trailing zeros are stripped; the zero polynomial has degree -1.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }
    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
    /// c * x^k
    static Poly monomial(const Rational& c, int k);

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] Rational operator[](int i) const;
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
    [[nodiscard]] Rational lead() const;

    [[nodiscard]] Rational eval(const Rational& x) const;
    /// p(c*x)
    [[nodiscard]] Poly scale_variable(const Rational& c) const;
    [[nodiscard]] Poly monic() const;
    [[nodiscard]] std::string str(const std::string& var = "x") const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a * Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on a zero divisor.
    [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& d) const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd over Q. gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Ratio of polynomials, reduced by their gcd. The representation is
/// normalised so that the denominator's lowest nonzero coefficient is 1
/// (when the denominator has a nonzero constant term, that term is 1).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly::constant(1)) {}
    RationalFunction(Poly num, Poly den);
    RationalFunction(const Poly& p) : RationalFunction(p, Poly::constant(1)) {}  // NOLINT
    static RationalFunction constant(const Rational& c) { return {Poly::constant(c)}; }

    [[nodiscard]] const Poly& num() const { return num_; }
    [[nodiscard]] const Poly& den() const { return den_; }
    [[nodiscard]] Rational eval(const Rational& x) const;
    /// f(c*x)
    [[nodiscard]] RationalFunction scale_variable(const Rational& c) const;
    /// f(x^k)
    [[nodiscard]] RationalFunction compose_power(int k) const;
    [[nodiscard]] std::string str(const std::string& var = "x") const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const Rational& s);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Poly num_;
    Poly den_;
};

/// a_i = sum_{k=1..N} c_k a_{i-k} for every i >= valid_from.
///
/// valid_from never references a negative index: it is at least N.
struct RecurrenceSpec {
    std::vector<Rational> coefficients;  // c_1..c_N
    int valid_from = 0;

    [[nodiscard]] int length() const { return static_cast<int>(coefficients.size()); }
    /// Checks the recurrence on seq[valid_from .. seq.size()-1].
    [[nodiscard]] bool holds_on(const std::vector<Rational>& seq) const;
};

/// First n+1 Taylor coefficients of f at 0.
std::vector<Rational> taylor_coeffs(const RationalFunction& f, int n);

/// lim_{n} a_n / c^n where f = sum a_n t^n = H(t) / (1 - c t), i.e. H(1/c).
/// Rejects a non-simple pole at 1/c and the absence of a pole there.
Rational stable_limit(const RationalFunction& f, const Rational& c);

/// Recurrence read off the denominator 1 - sum c_k z^k.
RecurrenceSpec recurrence_from_ratfun(const RationalFunction& f);

// Truncated univariate power series helpers, all exact and truncated at t^order.
namespace truncated {
std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int order);
std::vector<Rational> inverse(const std::vector<Rational>& a, int order);
std::vector<Rational> exp(const std::vector<Rational>& a, int order);
}  // namespace truncated

}  // namespace twisted
