#pragma once

#include "twisted/poly.hpp"
#include "twisted/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace twisted {

/// Finite Laurent polynomial in z: sum_{e=low}^{low+size-1} c_e z^e, exact everywhere.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int low, std::vector<Rational> coeffs);
    static LaurentPoly constant(const Rational& c) { return {0, {c}}; }
    static LaurentPoly monomial(const Rational& c, int e) { return {e, {c}}; }
    /// p(z^{-1})
    static LaurentPoly from_poly_in_inverse(const Poly& p);

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// Smallest exponent with a nonzero coefficient; 0 for the zero polynomial.
    [[nodiscard]] int min_exp() const { return low_; }
    [[nodiscard]] int max_exp() const { return low_ + static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] Rational coeff(int e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += o * Rational(-1); }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }

    [[nodiscard]] std::string str(const std::string& var = "z") const;

private:
    void normalize();
    int low_ = 0;
    std::vector<Rational> c_;
};

/// binom(S, m) = S(S-1)...(S-m+1)/m!
LaurentPoly series_binomial(const LaurentPoly& s, int m);

/// Signals that a requested operation cannot guarantee any exact coefficient.
class WindowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truncated bivariate series sum_{n<=N} sum_e c_{n,e} z^e t^n.
///
/// Window contract: every coefficient with exponent below z_floor is zero;
/// coefficients with exponent in [z_floor, z_ceil] and n <= t_order are exact;
/// anything above z_ceil has been discarded and is unknown.
class BiSeries {
public:
    BiSeries(int t_order, int z_floor, int z_ceil);

    static BiSeries one(int t_order, int z_ceil) { return constant(Rational(1), t_order, z_ceil); }
    static BiSeries constant(const Rational& c, int t_order, int z_ceil);
    /// L(z) * t^0, kept on [min(L.min_exp, 0), z_ceil].
    static BiSeries from_laurent(const LaurentPoly& l, int t_order, int z_ceil);
    /// c * z^e * t^n
    static BiSeries monomial(const Rational& c, int n, int e, int t_order, int z_floor, int z_ceil);

    [[nodiscard]] int t_order() const { return t_order_; }
    [[nodiscard]] int z_floor() const { return z_floor_; }
    [[nodiscard]] int z_ceil() const { return z_ceil_; }

    /// Exact coefficient of z^e t^n; throws WindowError outside the guaranteed window.
    [[nodiscard]] Rational coeff(int n, int e) const;
    /// The t^n coefficient as a Laurent polynomial over the window.
    [[nodiscard]] LaurentPoly t_coeff(int n) const;
    /// Unchecked reference into the stored window.
    [[nodiscard]] const Rational& ref(int n, int e) const { return at(n, e); }
    void set(int n, int e, const Rational& v);
    void add_to(int n, int e, const Rational& v);

    /// True when no coefficient below z^0 is nonzero.
    [[nodiscard]] bool no_negative_powers() const;
    /// Shrinks to [new_floor, new_ceil]; raising the floor requires the dropped band to be zero.
    [[nodiscard]] BiSeries restricted(int new_floor, int new_ceil) const;
    [[nodiscard]] BiSeries truncated(int t_order) const;

    friend BiSeries operator*(BiSeries a, const Rational& s);

private:
    friend BiSeries series_add(const BiSeries&, const BiSeries&);
    friend BiSeries series_mul(const BiSeries&, const BiSeries&);
    friend BiSeries series_mul(const LaurentPoly&, const BiSeries&);
    friend BiSeries series_inverse(const BiSeries&);

    [[nodiscard]] const Rational& at(int n, int e) const {
        return data_[static_cast<size_t>(n) * width_ + static_cast<size_t>(e - z_floor_)];
    }
    Rational& at(int n, int e) {
        return data_[static_cast<size_t>(n) * width_ + static_cast<size_t>(e - z_floor_)];
    }

    int t_order_;
    int z_floor_;
    int z_ceil_;
    size_t width_;
    std::vector<Rational> data_;
};

/// Coefficientwise sum on [min floor, min ceil], t-order the minimum.
BiSeries series_add(const BiSeries& a, const BiSeries& b);
BiSeries series_sub(const BiSeries& a, const BiSeries& b);

/// Cauchy product; exact on [fa+fb, min(ca+fb, cb+fa)]. Throws WindowError if that is empty.
BiSeries series_mul(const BiSeries& a, const BiSeries& b);

/// Product with a finite Laurent polynomial; exact on [L.min+fb, cb+L.min].
BiSeries series_mul(const LaurentPoly& l, const BiSeries& b);

/// Multiplicative inverse. The t^0 coefficient must be a power series in z with
/// nonzero constant term (in particular, a nonzero constant). Result window is [0, z_ceil].
BiSeries series_inverse(const BiSeries& a);

BiSeries series_binomial(const BiSeries& s, int m);

}  // namespace twisted
