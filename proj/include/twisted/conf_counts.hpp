#pragma once

#include "twisted/chars.hpp"
#include "twisted/rational.hpp"
#include "twisted/zeta.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace twisted {

/// Polynomial over the prime field F_p, coefficients ascending, trailing zeros stripped.
class FqPoly {
public:
    FqPoly(int p, std::vector<int> coeffs);

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    [[nodiscard]] const std::vector<int>& coeffs() const { return c_; }

    [[nodiscard]] FqPoly derivative() const;
    [[nodiscard]] std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;
    [[nodiscard]] bool is_squarefree() const;
    /// Degrees of the monic irreducible factors, by trial division (square-free input).
    [[nodiscard]] std::vector<int> factor_degrees() const;

    friend FqPoly gcd(FqPoly a, FqPoly b);
    friend bool operator==(const FqPoly&, const FqPoly&) = default;

private:
    int p_;
    std::vector<int> c_;
};

/// Monic irreducible polynomials over F_p of degree exactly d, found by sieving.
std::vector<FqPoly> irreducible_polys(int p, int d);

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultBruteForceGuard = 100'000'000;

/// Cycle-type histogram of all monic square-free degree-n polynomials over F_p
/// (the Frobenius cycle type is the multiset of irreducible factor degrees).
std::map<CycleType, BigInt> bruteforce_cycle_histogram(int p, int n, long long guard = kDefaultBruteForceGuard,
                                                        int threads = 1);

/// sum over Conf_n A^1(F_p) of P(sigma_C) by explicit enumeration.
Rational bruteforce_conf_a1(int p, int n, const CharPoly& P, long long guard = kDefaultBruteForceGuard);

/// Coefficients t^0..t^N of Z(V,t)/Z(V,t^2) * prod_k binom(M_k, lambda_k) (t^k/(1+t^k))^{lambda_k}.
std::vector<Rational> weighted_count_series(const PointCountData& v, const LambdaSpec& lambda, int order);

/// sum over Conf_n V(F_q) of P(sigma_C).
Rational weighted_count(const PointCountData& v, const CharPoly& P, int n);

/// Number of configurations whose Frobenius permutation has cycle type c: prod_k binom(M_k, a_k).
BigInt cycle_type_count(const PointCountData& v, int n, const CycleType& c);

/// sum_{mu |- n} cycle_type_count(mu) P(mu)
Rational partition_weighted_count(const PointCountData& v, const CharPoly& P, int n);

/// The same generating function as an exact rational function of t (needs a zeta source).
RationalFunction weighted_count_ratfun(const PointCountData& v, const LambdaSpec& lambda);

/// lim q^{-nd} sum_C binom(X, lambda)(sigma_C).
Rational limit_normalized(const PointCountData& v, const LambdaSpec& lambda);
Rational limit_normalized(const PointCountData& v, const CharPoly& P);

/// lim of the expected value of binom(X, lambda) on Conf_n V(F_q).
Rational limit_expectation(const PointCountData& v, const LambdaSpec& lambda);

}  // namespace twisted
