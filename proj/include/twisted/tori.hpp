#pragma once

#include "twisted/biseries.hpp"
#include "twisted/chars.hpp"
#include "twisted/conf_betti.hpp"
#include "twisted/poly.hpp"

#include <optional>
#include <vector>

namespace twisted {

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)
BigInt gl_order(int n, const BigInt& q);

/// Coefficients t^0..t^N of prod_{i>=1} 1/(1 - q^{-i} t).
std::vector<Rational> euler_product_coeffs(const BigInt& q, int order);

/// Coefficients t^0..t^N of (1/z_lambda) prod_k (t^k/(q^k - 1))^{lambda_k} * prod_{i>=1} 1/(1 - q^{-i} t),
/// whose t^n term is |GL_n(F_q)|^{-1} sum_{T in T_n(F_q)} binom(X, lambda)(sigma_T).
std::vector<Rational> fulman_weighted_series(const LambdaSpec& lambda, const BigInt& q, int order);

/// Number of maximal tori of GL_n(F_q) with Frobenius of type mu: |GL_n| / (z_mu prod_k (q^k - 1)^{a_k}).
BigInt tori_of_type(const CycleType& mu, const BigInt& q);

/// sum over T_n(F_q) of P(sigma_T), summed over cycle types.
Rational tori_partition_oracle(const CharPoly& P, const BigInt& q, int n);

/// Same sum read off the generating series.
Rational tori_weighted_count(const CharPoly& P, const BigInt& q, int n);

/// Psi_lambda(z, t) = prod_k (1/lambda_k!) (t^k / (k (1 - z^k)))^{lambda_k} * prod_{j>=0} 1/(1 - t z^j),
/// exact on z^0..z_ceil, t^0..t^N.
BiSeries psi_series(const LambdaSpec& lambda, int z_ceil, int max_n);
BiSeries psi_series(const CharPoly& P, int z_ceil, int max_n);

/// z-ceiling used for a tori table: I + N(N+1)/2, enough to absorb prod_{j<=n} (1 - z^j).
int tori_z_ceiling(int max_i, int max_n);

/// beta_i(n) = [z^i] ( [t^n] Psi_P * prod_{j=1}^n (1 - z^j) )
BettiTable betti_table_tori(const CharPoly& P, int max_i, int max_n);

/// sum_i beta_i z^i in the stable range: sum_lambda c_lambda / z_lambda * prod_k (1 - z^k)^{-lambda_k}.
RationalFunction stable_psi(const CharPoly& P);
std::vector<Rational> stable_betti_tori(const CharPoly& P, int max_i);
RecurrenceSpec recurrence_tori(const CharPoly& P);

/// lhs = sum_T P(sigma_T); rhs = q^{n(n-1)} sum_i beta_i(n) q^{-i}.
GlCheck gl_crosscheck_tori(const CharPoly& P, const BigInt& q, int n);

}  // namespace twisted
