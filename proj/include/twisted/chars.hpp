#pragma once

#include "twisted/rational.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twisted {

/// Conjugacy class of S_n: counts[k-1] is the number of k-cycles.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<unsigned> counts);

    [[nodiscard]] const std::vector<unsigned>& counts() const { return counts_; }
    /// a_k, zero beyond the stored length.
    [[nodiscard]] unsigned count(int k) const;
    [[nodiscard]] unsigned n() const { return n_; }
    [[nodiscard]] std::string str() const;

    auto operator<=>(const CycleType&) const = default;

private:
    std::vector<unsigned> counts_;
    unsigned n_ = 0;
};

/// Exponent sequence lambda = (lambda_1, ..., lambda_l) indexing binom(X, lambda).
class LambdaSpec {
public:
    LambdaSpec() = default;
    explicit LambdaSpec(std::vector<unsigned> parts);
    /// "0", "1", "0,1", "2,0,1"
    static LambdaSpec parse(std::string_view text);

    [[nodiscard]] const std::vector<unsigned>& parts() const { return parts_; }
    [[nodiscard]] unsigned part(int k) const;
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    /// |lambda| = sum k * lambda_k
    [[nodiscard]] unsigned weight() const { return weight_; }
    /// Comma-separated, "0" for the empty sequence.
    [[nodiscard]] std::string str() const;

    auto operator<=>(const LambdaSpec&) const = default;

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/// Class function written in the basis {binom(X, lambda)}.
class CharPoly {
public:
    using Terms = std::map<LambdaSpec, Rational>;

    CharPoly() = default;
    explicit CharPoly(Terms terms);
    static CharPoly basis(const LambdaSpec& lambda, const Rational& c = Rational(1));
    static CharPoly constant(const Rational& c) { return basis(LambdaSpec{}, c); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] Rational coefficient(const LambdaSpec& lambda) const;
    [[nodiscard]] std::string str() const;

    CharPoly& operator+=(const CharPoly& o);
    friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
    friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a += b * Rational(-1); }
    friend CharPoly operator*(CharPoly a, const Rational& s);
    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    Terms terms_;
};

/// sum_lambda coeff * prod_k binom(a_k, lambda_k)
Rational eval_charpoly(const CharPoly& p, const CycleType& c);

/// max |lambda| over the terms; throws std::domain_error for the zero polynomial.
int degree(const CharPoly& p);

/// Polynomial in X_1, X_2, ... in the monomial basis: exponent vector -> coefficient.
using MonomialPoly = std::map<std::vector<unsigned>, Rational>;

MonomialPoly monomial_product(const MonomialPoly& a, const MonomialPoly& b);
Rational eval_monomials(const MonomialPoly& p, const CycleType& c);

/// Rewrites X^e = sum_j S(e, j) j! binom(X, j) per variable and distributes.
CharPoly monomials_to_binomial(const MonomialPoly& expr);

/// Stirling numbers of the second kind S(e, j).
BigInt stirling2(unsigned e, unsigned j);

/// sum_{mu |- n} values(mu) binom(X, a(mu)); throws if a partition of n is missing.
CharPoly class_function_to_binomial(unsigned n, const std::map<CycleType, Rational>& values);

/// "V1", "V11" or "V2".
CharPoly builtin_rep(std::string_view name);
bool is_builtin_rep(std::string_view name);

/// All partitions of n as cycle-count vectors, in a fixed order.
std::vector<CycleType> partitions(unsigned n);

/// prod_k k^{a_k} a_k!
BigInt centralizer_order(const CycleType& c);
BigInt centralizer_order(const LambdaSpec& lambda);

/// Parses the character-polynomial grammar: rationals, X1..X9, C(Xk, m), + - * and parentheses.
CharPoly parse_charpoly(std::string_view text);

/// Builtin name or expression.
CharPoly parse_rep(std::string_view text);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace twisted
