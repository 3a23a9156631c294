#pragma once

#include "twisted/poly.hpp"
#include "twisted/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace twisted {

/// Arithmetic of a variety over F_q: either its zeta function Z(V, t) or a
/// finite list of point counts |V(F_{q^m})|, m = 1..M.
struct PointCountData {
    BigInt q;
    int dim = 1;
    std::variant<RationalFunction, std::vector<BigInt>> source;
    std::string label;

    [[nodiscard]] bool has_zeta() const { return std::holds_alternative<RationalFunction>(source); }
    /// Throws std::domain_error when only counts were supplied.
    [[nodiscard]] const RationalFunction& zeta() const;
    /// Largest m with a known count; unbounded (INT_MAX) for a zeta source.
    [[nodiscard]] int count_depth() const;
};

class InsufficientData : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

int mobius(int n);
bool is_prime(long long n);
bool is_prime_power(const BigInt& q);

/// M_k(x) = (1/k) sum_{j | k} mu(k/j) x^j
Poly necklace_poly(int k);

/// |V(F_{q^m})| for m = 1..depth, read directly or from the zeta expansion.
std::vector<BigInt> point_counts(const PointCountData& v, int depth);

/// M_1..M_K, the number of closed points of each degree; each must be a nonnegative integer.
std::vector<BigInt> closed_point_counts(const PointCountData& v, int k_max);

/// Truncated Euler product prod_k (1 - t^k)^{-M_k} through t^order.
std::vector<Rational> zeta_from_counts(const PointCountData& v, int order);

enum class VarietyKind { Affine, Projective };

/// affine(d): 1/(1 - q^d t); projective(d): prod_{i=0..d} 1/(1 - q^i t).
PointCountData builtin_variety(VarietyKind kind, int d, const BigInt& q);

/// Text format, one `key = value` per line, '#' comments:
///   q = 3
///   dim = 1
///   zeta_num = 1            (ascending integer coefficients)
///   zeta_den = 1, -3
/// or `counts = 3, 9, 27` in place of the zeta fields.
PointCountData parse_variety(std::string_view text);
PointCountData load_variety_file(const std::string& path);

/// "affine:d", "projective:d" or "file:PATH"; q is ignored for files (they carry their own).
PointCountData resolve_variety(std::string_view spec, const std::optional<BigInt>& q);

}  // namespace twisted
