#pragma once

#include "twisted/biseries.hpp"
#include "twisted/chars.hpp"
#include "twisted/conf_counts.hpp"
#include "twisted/poly.hpp"

#include <optional>
#include <vector>

namespace twisted {

enum class BettiKind { Conf, Tori };

/// Grid of twisted Betti numbers, entries[i][n] for 0 <= i <= max_i, 0 <= n <= max_n.
/// Conf tables hold alpha_i(n) = dim H^i(Conf_n(C); P); tori tables hold
/// beta_i(n) = dim H^{2i}(T_n(C); P).
struct BettiTable {
    CharPoly rep;
    int max_i = 0;
    int max_n = 0;
    BettiKind kind = BettiKind::Conf;
    std::vector<std::vector<Rational>> entries;

    [[nodiscard]] const Rational& at(int i, int n) const {
        return entries[static_cast<size_t>(i)][static_cast<size_t>(n)];
    }
    /// Position lies in the cohomological range: i <= n-1 (conf) or i <= n(n-1)/2 (tori).
    [[nodiscard]] bool in_support(int i, int n) const;
};

/// Phi_lambda(z, t) = (1 - z t^2)/(1 - t) prod_k binom(M_k(z^-1), l_k) ((tz)^k / (1 + (tz)^k))^{l_k},
/// exact on z^0..z^I, t^0..t^N. Throws std::logic_error if a negative z-power survives.
BiSeries phi_series(const LambdaSpec& lambda, int max_i, int max_n);

/// sum over terms of coeff * Phi_lambda
BiSeries phi_series(const CharPoly& P, int max_i, int max_n);

/// Largest n - i over nonzero z^i t^n coefficients; nullopt for the zero series.
std::optional<int> series_slope(const BiSeries& s);

/// alpha_i(n) = (-1)^i [z^i t^n] Phi_P
BettiTable betti_table_conf(const CharPoly& P, int max_i, int max_n);

/// sum_i alpha_i (-z)^i as a rational function of z.
RationalFunction stable_phi(const LambdaSpec& lambda);
RationalFunction stable_phi(const CharPoly& P);

/// Stable alpha_0..alpha_I.
std::vector<Rational> stable_betti_conf(const CharPoly& P, int max_i);

/// Recurrence for the unsigned stable sequence alpha_i.
RecurrenceSpec recurrence_conf(const CharPoly& P);

struct StabilityRow {
    int i = 0;
    int bound = 0;          // i + deg P + 1
    int first_stable = 0;   // smallest n0 with alpha_i(n) constant for n0 <= n <= max_n
    bool holds = false;     // alpha_i(n) = alpha_i(n+1) for bound <= n < max_n
};

struct StabilityReport {
    std::vector<StabilityRow> rows;
    [[nodiscard]] bool all_hold() const;
};

/// Requires max_n >= max_i + deg P + 2.
StabilityReport stability_check(const CharPoly& P, int max_i, int max_n);

struct GlCheck {
    Rational lhs;                        // point count via cycle-type partition sum
    Rational rhs;                        // Betti-number side
    std::optional<Rational> bruteforce;  // explicit enumeration, when requested
    bool equal = false;
};

/// lhs = sum_C P(sigma_C) over Conf_n A^1(F_q); rhs = q^n sum_i (-1)^i alpha_i(n) q^{-i}.
GlCheck gl_crosscheck_conf(const CharPoly& P, const BigInt& q, int n, bool with_bruteforce = false,
                           long long guard = kDefaultBruteForceGuard);

}  // namespace twisted
