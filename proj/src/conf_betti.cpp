#include "twisted/conf_betti.hpp"

#include "twisted/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace twisted {

bool BettiTable::in_support(int i, int n) const {
    if (kind == BettiKind::Conf) return i <= std::max(n - 1, 0);
    return i <= n * (n - 1) / 2;
}

BiSeries phi_series(const LambdaSpec& lambda, int max_i, int max_n) {
    if (max_i < 0 || max_n < 0) throw std::invalid_argument("phi_series: negative bound");
    const int w = static_cast<int>(lambda.weight());
    // z^{-|lambda|} is the most negative power the binomials contribute, so carrying
    // |lambda| extra exponents keeps z^0..z^I exact after multiplying them in.
    const int ceil = max_i + w;

    BiSeries g = series_inverse(series_sub(BiSeries::one(max_n, ceil), BiSeries::monomial(1, 1, 0, max_n, 0, ceil)));
    g = series_sub(g, series_mul(BiSeries::monomial(1, 2, 1, max_n, 0, ceil), g));

    LaurentPoly binoms = LaurentPoly::constant(1);
    for (int ki = 1; ki <= lambda.length(); ++ki) {
        const int lk = static_cast<int>(lambda.part(ki));
        if (lk == 0) continue;
        binoms = binoms * series_binomial(LaurentPoly::from_poly_in_inverse(necklace_poly(ki)), lk);
        // ((tz)^k / (1 + (tz)^k))^{l_k}
        const BiSeries inv = series_inverse(
            series_add(BiSeries::one(max_n, ceil), BiSeries::monomial(1, ki, ki, max_n, 0, ceil)));
        for (int j = 0; j < lk; ++j) g = series_mul(g, inv);
        g = series_mul(BiSeries::monomial(1, ki * lk, ki * lk, max_n, 0, ceil), g);
    }

    const BiSeries phi = series_mul(binoms, g);
    if (!phi.no_negative_powers())
        throw std::logic_error("phi_series: negative z-powers failed to cancel for lambda = " + lambda.str());
    return phi.restricted(0, max_i);
}

BiSeries phi_series(const CharPoly& P, int max_i, int max_n) {
    BiSeries acc(max_n, 0, max_i);
    for (const auto& [lambda, c] : P.terms()) acc = series_add(acc, phi_series(lambda, max_i, max_n) * c);
    return acc;
}

std::optional<int> series_slope(const BiSeries& s) {
    std::optional<int> best;
    for (int n = 0; n <= s.t_order(); ++n)
        for (int e = s.z_floor(); e <= s.z_ceil(); ++e)
            if (!s.ref(n, e).is_zero() && (!best || n - e > *best)) best = n - e;
    return best;
}

BettiTable betti_table_conf(const CharPoly& P, int max_i, int max_n) {
    const BiSeries phi = phi_series(P, max_i, max_n);
    BettiTable t{P, max_i, max_n, BettiKind::Conf, {}};
    t.entries.assign(static_cast<size_t>(max_i) + 1, std::vector<Rational>(static_cast<size_t>(max_n) + 1));
    for (int i = 0; i <= max_i; ++i)
        for (int n = 0; n <= max_n; ++n) {
            const Rational c = phi.coeff(n, i);
            t.entries[static_cast<size_t>(i)][static_cast<size_t>(n)] = (i % 2) ? -c : c;
        }
    return t;
}

RationalFunction stable_phi(const LambdaSpec& lambda) {
    const int w = static_cast<int>(lambda.weight());
    LaurentPoly binoms = LaurentPoly::constant(1);
    Poly den = Poly::constant(1);
    for (int ki = 1; ki <= lambda.length(); ++ki) {
        const int lk = static_cast<int>(lambda.part(ki));
        if (lk == 0) continue;
        binoms = binoms * series_binomial(LaurentPoly::from_poly_in_inverse(necklace_poly(ki)), lk);
        const Poly one_plus = Poly::constant(1) + Poly::monomial(1, ki);
        for (int j = 0; j < lk; ++j) den = den * one_plus;
    }
    // z^{|lambda|} * binoms is a polynomial since binom(M_k(z^-1), l_k) has degree >= -k l_k.
    std::vector<Rational> num(static_cast<size_t>(std::max(binoms.max_exp() + w, 0)) + 1);
    for (int e = binoms.min_exp(); e <= binoms.max_exp(); ++e) {
        if (e + w < 0) throw std::logic_error("stable_phi: unexpected pole at z = 0");
        num[static_cast<size_t>(e + w)] = binoms.coeff(e);
    }
    return {Poly(std::move(num)) * Poly{Rational(1), Rational(-1)}, den};
}

RationalFunction stable_phi(const CharPoly& P) {
    RationalFunction acc;
    for (const auto& [lambda, c] : P.terms()) acc = acc + stable_phi(lambda) * c;
    return acc;
}

std::vector<Rational> stable_betti_conf(const CharPoly& P, int max_i) {
    std::vector<Rational> a = taylor_coeffs(stable_phi(P).scale_variable(Rational(-1)), max_i);
    return a;
}

RecurrenceSpec recurrence_conf(const CharPoly& P) {
    return recurrence_from_ratfun(stable_phi(P).scale_variable(Rational(-1)));
}

bool StabilityReport::all_hold() const {
    return std::all_of(rows.begin(), rows.end(), [](const StabilityRow& r) { return r.holds; });
}

StabilityReport stability_check(const CharPoly& P, int max_i, int max_n) {
    const int d = P.is_zero() ? 0 : degree(P);
    if (max_n < max_i + d + 2)
        throw std::invalid_argument("stability check needs N >= I + deg P + 2 = " + std::to_string(max_i + d + 2));
    const BettiTable t = betti_table_conf(P, max_i, max_n);
    StabilityReport report;
    for (int i = 0; i <= max_i; ++i) {
        StabilityRow row{i, i + d + 1, max_n, true};
        for (int n = row.bound; n < max_n; ++n)
            if (t.at(i, n) != t.at(i, n + 1)) row.holds = false;
        while (row.first_stable > 0 && t.at(i, row.first_stable - 1) == t.at(i, max_n)) --row.first_stable;
        report.rows.push_back(row);
    }
    return report;
}

GlCheck gl_crosscheck_conf(const CharPoly& P, const BigInt& q, int n, bool with_bruteforce, long long guard) {
    if (n < 0) throw std::invalid_argument("gl_crosscheck_conf: negative n");
    const PointCountData line = builtin_variety(VarietyKind::Affine, 1, q);
    GlCheck out;
    out.lhs = partition_weighted_count(line, P, n);

    // H^i vanishes for i > n - 1, so I = n covers every contributing row.
    const BettiTable t = betti_table_conf(P, n, n);
    const Rational qr{q};
    for (int i = 0; i <= n; ++i)
        out.rhs += t.at(i, n) * qr.pow(n - i) * Rational(i % 2 ? -1 : 1);

    if (with_bruteforce) {
        if (!q.fits_sint_p() || !is_prime(q.get_si()))
            throw std::invalid_argument("brute force needs a prime q, got " + q.get_str());
        out.bruteforce = bruteforce_conf_a1(static_cast<int>(q.get_si()), n, P, guard);
    }
    out.equal = out.lhs == out.rhs && (!out.bruteforce || *out.bruteforce == out.lhs);
    return out;
}

}  // namespace twisted
