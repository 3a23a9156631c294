#include "twisted/tori.hpp"

#include <stdexcept>

namespace twisted {

BigInt gl_order(int n, const BigInt& q) {
    if (n < 0) throw std::invalid_argument("gl_order: negative n");
    const BigInt qn = ipow(q, static_cast<unsigned long>(n));
    BigInt g = 1;
    for (int i = 0; i < n; ++i) g *= qn - ipow(q, static_cast<unsigned long>(i));
    return g;
}

std::vector<Rational> euler_product_coeffs(const BigInt& q, int order) {
    // [t^n] = q^{n(n-1)/2} / prod_{j=1}^n (q^j - 1)
    std::vector<Rational> e(static_cast<size_t>(order) + 1);
    e[0] = Rational(1);
    for (int n = 1; n <= order; ++n)
        e[static_cast<size_t>(n)] = e[static_cast<size_t>(n - 1)] *
                                    Rational(ipow(q, static_cast<unsigned long>(n - 1)),
                                             ipow(q, static_cast<unsigned long>(n)) - 1);
    return e;
}

std::vector<Rational> fulman_weighted_series(const LambdaSpec& lambda, const BigInt& q, int order) {
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    const int w = static_cast<int>(lambda.weight());
    if (w > order) return out;
    Rational pre = Rational(centralizer_order(lambda)).inverse();
    for (int k = 1; k <= lambda.length(); ++k)
        pre = pre / Rational(ipow(ipow(q, static_cast<unsigned long>(k)) - 1, lambda.part(k)));
    const std::vector<Rational> e = euler_product_coeffs(q, order - w);
    for (int n = w; n <= order; ++n) out[static_cast<size_t>(n)] = pre * e[static_cast<size_t>(n - w)];
    return out;
}

BigInt tori_of_type(const CycleType& mu, const BigInt& q) {
    BigInt den = centralizer_order(mu);
    for (int k = 1; k <= static_cast<int>(mu.counts().size()); ++k)
        den *= ipow(ipow(q, static_cast<unsigned long>(k)) - 1, mu.count(k));
    const BigInt g = gl_order(static_cast<int>(mu.n()), q);
    if (g % den != 0) throw std::logic_error("tori_of_type: non-integral count for " + mu.str());
    return g / den;
}

Rational tori_partition_oracle(const CharPoly& P, const BigInt& q, int n) {
    Rational total;
    for (const auto& mu : partitions(static_cast<unsigned>(n)))
        total += Rational(tori_of_type(mu, q)) * eval_charpoly(P, mu);
    return total;
}

Rational tori_weighted_count(const CharPoly& P, const BigInt& q, int n) {
    Rational total;
    for (const auto& [lambda, c] : P.terms())
        total += c * fulman_weighted_series(lambda, q, n)[static_cast<size_t>(n)];
    return total * Rational(gl_order(n, q));
}

namespace {

// s *= 1/(1 - z^k), in place on the stored window (floor 0).
void divide_one_minus_z_power(BiSeries& s, int k) {
    for (int n = 0; n <= s.t_order(); ++n)
        for (int e = k; e <= s.z_ceil(); ++e) s.add_to(n, e, s.ref(n, e - k));
}

// s *= 1/(1 - t z^j)
void divide_one_minus_t_z_power(BiSeries& s, int j) {
    for (int n = 1; n <= s.t_order(); ++n)
        for (int e = j; e <= s.z_ceil(); ++e) s.add_to(n, e, s.ref(n - 1, e - j));
}

}  // namespace

BiSeries psi_series(const LambdaSpec& lambda, int z_ceil, int max_n) {
    if (z_ceil < 0 || max_n < 0) throw std::invalid_argument("psi_series: negative bound");
    const int w = static_cast<int>(lambda.weight());
    if (w > max_n) return BiSeries(max_n, 0, z_ceil);
    BiSeries s = BiSeries::monomial(Rational(centralizer_order(lambda)).inverse(), w, 0, max_n, 0, z_ceil);
    for (int k = 1; k <= lambda.length(); ++k)
        for (unsigned j = 0; j < lambda.part(k); ++j) divide_one_minus_z_power(s, k);
    // factors with j > z_ceil only touch z-powers above the window
    for (int j = 0; j <= z_ceil; ++j) divide_one_minus_t_z_power(s, j);
    return s;
}

BiSeries psi_series(const CharPoly& P, int z_ceil, int max_n) {
    BiSeries acc(max_n, 0, z_ceil);
    for (const auto& [lambda, c] : P.terms()) acc = series_add(acc, psi_series(lambda, z_ceil, max_n) * c);
    return acc;
}

int tori_z_ceiling(int max_i, int max_n) { return max_i + max_n * (max_n + 1) / 2; }

BettiTable betti_table_tori(const CharPoly& P, int max_i, int max_n) {
    if (max_i < 0 || max_n < 0) throw std::invalid_argument("betti_table_tori: negative bound");
    const int ceil = tori_z_ceiling(max_i, max_n);
    const BiSeries psi = psi_series(P, ceil, max_n);
    BettiTable t{P, max_i, max_n, BettiKind::Tori, {}};
    t.entries.assign(static_cast<size_t>(max_i) + 1, std::vector<Rational>(static_cast<size_t>(max_n) + 1));
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Rational> c(static_cast<size_t>(ceil) + 1);
        for (int e = 0; e <= ceil; ++e) c[static_cast<size_t>(e)] = psi.ref(n, e);
        // multiply by prod_{j=1}^n (1 - z^j)
        for (int j = 1; j <= n; ++j)
            for (int e = ceil; e >= j; --e) c[static_cast<size_t>(e)] -= c[static_cast<size_t>(e - j)];
        for (int i = 0; i <= max_i; ++i) t.entries[static_cast<size_t>(i)][static_cast<size_t>(n)] = c[static_cast<size_t>(i)];
    }
    return t;
}

RationalFunction stable_psi(const CharPoly& P) {
    RationalFunction acc;
    for (const auto& [lambda, c] : P.terms()) {
        Poly den = Poly::constant(1);
        for (int k = 1; k <= lambda.length(); ++k)
            for (unsigned j = 0; j < lambda.part(k); ++j) den = den * (Poly::constant(1) - Poly::monomial(1, k));
        acc = acc + RationalFunction(Poly::constant(c / Rational(centralizer_order(lambda))), den);
    }
    return acc;
}

std::vector<Rational> stable_betti_tori(const CharPoly& P, int max_i) { return taylor_coeffs(stable_psi(P), max_i); }

RecurrenceSpec recurrence_tori(const CharPoly& P) { return recurrence_from_ratfun(stable_psi(P)); }

GlCheck gl_crosscheck_tori(const CharPoly& P, const BigInt& q, int n) {
    if (n < 0) throw std::invalid_argument("gl_crosscheck_tori: negative n");
    GlCheck out;
    out.lhs = tori_partition_oracle(P, q, n);
    const int top = n * (n - 1) / 2;
    const BettiTable t = betti_table_tori(P, top, n);
    const Rational qr{q};
    for (int i = 0; i <= top; ++i) out.rhs += t.at(i, n) * qr.pow(2 * top - i);
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace twisted
