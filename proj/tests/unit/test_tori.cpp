#include "twisted/tori.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace twisted;

namespace {

Rational R(long p, long q = 1) { return {p, q}; }

std::vector<Rational> seq(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<LambdaSpec> lambdas_up_to(unsigned w) {
    std::vector<LambdaSpec> out;
    for (unsigned n = 0; n <= w; ++n)
        for (const auto& mu : partitions(n)) out.emplace_back(mu.counts());
    return out;
}

// sum over maximal tori of GL_n(F_q) of P(sigma_T), evaluated at any integer q >= 2
// straight from |GL_n| / (z_mu prod_k (q^k - 1)^{a_k}).
Rational tori_count_at(const CharPoly& P, long q, int n) {
    Rational gl(1);
    for (int i = 0; i < n; ++i) gl *= Rational(q).pow(n) - Rational(q).pow(i);
    Rational total;
    for (const auto& mu : partitions(static_cast<unsigned>(n))) {
        Rational den(centralizer_order(mu));
        for (int k = 1; k <= static_cast<int>(mu.counts().size()); ++k)
            den *= (Rational(q).pow(k) - Rational(1)).pow(mu.count(k));
        total += gl / den * eval_charpoly(P, mu);
    }
    return total;
}

// The count is a polynomial of degree n(n-1) in q whose q^{n(n-1)-i} coefficient is beta_i(n).
std::vector<Rational> betas_by_interpolation(const CharPoly& P, int n) {
    const int d = n * (n - 1);
    std::vector<Rational> xs, ys;
    for (long q = 2; q <= d + 2; ++q) {
        xs.emplace_back(q);
        ys.push_back(tori_count_at(P, q, n));
    }
    Poly f;
    for (size_t j = 0; j < xs.size(); ++j) {
        Poly basis = Poly::constant(ys[j]);
        for (size_t m = 0; m < xs.size(); ++m)
            if (m != j) basis = basis * Poly{-xs[m] / (xs[j] - xs[m]), Rational(1) / (xs[j] - xs[m])};
        f += basis;
    }
    REQUIRE(f.degree() <= d);
    std::vector<Rational> beta(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) beta[static_cast<size_t>(i)] = f[d - i];
    return beta;
}

const std::vector<std::string> kReps = {"1", "V1", "V11", "V2"};

}  // namespace

TEST_CASE("general linear group orders", "[tori]") {
    CHECK(gl_order(0, BigInt(5)) == 1);
    CHECK(gl_order(1, BigInt(5)) == 4);
    CHECK(gl_order(2, BigInt(2)) == 6);
    CHECK(gl_order(2, BigInt(3)) == 48);
    CHECK(gl_order(3, BigInt(2)) == 168);
}

TEST_CASE("Euler product against its exponential form", "[tori][oracle]") {
    // log prod_{i>=1} 1/(1 - q^{-i} t) = sum_k t^k / (k (q^k - 1))
    for (long q : {2, 3, 4, 5, 7}) {
        std::vector<Rational> log(13);
        for (int k = 1; k <= 12; ++k) log[static_cast<size_t>(k)] = Rational(1) / (Rational(k) * (Rational(q).pow(k) - 1));
        REQUIRE(euler_product_coeffs(BigInt(q), 12) == truncated::exp(log, 12));
    }
    CHECK(euler_product_coeffs(BigInt(2), 2) == std::vector<Rational>{1, 1, R(2, 3)});
}

TEST_CASE("tori of a given type", "[tori]") {
    for (long q : {2, 3, 5, 7}) {
        // split and anisotropic tori of GL_2
        REQUIRE(tori_of_type(CycleType({2}), BigInt(q)) == q * (q + 1) / 2);
        REQUIRE(tori_of_type(CycleType({0, 1}), BigInt(q)) == q * (q - 1) / 2);
    }
}

TEST_CASE("Steinberg: GL_n(F_q) has q^{n(n-1)} maximal tori", "[tori]") {
    for (long q : {2, 3, 5})
        for (int n = 0; n <= 7; ++n) {
            const Rational expect = Rational(q).pow(n * (n - 1));
            REQUIRE(tori_partition_oracle(CharPoly::constant(1), BigInt(q), n) == expect);
            REQUIRE(tori_weighted_count(CharPoly::constant(1), BigInt(q), n) == expect);
        }
}

TEST_CASE("partition sum and generating series agree", "[tori][oracle]") {
    for (long q : {2, 3, 5})
        for (const auto& lambda : lambdas_up_to(4))
            for (int n = 0; n <= 8; ++n) {
                const CharPoly P = CharPoly::basis(lambda);
                REQUIRE(tori_partition_oracle(P, BigInt(q), n) == tori_weighted_count(P, BigInt(q), n));
            }
    // integer-valued independent evaluation
    for (const auto& name : kReps)
        for (int n = 0; n <= 6; ++n)
            REQUIRE(tori_partition_oracle(parse_rep(name), BigInt(3), n) == tori_count_at(parse_rep(name), 3, n));
}

TEST_CASE("Psi series", "[tori]") {
    // Psi_(0) = prod_{j>=0} 1/(1 - t z^j); its t^n term is 1/((1-z)...(1-z^n))
    const BiSeries s = psi_series(LambdaSpec{}, 8, 4);
    CHECK(s.coeff(0, 0) == 1);
    CHECK(s.coeff(1, 5) == 1);
    CHECK(s.coeff(2, 2) == 2);  // partitions of 2 into parts 1, 2
    CHECK(s.coeff(3, 3) == 3);
    // Psi_(1) starts at t^1 with 1/(1 - z)
    const BiSeries s1 = psi_series(LambdaSpec({1}), 6, 3);
    CHECK(s1.coeff(0, 0) == 0);
    CHECK(s1.coeff(1, 0) == 1);
    CHECK(s1.coeff(1, 4) == 1);
    CHECK(tori_z_ceiling(5, 4) == 15);
}

TEST_CASE("Betti numbers for the trivial and permutation coefficients", "[tori]") {
    const BettiTable one = betti_table_tori(CharPoly::constant(1), 20, 10);
    for (int n = 0; n <= 10; ++n)
        for (int i = 0; i <= 20; ++i) REQUIRE(one.at(i, n) == (i == 0 ? 1 : 0));
    const BettiTable x1 = betti_table_tori(parse_charpoly("X1"), 15, 10);
    for (int n = 1; n <= 10; ++n)
        for (int i = 0; i <= 15; ++i) REQUIRE(x1.at(i, n) == (i <= n - 1 ? 1 : 0));
}

TEST_CASE("tables agree with interpolated tori counts", "[tori][oracle]") {
    for (const auto& name : kReps) {
        const CharPoly P = parse_rep(name);
        const BettiTable t = betti_table_tori(P, 20, 5);
        for (int n = 0; n <= 5; ++n) {
            const auto beta = betas_by_interpolation(P, n);
            for (int i = 0; i <= 20; ++i) {
                const Rational b = i < static_cast<int>(beta.size()) ? beta[static_cast<size_t>(i)] : Rational(0);
                REQUIRE(t.at(i, n) == b);
            }
        }
    }
}

TEST_CASE("a larger z-ceiling leaves the table unchanged", "[tori][property]") {
    for (const auto& name : kReps) {
        const CharPoly P = parse_rep(name);
        const int I = 8, N = 7;
        const BettiTable t = betti_table_tori(P, I, N);
        const BiSeries wide = psi_series(P, tori_z_ceiling(I, N) + 25, N);
        for (int n = 0; n <= N; ++n) {
            // beta(n) = [t^n] Psi * prod_{j<=n} (1 - z^j)
            Poly prod = Poly::constant(1);
            for (int j = 1; j <= n; ++j) prod = prod * (Poly::constant(1) - Poly::monomial(1, j));
            for (int i = 0; i <= I; ++i) {
                Rational b;
                for (int e = 0; e <= i && e <= prod.degree(); ++e) b += prod[e] * wide.coeff(n, i - e);
                REQUIRE(t.at(i, n) == b);
            }
        }
    }
}

TEST_CASE("genuine representations give nonnegative integers on tori", "[tori][property]") {
    const std::vector<std::pair<std::string, int>> reps = {{"1", 0}, {"V1", 2}, {"V11", 3}, {"V2", 4}};
    for (const auto& [name, from] : reps) {
        const BettiTable t = betti_table_tori(parse_rep(name), 12, 8);
        for (int n = from; n <= 8; ++n)
            for (int i = 0; i <= 12; ++i) {
                REQUIRE(t.at(i, n).is_integer());
                REQUIRE(t.at(i, n).sign() >= 0);
                if (!t.in_support(i, n)) REQUIRE(t.at(i, n).is_zero());
            }
    }
}

TEST_CASE("stable tori generating functions", "[tori]") {
    CHECK(stable_betti_tori(CharPoly::constant(1), 4) == seq({1, 0, 0, 0, 0}));
    CHECK(stable_betti_tori(parse_charpoly("X1"), 4) == seq({1, 1, 1, 1, 1}));
    CHECK(stable_betti_tori(CharPoly::basis(LambdaSpec({0, 1})), 5) ==
          std::vector<Rational>{R(1, 2), 0, R(1, 2), 0, R(1, 2), 0});
    CHECK(stable_betti_tori(CharPoly::basis(LambdaSpec({2})), 3) == std::vector<Rational>{R(1, 2), 1, R(3, 2), 2});

    CHECK(recurrence_tori(CharPoly::basis(LambdaSpec({1}))).coefficients == seq({1}));
    CHECK(recurrence_tori(CharPoly::basis(LambdaSpec({0, 1}))).coefficients == seq({0, 1}));
    CHECK(recurrence_tori(CharPoly::basis(LambdaSpec({2}))).coefficients == seq({2, -1}));
    const auto r11 = recurrence_tori(builtin_rep("V11"));
    CHECK(r11.coefficients == seq({1, 1, -1}));
    CHECK(r11.holds_on(stable_betti_tori(builtin_rep("V11"), 40)));
    // denominator degree |lambda| before cancellation
    for (const auto& lambda : lambdas_up_to(5)) {
        const auto f = stable_psi(CharPoly::basis(lambda));
        REQUIRE(f.den().degree() == static_cast<int>(lambda.weight()));
    }
}

TEST_CASE("tori tables converge to the stable values", "[tori][property]") {
    for (const auto& name : kReps) {
        const CharPoly P = parse_rep(name);
        const BettiTable t = betti_table_tori(P, 6, 12);
        const auto s = stable_betti_tori(P, 6);
        for (int i = 0; i <= 6; ++i) {
            REQUIRE(t.at(i, 12) == s[static_cast<size_t>(i)]);
            REQUIRE(t.at(i, 11) == s[static_cast<size_t>(i)]);
        }
    }
}

TEST_CASE("Grothendieck-Lefschetz for maximal tori", "[tori][oracle]") {
    const std::vector<CharPoly> reps = {CharPoly::constant(1), builtin_rep("V1"), builtin_rep("V11"),
                                        builtin_rep("V2"), parse_charpoly("X2")};
    for (long q : {2, 3, 5, 4})
        for (const auto& P : reps)
            for (int n = 0; n <= 5; ++n) {
                const GlCheck c = gl_crosscheck_tori(P, BigInt(q), n);
                REQUIRE(c.equal);
                REQUIRE(c.lhs == c.rhs);
            }
}

TEST_CASE("tori counting examples", "[tori]") {
    CHECK(gl_order(1, BigInt(3)) == 2);
    CHECK(tori_partition_oracle(CharPoly::constant(1), BigInt(3), 2) == 9);
    CHECK(tori_partition_oracle(CharPoly::constant(1), BigInt(2), 3) == 64);
    CHECK(tori_of_type(CycleType({3}), BigInt(2)) == 28);
    CHECK(tori_of_type(CycleType({1, 1}), BigInt(2)) == 28);
    CHECK(tori_of_type(CycleType({0, 0, 1}), BigInt(2)) == 8);
    CHECK(tori_partition_oracle(parse_charpoly("X1"), BigInt(3), 2) == 12);
    CHECK(fulman_weighted_series(LambdaSpec({1}), BigInt(3), 2)[2] * Rational(gl_order(2, BigInt(3))) == 12);
    CHECK(fulman_weighted_series(LambdaSpec({1}), BigInt(3), 2)[0] == 0);

    const GlCheck a = gl_crosscheck_tori(CharPoly::constant(1), BigInt(2), 3);
    CHECK(a.lhs == 64);
    CHECK(a.rhs == 64);
    const GlCheck b = gl_crosscheck_tori(parse_charpoly("X1"), BigInt(3), 2);
    CHECK(b.lhs == 12);
    CHECK(b.rhs == 12);
    CHECK(gl_crosscheck_tori(builtin_rep("V1"), BigInt(5), 2).lhs == 5);
}

TEST_CASE("Psi extraction for a marked point", "[tori]") {
    // [t^n] Psi_(1) * prod_{j<=n} (1 - z^j) = 1 + z + ... + z^{n-1}
    const BiSeries s = psi_series(LambdaSpec({1}), 40, 8);
    for (int n = 1; n <= 8; ++n) {
        Poly prod = Poly::constant(1);
        for (int j = 1; j <= n; ++j) prod = prod * (Poly::constant(1) - Poly::monomial(1, j));
        for (int i = 0; i <= 12; ++i) {
            Rational b;
            for (int e = 0; e <= i && e <= prod.degree(); ++e) b += prod[e] * s.coeff(n, i - e);
            REQUIRE(b == (i < n ? 1 : 0));
        }
    }
    // X2 at n = 2 counts the q(q-1)/2 anisotropic tori: q^2 (1/2 - 1/(2q))
    const BettiTable x2 = betti_table_tori(parse_charpoly("X2"), 3, 2);
    CHECK(x2.at(0, 2) == R(1, 2));
    CHECK(x2.at(1, 2) == R(-1, 2));
    for (long q : {3, 5}) CHECK(gl_crosscheck_tori(parse_charpoly("X2"), BigInt(q), 2).equal);
}
