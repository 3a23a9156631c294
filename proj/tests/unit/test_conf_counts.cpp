#include "twisted/conf_counts.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace twisted;

namespace {

Rational R(long p, long q = 1) { return {p, q}; }

PointCountData affine(long q) { return builtin_variety(VarietyKind::Affine, 1, BigInt(q)); }

// Monic polynomials over F_p as coefficient vectors (ascending, leading 1).
using Coeffs = std::vector<int>;

std::vector<Coeffs> monic_of_degree(int p, int d) {
    std::vector<Coeffs> out;
    Coeffs c(static_cast<size_t>(d) + 1, 0);
    c.back() = 1;
    for (;;) {
        out.push_back(c);
        int k = 0;
        while (k < d && ++c[static_cast<size_t>(k)] == p) c[static_cast<size_t>(k++)] = 0;
        if (k == d) break;
    }
    return out;
}

Coeffs times(const Coeffs& a, const Coeffs& b, int p) {
    Coeffs r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// Irreducibles of degree d: monic polynomials that are not a product of two of lower degree.
size_t sieve_irreducibles(int p, int d) {
    std::set<Coeffs> reducible;
    for (int a = 1; a <= d / 2; ++a)
        for (const auto& f : monic_of_degree(p, a))
            for (const auto& g : monic_of_degree(p, d - a)) reducible.insert(times(f, g, p));
    return monic_of_degree(p, d).size() - reducible.size();
}

// Independent closed form for the limiting expectation of binom(X, lambda) on Conf_n A^1(F_q):
// prod_k binom(M_k(q), lambda_k) (q^-k / (1 + q^-k))^{lambda_k}.
Rational expectation_oracle(long q, const LambdaSpec& lambda) {
    Rational out(1);
    for (int k = 1; k <= lambda.length(); ++k) {
        const Rational m = necklace_poly(k).eval(q);
        const Rational x = Rational(1) / (Rational(q).pow(k) + Rational(1));
        out *= binomial(m, lambda.part(k)) * x.pow(static_cast<int>(lambda.part(k)));
    }
    return out;
}

const std::vector<LambdaSpec> kLambdas = {LambdaSpec{}, LambdaSpec({1}), LambdaSpec({2}), LambdaSpec({0, 1}),
                                          LambdaSpec({1, 1}), LambdaSpec({3})};

}  // namespace

TEST_CASE("polynomials over prime fields", "[fq]") {
    const FqPoly f(3, {1, 0, 1});  // x^2 + 1, irreducible over F_3
    CHECK(f.is_monic());
    CHECK(f.is_squarefree());
    CHECK(f.factor_degrees() == std::vector<int>{2});
    const FqPoly g(3, {2, 0, 1});  // x^2 - 1
    CHECK(g.factor_degrees() == std::vector<int>{1, 1});
    CHECK_FALSE(FqPoly(3, {1, 2, 1}).is_squarefree());  // (x + 1)^2
    CHECK(FqPoly(5, {0, 0, 3}).derivative() == FqPoly(5, {0, 1}));
    const auto [q, r] = FqPoly(5, {1, 0, 0, 1}).divmod(FqPoly(5, {1, 1}));
    CHECK(r.is_zero());
    CHECK(q == FqPoly(5, {1, 4, 1}));
    CHECK_THROWS(FqPoly(4, {1}));
    CHECK_THROWS(FqPoly(3, {1}).divmod(FqPoly(3, {0})));
}

TEST_CASE("irreducible polynomials match the necklace count and a sieve", "[fq][oracle]") {
    for (int p : {2, 3, 5})
        for (int d = 1; d <= (p == 5 ? 3 : 5); ++d) {
            const auto irr = irreducible_polys(p, d);
            REQUIRE(irr.size() == sieve_irreducibles(p, d));
            REQUIRE(Rational(static_cast<long>(irr.size())) == necklace_poly(d).eval(p));
            for (const auto& f : irr) REQUIRE(f.factor_degrees() == std::vector<int>{d});
        }
}

TEST_CASE("brute-force histogram", "[conf_counts]") {
    // square-free monic polynomials of degree n >= 2 number q^n - q^{n-1}
    for (int p : {2, 3, 5})
        for (int n = 2; n <= 5; ++n) {
            BigInt total = 0;
            for (const auto& [mu, c] : bruteforce_cycle_histogram(p, n)) total += c;
            REQUIRE(total == ipow(BigInt(p), static_cast<unsigned long>(n)) -
                                 ipow(BigInt(p), static_cast<unsigned long>(n - 1)));
        }
    CHECK_THROWS_AS(bruteforce_cycle_histogram(3, 8, 1000), GuardExceeded);
    CHECK_THROWS(bruteforce_cycle_histogram(4, 2));
}

TEST_CASE("weighted counts on the affine line", "[conf_counts]") {
    const auto a1 = affine(3);
    const std::vector<Rational> one = weighted_count_series(a1, LambdaSpec{}, 5);
    CHECK(one == std::vector<Rational>{1, 3, 6, 18, 54, 162});
    // every point of A^1(F_q) is a degree-1 closed point: sum_C X_1 at n = 1 is q
    CHECK(weighted_count(a1, CharPoly::basis(LambdaSpec({1})), 1) == 3);
    CHECK(weighted_count(a1, builtin_rep("V1"), 1) == 0);
    CHECK(cycle_type_count(a1, 2, CycleType({0, 1})) == 3);
    CHECK(cycle_type_count(a1, 2, CycleType({2})) == 3);
    CHECK_THROWS(cycle_type_count(a1, 3, CycleType({2})));
}

TEST_CASE("three computation paths agree on A^1", "[conf_counts][oracle]") {
    for (int p : {3, 5, 7}) {
        const auto v = affine(p);
        const int top = p == 7 ? 5 : 6;
        for (const auto& lambda : kLambdas) {
            const CharPoly P = CharPoly::basis(lambda);
            const auto series = weighted_count_series(v, lambda, top);
            for (int n = 0; n <= top; ++n) {
                const Rational brute = bruteforce_conf_a1(p, n, P);
                REQUIRE(series[static_cast<size_t>(n)] == brute);
                REQUIRE(partition_weighted_count(v, P, n) == brute);
            }
        }
    }
}

TEST_CASE("rational generating function matches the truncated series", "[conf_counts][property]") {
    for (long q : {2, 3, 4, 5})
        for (auto kind : {VarietyKind::Affine, VarietyKind::Projective})
            for (int d : {1, 2}) {
                const auto v = builtin_variety(kind, d, BigInt(q));
                for (const auto& lambda : kLambdas)
                    REQUIRE(taylor_coeffs(weighted_count_ratfun(v, lambda), 10) == weighted_count_series(v, lambda, 10));
            }
}

TEST_CASE("cycle type counts sum to the configuration count", "[conf_counts][property]") {
    for (long q : {2, 3, 5})
        for (auto kind : {VarietyKind::Affine, VarietyKind::Projective})
            for (int d : {1, 2}) {
                const auto v = builtin_variety(kind, d, BigInt(q));
                const auto total = weighted_count_series(v, LambdaSpec{}, 8);
                for (int n = 0; n <= 8; ++n) {
                    BigInt s = 0;
                    for (const auto& mu : partitions(static_cast<unsigned>(n))) s += cycle_type_count(v, n, mu);
                    REQUIRE(Rational(s) == total[static_cast<size_t>(n)]);
                }
            }
}

TEST_CASE("count-only varieties", "[conf_counts]") {
    const auto v = parse_variety("q = 3\ndim = 1\ncounts = 3, 9, 27, 81\n");
    const auto a1 = affine(3);
    CHECK(weighted_count_series(v, LambdaSpec({1}), 4) == weighted_count_series(a1, LambdaSpec({1}), 4));
    CHECK_THROWS_AS(weighted_count_series(v, LambdaSpec{}, 5), InsufficientData);
    CHECK_THROWS_AS(weighted_count_ratfun(v, LambdaSpec{}), InsufficientData);
}

TEST_CASE("limits", "[conf_counts]") {
    CHECK(limit_normalized(affine(3), LambdaSpec{}) == R(2, 3));
    CHECK(limit_expectation(affine(3), LambdaSpec({1})) == R(3, 4));
    CHECK(limit_expectation(affine(2), LambdaSpec({0, 1})) == R(1, 5));
    for (long q : {2, 3, 4, 5, 7, 9}) {
        REQUIRE(limit_normalized(affine(q), LambdaSpec{}) == Rational(1) - Rational(1, q));
        for (const auto& lambda : kLambdas) REQUIRE(limit_expectation(affine(q), lambda) == expectation_oracle(q, lambda));
    }
    // V1 = X1 - 1 on the affine line
    CHECK(limit_normalized(affine(3), builtin_rep("V1")) == R(2, 3) * (R(3, 4) - 1));
}

TEST_CASE("normalized counts converge to their limit", "[conf_counts][property]") {
    // the error oscillates with the poles on |t| = 1, so compare its maximum over successive windows
    const auto p1 = builtin_variety(VarietyKind::Projective, 1, BigInt(2));
    for (const auto& lambda : kLambdas) {
        const Rational lim = limit_normalized(p1, lambda);
        const auto s = weighted_count_series(p1, lambda, 42);
        Rational prev_window = -1;
        for (int start = 12; start <= 36; start += 6) {
            Rational window;
            for (int n = start; n < start + 6; ++n) {
                Rational err = s[static_cast<size_t>(n)] / Rational(2).pow(n) - lim;
                if (err.sign() < 0) err = -err;
                if (err > window) window = err;
            }
            if (prev_window.sign() >= 0) REQUIRE((window < prev_window || window.is_zero()));
            prev_window = window;
        }
        REQUIRE(prev_window < Rational(1, 1000000));
    }
}

TEST_CASE("worked counting examples", "[conf_counts]") {
    const auto a3 = affine(3);
    CHECK(weighted_count_series(a3, LambdaSpec({1}), 3)[3] == 12);
    CHECK(weighted_count(a3, builtin_rep("V1"), 3) == -6);
    CHECK(weighted_count(a3, builtin_rep("V11"), 4) == 6);
    CHECK(bruteforce_conf_a1(3, 4, builtin_rep("V11")) == 6);
    CHECK(bruteforce_conf_a1(3, 2, CharPoly::constant(1)) == 6);
    CHECK(bruteforce_conf_a1(3, 1, parse_charpoly("X1")) == 3);
    CHECK(bruteforce_conf_a1(5, 3, parse_charpoly("X1")) == weighted_count_series(affine(5), LambdaSpec({1}), 3)[3]);
    CHECK(weighted_count_series(affine(7), LambdaSpec{}, 0)[0] == 1);
    CHECK(limit_normalized(a3, LambdaSpec({1})) == R(1, 2));
    CHECK(limit_expectation(a3, LambdaSpec{}) == 1);
}
