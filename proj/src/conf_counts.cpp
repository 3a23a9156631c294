#include "twisted/conf_counts.hpp"

#include <algorithm>
#include <array>
#include <thread>

namespace twisted {

namespace {

int mod_inverse(int a, int p) {
    int r = 1;
    int base = a % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
    }
    return r;
}

}  // namespace

FqPoly::FqPoly(int p, std::vector<int> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_prime(p)) throw std::invalid_argument("FqPoly: p = " + std::to_string(p) + " is not prime");
    for (auto& x : c_) x = ((x % p) + p) % p;
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::derivative() const {
    std::vector<int> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<size_t>(i)] * i);
    return {p_, std::move(d)};
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
    if (d.is_zero()) throw std::domain_error("FqPoly division by zero");
    if (degree() < d.degree()) return {FqPoly(p_, {}), *this};
    std::vector<int> rem(c_);
    std::vector<int> quo(static_cast<size_t>(degree() - d.degree()) + 1);
    const int inv = mod_inverse(d.c_.back(), p_);
    for (int k = degree() - d.degree(); k >= 0; --k) {
        const int q = rem[static_cast<size_t>(k + d.degree())] * inv % p_;
        quo[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= d.degree(); ++j) {
            int& r = rem[static_cast<size_t>(k + j)];
            r = ((r - q * d.c_[static_cast<size_t>(j)]) % p_ + p_) % p_;
        }
    }
    return {FqPoly(p_, std::move(quo)), FqPoly(p_, std::move(rem))};
}

FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        const int inv = mod_inverse(a.c_.back(), a.p_);
        for (auto& x : a.c_) x = x * inv % a.p_;
    }
    return a;
}

bool FqPoly::is_squarefree() const {
    if (degree() <= 0) return true;
    return gcd(*this, derivative()).degree() == 0;
}

std::vector<int> FqPoly::factor_degrees() const {
    std::vector<int> degs;
    FqPoly rest = *this;
    for (int d = 1; 2 * d <= rest.degree(); ++d)
        for (const auto& g : irreducible_polys(p_, d)) {
            auto [q, r] = rest.divmod(g);
            if (r.is_zero()) {
                degs.push_back(d);
                rest = std::move(q);
                if (2 * d > rest.degree()) break;
            }
        }
    if (rest.degree() > 0) degs.push_back(rest.degree());
    std::sort(degs.begin(), degs.end());
    return degs;
}

// ---------------------------------------------------------------------------
// Brute-force enumeration on fixed-size coefficient arrays.

namespace {

constexpr int kMaxDeg = 40;

struct SmallPoly {
    int deg = -1;
    std::array<int, kMaxDeg + 1> c{};
};

void trim(SmallPoly& f) {
    while (f.deg >= 0 && f.c[static_cast<size_t>(f.deg)] == 0) --f.deg;
}

// f <- f mod g, quotient written to q (g monic).
void divmod_monic(SmallPoly& f, const SmallPoly& g, SmallPoly& q, int p) {
    q.deg = f.deg - g.deg;
    if (q.deg < 0) {
        q.deg = -1;
        return;
    }
    for (int k = q.deg; k >= 0; --k) {
        const int lead = f.c[static_cast<size_t>(k + g.deg)];
        q.c[static_cast<size_t>(k)] = lead;
        if (lead == 0) continue;
        for (int j = 0; j <= g.deg; ++j) {
            int& r = f.c[static_cast<size_t>(k + j)];
            r = (r - lead * g.c[static_cast<size_t>(j)]) % p;
            if (r < 0) r += p;
        }
    }
    f.deg = g.deg - 1;
    trim(f);
}

// general remainder a mod b (b nonzero, any leading coefficient)
void rem_general(SmallPoly& a, const SmallPoly& b, const std::vector<int>& inv, int p) {
    const int li = inv[static_cast<size_t>(b.c[static_cast<size_t>(b.deg)])];
    while (a.deg >= b.deg) {
        const int shift = a.deg - b.deg;
        const int f = a.c[static_cast<size_t>(a.deg)] * li % p;
        for (int j = 0; j <= b.deg; ++j) {
            int& r = a.c[static_cast<size_t>(shift + j)];
            r = (r - f * b.c[static_cast<size_t>(j)]) % p;
            if (r < 0) r += p;
        }
        trim(a);
    }
}

bool squarefree(const SmallPoly& f, const std::vector<int>& inv, int p) {
    SmallPoly d;
    for (int i = 1; i <= f.deg; ++i) d.c[static_cast<size_t>(i - 1)] = f.c[static_cast<size_t>(i)] * i % p;
    d.deg = f.deg - 1;
    trim(d);
    if (d.deg < 0) return f.deg <= 0;  // f = g(x^p) is a p-th power
    SmallPoly a = f;
    SmallPoly b = d;
    while (b.deg >= 0) {
        rem_general(a, b, inv, p);
        std::swap(a, b);
    }
    return a.deg == 0;
}

SmallPoly to_small(const FqPoly& f) {
    SmallPoly s;
    s.deg = f.degree();
    for (int i = 0; i <= f.degree(); ++i) s.c[static_cast<size_t>(i)] = f.coeffs()[static_cast<size_t>(i)];
    return s;
}

}  // namespace

std::vector<FqPoly> irreducible_polys(int p, int d) {
    if (!is_prime(p)) throw std::invalid_argument("irreducible_polys: p must be prime");
    if (d < 1) return {};
    std::vector<std::vector<FqPoly>> lower;
    for (int e = 1; 2 * e <= d; ++e) lower.push_back(irreducible_polys(p, e));
    std::vector<FqPoly> out;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    std::vector<int> c(static_cast<size_t>(d) + 1, 0);
    c[static_cast<size_t>(d)] = 1;
    for (long long idx = 0; idx < total; ++idx) {
        long long x = idx;
        for (int i = 0; i < d; ++i) {
            c[static_cast<size_t>(i)] = static_cast<int>(x % p);
            x /= p;
        }
        FqPoly f(p, c);
        bool irreducible = true;
        for (const auto& layer : lower) {
            for (const auto& g : layer)
                if (f.divmod(g).second.is_zero()) {
                    irreducible = false;
                    break;
                }
            if (!irreducible) break;
        }
        if (irreducible) out.push_back(std::move(f));
    }
    return out;
}

std::map<CycleType, BigInt> bruteforce_cycle_histogram(int p, int n, long long guard, int threads) {
    if (!is_prime(p)) throw std::invalid_argument("brute force requires a prime field; p = " + std::to_string(p));
    if (n < 0) throw std::invalid_argument("negative degree");
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > guard / p) throw GuardExceeded("brute force over F_" + std::to_string(p) + " at n = " +
                                                   std::to_string(n) + " exceeds guard " + std::to_string(guard));
        total *= p;
    }
    if (n > kMaxDeg) throw GuardExceeded("brute force degree limit exceeded");
    if (n == 0) return {{CycleType{}, BigInt(1)}};

    std::vector<int> inv(static_cast<size_t>(p), 0);
    for (int a = 1; a < p; ++a) inv[static_cast<size_t>(a)] = mod_inverse(a, p);
    std::vector<SmallPoly> irr;  // sorted by degree
    for (int d = 1; 2 * d <= n; ++d)
        for (const auto& g : irreducible_polys(p, d)) irr.push_back(to_small(g));

    const int workers = std::max(1, std::min<int>(threads, 64));
    std::vector<std::map<std::vector<unsigned>, long long>> partial(static_cast<size_t>(workers));
    auto work = [&](int w) {
        auto& hist = partial[static_cast<size_t>(w)];
        SmallPoly f;
        SmallPoly rest;
        SmallPoly q;
        SmallPoly trial;
        std::vector<unsigned> counts(static_cast<size_t>(n));
        for (long long idx = w; idx < total; idx += workers) {
            long long x = idx;
            for (int i = 0; i < n; ++i) {
                f.c[static_cast<size_t>(i)] = static_cast<int>(x % p);
                x /= p;
            }
            f.c[static_cast<size_t>(n)] = 1;
            f.deg = n;
            if (!squarefree(f, inv, p)) continue;
            std::fill(counts.begin(), counts.end(), 0u);
            rest = f;
            for (const auto& g : irr) {
                if (2 * g.deg > rest.deg) break;
                trial = rest;
                divmod_monic(trial, g, q, p);
                if (trial.deg < 0) {
                    ++counts[static_cast<size_t>(g.deg - 1)];
                    rest = q;
                }
            }
            if (rest.deg > 0) ++counts[static_cast<size_t>(rest.deg - 1)];
            ++hist[counts];
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    std::map<CycleType, BigInt> out;
    for (const auto& h : partial)
        for (const auto& [counts, c] : h) out[CycleType(counts)] += BigInt(static_cast<long>(c));
    return out;
}

Rational bruteforce_conf_a1(int p, int n, const CharPoly& P, long long guard) {
    Rational total;
    for (const auto& [type, count] : bruteforce_cycle_histogram(p, n, guard))
        total += Rational(count) * eval_charpoly(P, type);
    return total;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<BigInt> closed_points_for(const PointCountData& v, int depth) {
    if (depth > v.count_depth())
        throw InsufficientData("variety '" + v.label + "' supplies counts to depth " + std::to_string(v.count_depth()) +
                               ", " + std::to_string(depth) + " needed");
    return closed_point_counts(v, depth);
}

}  // namespace

std::vector<Rational> weighted_count_series(const PointCountData& v, const LambdaSpec& lambda, int order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    const int depth = std::max({order, lambda.length(), 1});
    const std::vector<BigInt> m = closed_points_for(v, depth);

    std::vector<Rational> s = zeta_from_counts(v, order);
    // 1/Z(t^2) = prod_k (1 - t^{2k})^{M_k}
    for (int k = 1; 2 * k <= order; ++k) {
        const BigInt& mk = m[static_cast<size_t>(k - 1)];
        std::vector<Rational> f(static_cast<size_t>(order) + 1);
        for (int j = 0; 2 * k * j <= order; ++j) {
            const BigInt b = j <= mk ? binomial(mk, static_cast<unsigned long>(j)) : BigInt(0);
            f[static_cast<size_t>(2 * k * j)] = Rational(j % 2 ? BigInt(-b) : b);
        }
        s = truncated::mul(s, f, order);
    }
    for (int k = 1; k <= lambda.length(); ++k) {
        const unsigned lk = lambda.part(k);
        if (lk == 0) continue;
        const BigInt& mk = m[static_cast<size_t>(k - 1)];
        const Rational b = mk >= lk ? Rational(binomial(mk, lk)) : Rational(0);
        // (t^k / (1 + t^k))^{l} = sum_j (-1)^j binom(l + j - 1, j) t^{k(l + j)}
        std::vector<Rational> f(static_cast<size_t>(order) + 1);
        for (int j = 0; static_cast<long>(k) * (lk + j) <= order; ++j) {
            const BigInt c = binomial(BigInt(lk + static_cast<unsigned>(j) - 1), static_cast<unsigned long>(j));
            f[static_cast<size_t>(k * (static_cast<int>(lk) + j))] = b * Rational(j % 2 ? BigInt(-c) : c);
        }
        s = truncated::mul(s, f, order);
    }
    return s;
}

Rational weighted_count(const PointCountData& v, const CharPoly& P, int n) {
    Rational total;
    for (const auto& [lambda, coeff] : P.terms())
        total += coeff * weighted_count_series(v, lambda, n)[static_cast<size_t>(n)];
    return total;
}

BigInt cycle_type_count(const PointCountData& v, int n, const CycleType& c) {
    if (static_cast<int>(c.n()) != n)
        throw std::invalid_argument("cycle type " + c.str() + " has size " + std::to_string(c.n()) + ", expected " +
                                    std::to_string(n));
    const int len = static_cast<int>(c.counts().size());
    if (len == 0) return 1;
    const std::vector<BigInt> m = closed_points_for(v, len);
    BigInt total = 1;
    for (int k = 1; k <= len; ++k) {
        const BigInt& mk = m[static_cast<size_t>(k - 1)];
        total *= mk >= c.count(k) ? binomial(mk, c.count(k)) : BigInt(0);
    }
    return total;
}

Rational partition_weighted_count(const PointCountData& v, const CharPoly& P, int n) {
    Rational total;
    for (const auto& mu : partitions(static_cast<unsigned>(n)))
        total += Rational(cycle_type_count(v, n, mu)) * eval_charpoly(P, mu);
    return total;
}

RationalFunction weighted_count_ratfun(const PointCountData& v, const LambdaSpec& lambda) {
    const RationalFunction& z = v.zeta();
    RationalFunction f = z / z.compose_power(2);
    if (lambda.length() > 0) {
        const std::vector<BigInt> m = closed_point_counts(v, lambda.length());
        for (int k = 1; k <= lambda.length(); ++k) {
            const unsigned lk = lambda.part(k);
            if (lk == 0) continue;
            const BigInt& mk = m[static_cast<size_t>(k - 1)];
            const Rational b = mk >= lk ? Rational(binomial(mk, lk)) : Rational(0);
            const RationalFunction g(Poly::monomial(1, k), Poly::monomial(1, k) + Poly::constant(1));
            RationalFunction gl = RationalFunction::constant(b);
            for (unsigned j = 0; j < lk; ++j) gl = gl * g;
            f = f * gl;
        }
    }
    return f;
}

Rational limit_normalized(const PointCountData& v, const LambdaSpec& lambda) {
    const RationalFunction f = weighted_count_ratfun(v, lambda);
    if (f.num().is_zero()) return Rational(0);
    return stable_limit(f, Rational(ipow(v.q, static_cast<unsigned long>(v.dim))));
}

Rational limit_normalized(const PointCountData& v, const CharPoly& P) {
    Rational total;
    for (const auto& [lambda, coeff] : P.terms()) total += coeff * limit_normalized(v, lambda);
    return total;
}

Rational limit_expectation(const PointCountData& v, const LambdaSpec& lambda) {
    return limit_normalized(v, lambda) / limit_normalized(v, LambdaSpec{});
}

}  // namespace twisted
