#include "twisted/zeta.hpp"

#include <climits>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace twisted {

const RationalFunction& PointCountData::zeta() const {
    if (!has_zeta()) throw InsufficientData("variety '" + label + "' has no zeta function, only point counts");
    return std::get<RationalFunction>(source);
}

int PointCountData::count_depth() const {
    if (has_zeta()) return INT_MAX;
    return static_cast<int>(std::get<std::vector<BigInt>>(source).size());
}

int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(const BigInt& q) {
    if (q < 2) return false;
    BigInt p = 2;
    BigInt m = q;
    while (p * p <= m && m % p != 0) ++p;
    if (p * p > m) return true;  // m itself is prime
    while (m % p == 0) m /= p;
    return m == 1;
}

Poly necklace_poly(int k) {
    if (k < 1) throw std::invalid_argument("necklace_poly: k must be positive");
    std::vector<Rational> c(static_cast<size_t>(k) + 1);
    for (int j = 1; j <= k; ++j)
        if (k % j == 0) c[static_cast<size_t>(j)] = Rational(mobius(k / j), k);
    return Poly(std::move(c));
}

std::vector<BigInt> point_counts(const PointCountData& v, int depth) {
    if (depth <= 0) return {};
    if (!v.has_zeta()) {
        const auto& counts = std::get<std::vector<BigInt>>(v.source);
        if (static_cast<int>(counts.size()) < depth)
            throw InsufficientData("variety '" + v.label + "' supplies " + std::to_string(counts.size()) +
                                   " point counts, " + std::to_string(depth) + " needed");
        return {counts.begin(), counts.begin() + depth};
    }
    // log Z = sum N_m t^m / m  =>  m z_m = sum_{j=1..m} N_j z_{m-j}
    const std::vector<Rational> z = taylor_coeffs(v.zeta(), depth);
    if (z[0] != Rational(1)) throw std::domain_error("zeta function must have constant term 1");
    std::vector<Rational> n(static_cast<size_t>(depth) + 1);
    std::vector<BigInt> out;
    for (int m = 1; m <= depth; ++m) {
        Rational s = Rational(m) * z[static_cast<size_t>(m)];
        for (int j = 1; j < m; ++j) s -= n[static_cast<size_t>(j)] * z[static_cast<size_t>(m - j)];
        n[static_cast<size_t>(m)] = s;
        if (!s.is_integer())
            throw std::domain_error("zeta function yields non-integral |V(F_{q^" + std::to_string(m) + "})| = " + s.str());
        out.push_back(s.numerator());
    }
    return out;
}

std::vector<BigInt> closed_point_counts(const PointCountData& v, int k_max) {
    const std::vector<BigInt> counts = point_counts(v, k_max);
    std::vector<BigInt> out;
    for (int k = 1; k <= k_max; ++k) {
        BigInt s = 0;
        for (int m = 1; m <= k; ++m)
            if (k % m == 0) s += mobius(k / m) * counts[static_cast<size_t>(m - 1)];
        if (s % k != 0 || s < 0)
            throw std::domain_error("inconsistent point counts: M_" + std::to_string(k) + " = " +
                                    Rational(s, BigInt(k)).str() + " is not a nonnegative integer");
        out.push_back(s / k);
    }
    return out;
}

std::vector<Rational> zeta_from_counts(const PointCountData& v, int order) {
    std::vector<Rational> z(static_cast<size_t>(order) + 1);
    z[0] = Rational(1);
    if (order <= 0) return z;
    const std::vector<BigInt> m = closed_point_counts(v, order);
    for (int k = 1; k <= order; ++k) {
        const BigInt& mk = m[static_cast<size_t>(k - 1)];
        if (mk == 0) continue;
        // (1 - t^k)^{-M} = sum_j binom(M + j - 1, j) t^{kj}
        std::vector<Rational> f(static_cast<size_t>(order) + 1);
        for (int j = 0; j * k <= order; ++j)
            f[static_cast<size_t>(j * k)] = Rational(binomial(BigInt(mk + j - 1), static_cast<unsigned long>(j)));
        z = truncated::mul(z, f, order);
    }
    return z;
}

PointCountData builtin_variety(VarietyKind kind, int d, const BigInt& q) {
    if (d < 1) throw std::invalid_argument("variety dimension must be at least 1");
    if (!is_prime_power(q)) throw std::invalid_argument("q = " + q.get_str() + " is not a prime power");
    PointCountData v;
    v.q = q;
    v.dim = d;
    if (kind == VarietyKind::Affine) {
        v.source = RationalFunction(Poly::constant(1), Poly{Rational(1), -Rational(ipow(q, static_cast<unsigned long>(d)))});
        v.label = "affine:" + std::to_string(d);
    } else {
        Poly den = Poly::constant(1);
        for (int i = 0; i <= d; ++i) den = den * Poly{Rational(1), -Rational(ipow(q, static_cast<unsigned long>(i)))};
        v.source = RationalFunction(Poly::constant(1), den);
        v.label = "projective:" + std::to_string(d);
    }
    return v;
}

namespace {

std::vector<BigInt> parse_int_list(const std::string& key, const std::string& value) {
    std::vector<BigInt> out;
    std::string cleaned;
    for (char c : value) cleaned += (c == ',' || c == '[' || c == ']') ? ' ' : c;
    std::istringstream is(cleaned);
    std::string tok;
    while (is >> tok) {
        BigInt x;
        if (x.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
            throw std::invalid_argument("variety file: '" + key + "' has non-integer entry '" + tok + "'");
        out.push_back(x);
    }
    if (out.empty()) throw std::invalid_argument("variety file: '" + key + "' is empty");
    return out;
}

Poly to_poly(const std::vector<BigInt>& cs) {
    std::vector<Rational> r;
    for (const auto& c : cs) r.emplace_back(c);
    return Poly(std::move(r));
}

}  // namespace

PointCountData parse_variety(std::string_view text) {
    std::map<std::string, std::string> fields;
    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) eq = line.find(':');
        if (eq == std::string::npos)
            throw std::invalid_argument("variety file line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        if (fields.count(key)) throw std::invalid_argument("variety file: duplicate key '" + key + "'");
        fields[key] = value;
    }
    for (const auto& [k, v] : fields)
        if (k != "q" && k != "dim" && k != "zeta_num" && k != "zeta_den" && k != "counts")
            throw std::invalid_argument("variety file: unknown key '" + k + "'");
    if (!fields.count("q") || !fields.count("dim"))
        throw std::invalid_argument("variety file: 'q' and 'dim' are required");

    PointCountData v;
    const auto qs = parse_int_list("q", fields["q"]);
    const auto ds = parse_int_list("dim", fields["dim"]);
    if (qs.size() != 1 || ds.size() != 1) throw std::invalid_argument("variety file: 'q' and 'dim' take one integer");
    v.q = qs[0];
    if (!is_prime_power(v.q)) throw std::invalid_argument("variety file: q = " + v.q.get_str() + " is not a prime power");
    if (ds[0] < 1 || ds[0] > 1000) throw std::invalid_argument("variety file: dim must be a positive integer");
    v.dim = static_cast<int>(ds[0].get_si());
    v.label = "file";

    const bool has_zeta = fields.count("zeta_num") || fields.count("zeta_den");
    const bool has_counts = fields.count("counts") > 0;
    if (has_zeta == has_counts)
        throw std::invalid_argument("variety file: give either zeta_num/zeta_den or counts");
    if (has_counts) {
        auto counts = parse_int_list("counts", fields["counts"]);
        for (const auto& c : counts)
            if (c < 0) throw std::invalid_argument("variety file: negative point count");
        v.source = std::move(counts);
    } else {
        if (!fields.count("zeta_num") || !fields.count("zeta_den"))
            throw std::invalid_argument("variety file: zeta_num and zeta_den must both be present");
        const Poly num = to_poly(parse_int_list("zeta_num", fields["zeta_num"]));
        const Poly den = to_poly(parse_int_list("zeta_den", fields["zeta_den"]));
        if (den.is_zero() || den[0].is_zero() || num[0] != den[0])
            throw std::invalid_argument("variety file: zeta function must satisfy Z(0) = 1");
        v.source = RationalFunction(num, den);
    }
    // validates integrality of the derived closed-point counts at shallow depth
    closed_point_counts(v, std::min(v.count_depth(), 4));
    return v;
}

PointCountData load_variety_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open variety file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    PointCountData v = parse_variety(ss.str());
    v.label = "file:" + path;
    return v;
}

PointCountData resolve_variety(std::string_view spec, const std::optional<BigInt>& q) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("variety must be affine:d, projective:d or file:PATH");
    const std::string kind(spec.substr(0, colon));
    const std::string arg(spec.substr(colon + 1));
    if (kind == "file") {
        PointCountData v = load_variety_file(arg);
        if (q && *q != v.q)
            throw std::invalid_argument("--q " + q->get_str() + " conflicts with q = " + v.q.get_str() + " in " + arg);
        return v;
    }
    if (!q) throw std::invalid_argument("--q is required for builtin varieties");
    int d = 0;
    try {
        size_t used = 0;
        d = std::stoi(arg, &used);
        if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad variety dimension '" + arg + "'");
    }
    if (kind == "affine") return builtin_variety(VarietyKind::Affine, d, *q);
    if (kind == "projective") return builtin_variety(VarietyKind::Projective, d, *q);
    throw std::invalid_argument("unknown variety kind '" + kind + "'");
}

}  // namespace twisted
