#include "twisted/chars.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace twisted {

namespace {

std::vector<unsigned> strip(std::vector<unsigned> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

unsigned weighted_size(const std::vector<unsigned>& v) {
    unsigned s = 0;
    for (size_t k = 0; k < v.size(); ++k) s += static_cast<unsigned>(k + 1) * v[k];
    return s;
}

}  // namespace

CycleType::CycleType(std::vector<unsigned> counts) : counts_(strip(std::move(counts))) {
    n_ = weighted_size(counts_);
}

unsigned CycleType::count(int k) const {
    if (k < 1 || k > static_cast<int>(counts_.size())) return 0;
    return counts_[static_cast<size_t>(k - 1)];
}

std::string CycleType::str() const {
    // partition notation, largest part first: (3,1,1)
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int k = static_cast<int>(counts_.size()); k >= 1; --k)
        for (unsigned r = 0; r < counts_[static_cast<size_t>(k - 1)]; ++r) {
            if (!first) os << ",";
            os << k;
            first = false;
        }
    os << ")";
    return os.str();
}

LambdaSpec::LambdaSpec(std::vector<unsigned> parts) : parts_(strip(std::move(parts))) {
    weight_ = weighted_size(parts_);
}

LambdaSpec LambdaSpec::parse(std::string_view text) {
    std::vector<unsigned> parts;
    std::string item;
    std::istringstream is{std::string(text)};
    while (std::getline(is, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("malformed lambda '" + std::string(text) + "'");
        parts.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (parts.empty()) throw ParseError("empty lambda");
    return LambdaSpec(std::move(parts));
}

unsigned LambdaSpec::part(int k) const {
    if (k < 1 || k > length()) return 0;
    return parts_[static_cast<size_t>(k - 1)];
}

std::string LambdaSpec::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    return os.str();
}

// ---------------------------------------------------------------------------

CharPoly::CharPoly(Terms terms) {
    for (auto& [l, c] : terms)
        if (!c.is_zero()) terms_.emplace(l, c);
}

CharPoly CharPoly::basis(const LambdaSpec& lambda, const Rational& c) {
    return CharPoly(Terms{{lambda, c}});
}

Rational CharPoly::coefficient(const LambdaSpec& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

CharPoly& CharPoly::operator+=(const CharPoly& o) {
    for (const auto& [l, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

CharPoly operator*(CharPoly a, const Rational& s) {
    if (s.is_zero()) return {};
    for (auto& [l, c] : a.terms_) c *= s;
    return a;
}

std::string CharPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms_) {
        const Rational mag = c.sign() < 0 ? -c : c;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const bool unit = mag == Rational(1);
        if (l.parts().empty()) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << "binom(X,(" << l.str() << "))";
    }
    return os.str();
}

Rational eval_charpoly(const CharPoly& p, const CycleType& c) {
    Rational total;
    for (const auto& [lambda, coeff] : p.terms()) {
        BigInt prod = 1;
        for (int k = 1; k <= lambda.length() && prod != 0; ++k)
            prod *= binomial(BigInt(c.count(k)), lambda.part(k));
        total += coeff * Rational(prod);
    }
    return total;
}

int degree(const CharPoly& p) {
    if (p.is_zero()) throw std::domain_error("degree of the zero character polynomial");
    unsigned d = 0;
    for (const auto& [lambda, c] : p.terms()) d = std::max(d, lambda.weight());
    return static_cast<int>(d);
}

// ---------------------------------------------------------------------------

MonomialPoly monomial_product(const MonomialPoly& a, const MonomialPoly& b) {
    MonomialPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e(std::max(ea.size(), eb.size()));
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = (i < ea.size() ? ea[i] : 0) + (i < eb.size() ? eb[i] : 0);
            out[strip(std::move(e))] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Rational eval_monomials(const MonomialPoly& p, const CycleType& c) {
    Rational total;
    for (const auto& [e, coeff] : p) {
        BigInt prod = 1;
        for (size_t k = 0; k < e.size(); ++k) prod *= ipow(BigInt(c.count(static_cast<int>(k + 1))), e[k]);
        total += coeff * Rational(prod);
    }
    return total;
}

BigInt stirling2(unsigned e, unsigned j) {
    // S(m, i) = i S(m-1, i) + S(m-1, i-1)
    std::vector<std::vector<BigInt>> s(e + 1, std::vector<BigInt>(j + 1, 0));
    s[0][0] = 1;
    for (unsigned m = 1; m <= e; ++m)
        for (unsigned i = 1; i <= j; ++i) s[m][i] = BigInt(i) * s[m - 1][i] + s[m - 1][i - 1];
    return s[e][j];
}

CharPoly monomials_to_binomial(const MonomialPoly& expr) {
    CharPoly out;
    for (const auto& [exps, coeff] : expr) {
        // expand each variable into sum_j S(e,j) j! binom(X_k, j), then take the product
        std::vector<std::pair<std::vector<unsigned>, BigInt>> partial{{{}, 1}};
        for (size_t k = 0; k < exps.size(); ++k) {
            std::vector<std::pair<std::vector<unsigned>, BigInt>> next;
            for (const auto& [lam, w] : partial)
                for (unsigned j = (exps[k] == 0 ? 0 : 1); j <= exps[k]; ++j) {
                    const BigInt s = stirling2(exps[k], j) * factorial(j);
                    if (s == 0) continue;
                    auto l2 = lam;
                    l2.push_back(j);
                    next.emplace_back(std::move(l2), w * s);
                }
            partial = std::move(next);
        }
        for (const auto& [lam, w] : partial) out += CharPoly::basis(LambdaSpec(lam), coeff * Rational(w));
    }
    return out;
}

CharPoly class_function_to_binomial(unsigned n, const std::map<CycleType, Rational>& values) {
    CharPoly out;
    for (const auto& mu : partitions(n)) {
        auto it = values.find(mu);
        if (it == values.end()) throw std::invalid_argument("class function missing partition " + mu.str());
        out += CharPoly::basis(LambdaSpec(mu.counts()), it->second);
    }
    return out;
}

bool is_builtin_rep(std::string_view name) { return name == "V1" || name == "V11" || name == "V2"; }

CharPoly builtin_rep(std::string_view name) {
    const auto b = [](std::vector<unsigned> l, long c) { return CharPoly::basis(LambdaSpec(std::move(l)), Rational(c)); };
    // X1 - 1
    if (name == "V1") return b({1}, 1) + b({}, -1);
    // binom(X1,2) - X1 - X2 + 1
    if (name == "V11") return b({2}, 1) + b({1}, -1) + b({0, 1}, -1) + b({}, 1);
    // binom(X1,2) + X2 - X1
    if (name == "V2") return b({2}, 1) + b({0, 1}, 1) + b({1}, -1);
    throw std::invalid_argument("unknown builtin representation '" + std::string(name) + "'");
}

std::vector<CycleType> partitions(unsigned n) {
    std::vector<CycleType> out;
    std::vector<unsigned> counts(n, 0);
    // largest part first; part sizes non-increasing
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
        if (remaining == 0) {
            out.emplace_back(counts);
            return;
        }
        for (unsigned k = std::min(remaining, max_part); k >= 1; --k) {
            ++counts[k - 1];
            rec(remaining - k, k);
            --counts[k - 1];
        }
    };
    rec(n, n);
    return out;
}

BigInt centralizer_order(const CycleType& c) {
    BigInt z = 1;
    for (int k = 1; k <= static_cast<int>(c.counts().size()); ++k)
        z *= ipow(BigInt(k), c.count(k)) * factorial(c.count(k));
    return z;
}

BigInt centralizer_order(const LambdaSpec& lambda) { return centralizer_order(CycleType(lambda.parts())); }

// ---------------------------------------------------------------------------

namespace {

class CharPolyParser {
public:
    explicit CharPolyParser(std::string_view s) : s_(s) {}

    MonomialPoly parse() {
        MonomialPoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("character polynomial '" + std::string(s_) + "': " + what + " at offset " +
                         std::to_string(pos_));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    unsigned integer() {
        skip();
        const size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }
    int variable() {
        skip();
        if (!(accept('X') || accept('x'))) fail("expected a variable X1..X9");
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected variable index");
        const int k = s_[pos_++] - '0';
        if (k < 1) fail("variable index must be 1..9");
        return k;
    }
    static MonomialPoly constant(const Rational& c) {
        MonomialPoly p;
        if (!c.is_zero()) p[{}] = c;
        return p;
    }
    static MonomialPoly var(int k) {
        std::vector<unsigned> e(static_cast<size_t>(k), 0);
        e[static_cast<size_t>(k - 1)] = 1;
        return MonomialPoly{{e, Rational(1)}};
    }
    static MonomialPoly add(MonomialPoly a, const MonomialPoly& b, long sign) {
        for (const auto& [e, c] : b) a[e] += c * Rational(sign);
        std::erase_if(a, [](const auto& kv) { return kv.second.is_zero(); });
        return a;
    }

    MonomialPoly expr() {
        MonomialPoly acc = term();
        for (;;) {
            if (accept('+')) acc = add(acc, term(), 1);
            else if (accept('-')) acc = add(acc, term(), -1);
            else return acc;
        }
    }
    MonomialPoly term() {
        MonomialPoly acc = power();
        while (accept('*')) acc = monomial_product(acc, power());
        return acc;
    }
    MonomialPoly power() {
        MonomialPoly base = unary();
        if (accept('^')) {
            const unsigned e = integer();
            MonomialPoly r = constant(1);
            for (unsigned i = 0; i < e; ++i) r = monomial_product(r, base);
            return r;
        }
        return base;
    }
    MonomialPoly unary() {
        if (accept('-')) return add({}, unary(), -1);
        if (accept('+')) return unary();
        return atom();
    }
    MonomialPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MonomialPoly p = expr();
            expect(')');
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("malformed rational literal");
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            try {
                return constant(Rational::parse(s_.substr(start, pos_ - start)));
            } catch (const std::domain_error&) {
                fail("zero denominator");
            }
        }
        if (c == 'X' || c == 'x') return var(variable());
        if (c == 'C' || c == 'c') {
            ++pos_;
            expect('(');
            const int k = variable();
            expect(',');
            const unsigned m = integer();
            expect(')');
            // X(X-1)...(X-m+1)/m!
            MonomialPoly r = constant(1);
            for (unsigned j = 0; j < m; ++j) r = monomial_product(r, add(var(k), constant(Rational(static_cast<long>(j))), -1));
            for (auto& [e, coeff] : r) coeff /= Rational(factorial(m));
            return r;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

CharPoly parse_charpoly(std::string_view text) {
    return monomials_to_binomial(CharPolyParser(text).parse());
}

CharPoly parse_rep(std::string_view text) {
    if (is_builtin_rep(text)) return builtin_rep(text);
    return parse_charpoly(text);
}

}  // namespace twisted
