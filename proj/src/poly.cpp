#include "twisted/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twisted {

Poly Poly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("negative exponent in polynomial");
    std::vector<Rational> cs(static_cast<size_t>(k) + 1);
    cs[static_cast<size_t>(k)] = c;
    return Poly(std::move(cs));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::operator[](int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Rational Poly::lead() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

Poly Poly::scale_variable(const Rational& c) const {
    std::vector<Rational> out(c_);
    Rational pw(1);
    for (auto& x : out) {
        x *= pw;
        pw *= c;
    }
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        if (i == 0 || mag != Rational(1)) os << mag;
        if (i > 0) {
            if (mag != Rational(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j].add_product(a.c_[i], b.c_[j]);
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {Poly{}, *this};
    std::vector<Rational> rem(c_);
    std::vector<Rational> quo(static_cast<size_t>(degree() - d.degree()) + 1);
    const Rational inv_lead = d.lead().inverse();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        const Rational q = rem[static_cast<size_t>(k + d.degree())] * inv_lead;
        quo[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * d.c_[static_cast<size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly{};
        den_ = Poly::constant(1);
        return;
    }
    const Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    int low = 0;
    while (den[low].is_zero()) ++low;
    const Rational s = den[low].inverse();
    num_ = num * s;
    den_ = den * s;
}

Rational RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::scale_variable(const Rational& c) const {
    return {num_.scale_variable(c), den_.scale_variable(c)};
}

RationalFunction RationalFunction::compose_power(int k) const {
    auto spread = [k](const Poly& p) {
        std::vector<Rational> out(p.is_zero() ? 0 : static_cast<size_t>(p.degree() * k) + 1);
        for (int i = 0; i <= p.degree(); ++i) out[static_cast<size_t>(i * k)] = p[i];
        return Poly(std::move(out));
    };
    return {spread(num_), spread(den_)};
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Poly::constant(1)) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw std::domain_error("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction operator*(const RationalFunction& a, const Rational& s) {
    return {a.num_ * s, a.den_};
}

// ---------------------------------------------------------------------------

bool RecurrenceSpec::holds_on(const std::vector<Rational>& seq) const {
    for (int i = valid_from; i < static_cast<int>(seq.size()); ++i) {
        Rational rhs;
        for (int k = 1; k <= length(); ++k)
            rhs.add_product(coefficients[static_cast<size_t>(k - 1)], seq[static_cast<size_t>(i - k)]);
        if (rhs != seq[static_cast<size_t>(i)]) return false;
    }
    return true;
}

std::vector<Rational> taylor_coeffs(const RationalFunction& f, int n) {
    const Poly& den = f.den();
    if (den[0].is_zero()) throw std::domain_error("taylor_coeffs: denominator vanishes at 0");
    if (n < 0) return {};
    const Rational inv0 = den[0].inverse();
    std::vector<Rational> a(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational s = f.num()[i];
        for (int k = 1; k <= std::min(i, den.degree()); ++k)
            s -= den[k] * a[static_cast<size_t>(i - k)];
        a[static_cast<size_t>(i)] = s * inv0;
    }
    return a;
}

Rational stable_limit(const RationalFunction& f, const Rational& c) {
    if (c.is_zero()) throw std::domain_error("stable_limit: growth rate must be nonzero");
    const Rational root = c.inverse();
    if (!f.den().eval(root).is_zero())
        throw std::domain_error("stable_limit: no pole at t = 1/" + c.str());
    const Poly factor{Rational(1), -c};
    auto [rest, rem] = f.den().divmod(factor);
    if (!rem.is_zero()) throw std::logic_error("stable_limit: inexact factor removal");
    const Rational d = rest.eval(root);
    if (d.is_zero()) throw std::domain_error("stable_limit: pole at t = 1/" + c.str() + " is not simple");
    return f.num().eval(root) / d;
}

RecurrenceSpec recurrence_from_ratfun(const RationalFunction& f) {
    const Poly& den = f.den();
    if (den[0].is_zero()) throw std::domain_error("recurrence_from_ratfun: denominator constant term is zero");
    const Rational inv0 = den[0].inverse();
    RecurrenceSpec spec;
    for (int k = 1; k <= den.degree(); ++k) spec.coefficients.push_back(-den[k] * inv0);
    spec.valid_from = std::max(f.num().degree() + 1, den.degree());
    return spec;
}

namespace truncated {

std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b, int order) {
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j)
            out[i + j].add_product(a[i], b[j]);
    }
    return out;
}

std::vector<Rational> inverse(const std::vector<Rational>& a, int order) {
    if (a.empty() || a[0].is_zero()) throw std::domain_error("truncated inverse: zero constant term");
    const Rational inv0 = a[0].inverse();
    std::vector<Rational> b(static_cast<size_t>(order) + 1);
    b[0] = inv0;
    for (int n = 1; n <= order; ++n) {
        Rational s;
        for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k)
            s.add_product(a[static_cast<size_t>(k)], b[static_cast<size_t>(n - k)]);
        b[static_cast<size_t>(n)] = -s * inv0;
    }
    return b;
}

std::vector<Rational> exp(const std::vector<Rational>& a, int order) {
    if (!a.empty() && !a[0].is_zero()) throw std::domain_error("truncated exp: nonzero constant term");
    // n e_n = sum_{k=1..n} k a_k e_{n-k}
    std::vector<Rational> e(static_cast<size_t>(order) + 1);
    e[0] = Rational(1);
    for (int n = 1; n <= order; ++n) {
        Rational s;
        for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k)
            s.add_product(a[static_cast<size_t>(k)] * Rational(k), e[static_cast<size_t>(n - k)]);
        e[static_cast<size_t>(n)] = s / Rational(n);
    }
    return e;
}

}  // namespace truncated

}  // namespace twisted
