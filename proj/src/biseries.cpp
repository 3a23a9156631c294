#include "twisted/biseries.hpp"

#include <algorithm>
#include <sstream>

namespace twisted {

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::from_poly_in_inverse(const Poly& p) {
    if (p.is_zero()) return {};
    std::vector<Rational> cs(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) cs[static_cast<size_t>(p.degree() - i)] = p[i];
    return {-p.degree(), std::move(cs)};
}

void LaurentPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (c_.empty()) low_ = 0;
}

Rational LaurentPoly::coeff(int e) const {
    if (c_.empty() || e < low_ || e > max_exp()) return Rational(0);
    return c_[static_cast<size_t>(e - low_)];
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(max_exp(), o.max_exp());
    std::vector<Rational> out(static_cast<size_t>(hi - lo) + 1);
    for (size_t i = 0; i < c_.size(); ++i) out[static_cast<size_t>(low_ - lo) + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[static_cast<size_t>(o.low_ - lo) + i] += o.c_[i];
    low_ = lo;
    c_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j].add_product(a.c_[i], b.c_[j]);
    }
    return {a.low_ + b.low_, std::move(out)};
}

LaurentPoly operator*(LaurentPoly a, const Rational& s) {
    for (auto& x : a.c_) x *= s;
    a.normalize();
    return a;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = low_; e <= max_exp(); ++e) {
        const Rational c = coeff(e);
        if (c.is_zero()) continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        if (e == 0 || mag != Rational(1)) os << mag;
        if (e != 0) {
            if (mag != Rational(1)) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly series_binomial(const LaurentPoly& s, int m) {
    if (m < 0) throw std::invalid_argument("series_binomial: negative m");
    LaurentPoly r = LaurentPoly::constant(1);
    for (int j = 0; j < m; ++j) r = r * (s - LaurentPoly::constant(Rational(j)));
    return r * Rational(factorial(static_cast<unsigned long>(m))).inverse();
}

// ---------------------------------------------------------------------------

BiSeries::BiSeries(int t_order, int z_floor, int z_ceil)
    : t_order_(t_order), z_floor_(z_floor), z_ceil_(z_ceil) {
    if (t_order < 0) throw std::invalid_argument("BiSeries: negative t-order");
    if (z_ceil < z_floor) throw WindowError("BiSeries: empty z-window [" + std::to_string(z_floor) + ", " +
                                            std::to_string(z_ceil) + "]");
    width_ = static_cast<size_t>(z_ceil - z_floor) + 1;
    data_.resize(width_ * (static_cast<size_t>(t_order) + 1));
}

BiSeries BiSeries::constant(const Rational& c, int t_order, int z_ceil) {
    BiSeries s(t_order, 0, z_ceil);
    s.at(0, 0) = c;
    return s;
}

BiSeries BiSeries::from_laurent(const LaurentPoly& l, int t_order, int z_ceil) {
    BiSeries s(t_order, std::min(l.min_exp(), 0), z_ceil);
    for (int e = s.z_floor_; e <= std::min(z_ceil, l.max_exp()); ++e) s.at(0, e) = l.coeff(e);
    return s;
}

BiSeries BiSeries::monomial(const Rational& c, int n, int e, int t_order, int z_floor, int z_ceil) {
    BiSeries s(t_order, z_floor, z_ceil);
    if (n <= t_order && e <= z_ceil) s.set(n, e, c);
    return s;
}

Rational BiSeries::coeff(int n, int e) const {
    if (n < 0) return Rational(0);
    if (n > t_order_) throw WindowError("coefficient t^" + std::to_string(n) + " beyond t-order " +
                                        std::to_string(t_order_));
    if (e > z_ceil_) throw WindowError("coefficient z^" + std::to_string(e) + " beyond guaranteed z-ceiling " +
                                       std::to_string(z_ceil_));
    if (e < z_floor_) return Rational(0);
    return at(n, e);
}

LaurentPoly BiSeries::t_coeff(int n) const {
    if (n > t_order_) throw WindowError("t_coeff beyond t-order");
    std::vector<Rational> cs(width_);
    for (int e = z_floor_; e <= z_ceil_; ++e) cs[static_cast<size_t>(e - z_floor_)] = at(n, e);
    return {z_floor_, std::move(cs)};
}

void BiSeries::set(int n, int e, const Rational& v) {
    if (n < 0 || n > t_order_ || e < z_floor_ || e > z_ceil_)
        throw WindowError("BiSeries::set outside window");
    at(n, e) = v;
}

void BiSeries::add_to(int n, int e, const Rational& v) {
    if (n < 0 || n > t_order_ || e < z_floor_ || e > z_ceil_)
        throw WindowError("BiSeries::add_to outside window");
    at(n, e) += v;
}

bool BiSeries::no_negative_powers() const {
    for (int n = 0; n <= t_order_; ++n)
        for (int e = z_floor_; e < std::min(0, z_ceil_ + 1); ++e)
            if (!at(n, e).is_zero()) return false;
    return true;
}

BiSeries BiSeries::restricted(int new_floor, int new_ceil) const {
    if (new_ceil > z_ceil_) throw WindowError("restricted: cannot raise the guaranteed z-ceiling");
    BiSeries out(t_order_, new_floor, new_ceil);
    for (int n = 0; n <= t_order_; ++n) {
        for (int e = z_floor_; e <= z_ceil_; ++e) {
            const Rational& v = at(n, e);
            if (e < new_floor) {
                if (!v.is_zero()) throw WindowError("restricted: nonzero coefficient below new floor");
                continue;
            }
            if (e > new_ceil) break;
            out.at(n, e) = v;
        }
    }
    return out;
}

BiSeries BiSeries::truncated(int t_order) const {
    const int n_max = std::min(t_order, t_order_);
    BiSeries out(n_max, z_floor_, z_ceil_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(width_ * (static_cast<size_t>(n_max) + 1)),
              out.data_.begin());
    return out;
}

BiSeries operator*(BiSeries a, const Rational& s) {
    for (auto& x : a.data_) x *= s;
    return a;
}

BiSeries series_add(const BiSeries& a, const BiSeries& b) {
    BiSeries out(std::min(a.t_order_, b.t_order_), std::min(a.z_floor_, b.z_floor_),
                 std::min(a.z_ceil_, b.z_ceil_));
    for (int n = 0; n <= out.t_order_; ++n) {
        for (int e = out.z_floor_; e <= out.z_ceil_; ++e) {
            if (e >= a.z_floor_) out.at(n, e) += a.at(n, e);
            if (e >= b.z_floor_) out.at(n, e) += b.at(n, e);
        }
    }
    return out;
}

BiSeries series_sub(const BiSeries& a, const BiSeries& b) {
    return series_add(a, b * Rational(-1));
}

namespace {

struct Entry {
    int n;
    int e;
    const Rational* v;
};

std::vector<Entry> nonzero_entries(const BiSeries& s, int max_n, int max_e) {
    std::vector<Entry> out;
    for (int n = 0; n <= std::min(max_n, s.t_order()); ++n)
        for (int e = s.z_floor(); e <= std::min(max_e, s.z_ceil()); ++e)
            if (const Rational& v = s.ref(n, e); !v.is_zero()) out.push_back({n, e, &v});
    return out;
}

}  // namespace

BiSeries series_mul(const BiSeries& a, const BiSeries& b) {
    const int floor = a.z_floor_ + b.z_floor_;
    const int ceil = std::min(a.z_ceil_ + b.z_floor_, b.z_ceil_ + a.z_floor_);
    if (ceil < floor)
        throw WindowError("series_mul: guaranteed window is empty; request a larger z-ceiling");
    BiSeries out(std::min(a.t_order_, b.t_order_), floor, ceil);
    const auto xs = nonzero_entries(a, out.t_order_, ceil - b.z_floor_);
    const auto ys = nonzero_entries(b, out.t_order_, ceil - a.z_floor_);
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (x.n + y.n <= out.t_order_ && x.e + y.e <= ceil) out.at(x.n + y.n, x.e + y.e).add_product(*x.v, *y.v);
    return out;
}

BiSeries series_mul(const LaurentPoly& l, const BiSeries& b) {
    if (l.is_zero()) return BiSeries(b.t_order_, b.z_floor_, b.z_ceil_);
    const int floor = l.min_exp() + b.z_floor_;
    const int ceil = b.z_ceil_ + l.min_exp();
    BiSeries out(b.t_order_, floor, ceil);
    for (int e1 = l.min_exp(); e1 <= l.max_exp(); ++e1) {
        const Rational x = l.coeff(e1);
        if (x.is_zero()) continue;
        for (int n = 0; n <= b.t_order_; ++n)
            for (int e2 = b.z_floor_; e2 <= std::min(b.z_ceil_, ceil - e1); ++e2) {
                const Rational& y = b.at(n, e2);
                if (!y.is_zero()) out.at(n, e1 + e2).add_product(x, y);
            }
    }
    return out;
}

BiSeries series_inverse(const BiSeries& a_in) {
    const BiSeries a = a_in.z_floor_ < 0 ? a_in.restricted(0, a_in.z_ceil_) : a_in;
    if (a.z_floor_ > 0 || a.at(0, 0).is_zero())
        throw std::domain_error("series_inverse: t^0 coefficient is not invertible");
    const int ceil = a.z_ceil_;
    const int order = a.t_order_;
    BiSeries b(order, 0, ceil);

    // b_0 = a_0(z)^{-1} as a power series in z.
    std::vector<Rational> a0(static_cast<size_t>(ceil) + 1);
    for (int e = 0; e <= ceil; ++e) a0[static_cast<size_t>(e)] = a.at(0, e);
    const std::vector<Rational> b0 = truncated::inverse(a0, ceil);
    for (int e = 0; e <= ceil; ++e) b.at(0, e) = b0[static_cast<size_t>(e)];

    // b_n = -b_0 * sum_{k=1..n} a_k b_{n-k}
    std::vector<Rational> acc(static_cast<size_t>(ceil) + 1);
    for (int n = 1; n <= order; ++n) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        for (int k = 1; k <= n; ++k)
            for (int e1 = 0; e1 <= ceil; ++e1) {
                const Rational& x = a.at(k, e1);
                if (x.is_zero()) continue;
                for (int e2 = 0; e1 + e2 <= ceil; ++e2) {
                    const Rational& y = b.at(n - k, e2);
                    if (!y.is_zero()) acc[static_cast<size_t>(e1 + e2)].add_product(x, y);
                }
            }
        const std::vector<Rational> bn = truncated::mul(b0, acc, ceil);
        for (int e = 0; e <= ceil; ++e) b.at(n, e) = -bn[static_cast<size_t>(e)];
    }
    return b;
}

BiSeries series_binomial(const BiSeries& s, int m) {
    if (m < 0) throw std::invalid_argument("series_binomial: negative m");
    if (s.z_ceil() < 0) throw WindowError("series_binomial: window excludes z^0");
    BiSeries base = s;
    if (s.z_floor() > 0) {
        base = BiSeries(s.t_order(), 0, s.z_ceil());
        for (int n = 0; n <= s.t_order(); ++n)
            for (int e = s.z_floor(); e <= s.z_ceil(); ++e) base.set(n, e, s.coeff(n, e));
    }
    BiSeries r = BiSeries::one(base.t_order(), base.z_ceil());
    for (int j = 0; j < m; ++j) {
        BiSeries factor = base;
        factor.add_to(0, 0, Rational(-j));
        r = series_mul(r, factor);
    }
    return r * Rational(factorial(static_cast<unsigned long>(m))).inverse();
}

}  // namespace twisted
