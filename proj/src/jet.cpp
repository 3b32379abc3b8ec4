#include "screw/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "screw/errors.hpp"

namespace screw {

namespace {

void check_order(int order) {
    if (order < 0 || order > kJetCapacity) {
        throw OrderOutOfRange("jet order " + std::to_string(order) +
                              " outside 0.." + std::to_string(kJetCapacity));
    }
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

Jet::Jet(double base_point, int order) : base_(base_point), order_(order) {
    check_order(order);
}

Jet::Jet(double base_point, const std::vector<double>& coeffs)
    : base_(base_point), order_(static_cast<int>(coeffs.size()) - 1) {
    check_order(order_);
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

Jet Jet::constant(double value, double base_point, int order) {
    Jet j(base_point, order);
    j.c_[0] = value;
    return j;
}

Jet Jet::variable(double base_point, int order) {
    Jet j(base_point, order);
    j.c_[0] = base_point;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

double Jet::coeff(int k) const {
    if (k < 0 || k > order_) {
        throw OrderOutOfRange("coefficient " + std::to_string(k) +
                              " beyond jet order " + std::to_string(order_));
    }
    return c_[k];
}

double Jet::derivative(int k) const { return coeff(k) * factorial(k); }

std::vector<double> Jet::coeffs() const {
    return std::vector<double>(c_.begin(), c_.begin() + order_ + 1);
}

Jet Jet::truncated(int order) const {
    if (order > order_) {
        throw OrderOutOfRange("cannot raise jet order " + std::to_string(order_) +
                              " to " + std::to_string(order));
    }
    Jet j(base_, order);
    std::copy(c_.begin(), c_.begin() + order + 1, j.c_.begin());
    return j;
}

Jet Jet::differentiated() const {
    if (order_ == 0) return Jet(base_, 0);
    Jet j(base_, order_ - 1);
    for (int k = 0; k < order_; ++k) j.c_[k] = (k + 1) * c_[k + 1];
    return j;
}

Jet Jet::integrated(double value_at_base) const {
    const int order = std::min(order_ + 1, kJetCapacity);
    Jet j(base_, order);
    j.c_[0] = value_at_base;
    for (int k = 1; k <= order; ++k) j.c_[k] = c_[k - 1] / k;
    return j;
}

Jet Jet::deflated(int m) const {
    if (m < 0 || m > order_) {
        throw OrderOutOfRange("cannot deflate order-" + std::to_string(order_) +
                              " jet by " + std::to_string(m));
    }
    Jet j(base_, order_ - m);
    for (int k = 0; k <= order_ - m; ++k) j.c_[k] = c_[k + m];
    return j;
}

Jet Jet::shifted(double h) const {
    Jet j = *this;
    j.base_ = base_ + h;
    // Repeated synthetic division by (t - h).
    for (int i = 0; i < order_; ++i) {
        for (int k = order_ - 1; k >= i; --k) j.c_[k] += h * j.c_[k + 1];
    }
    return j;
}

Jet Jet::scaled_argument(double s) const {
    Jet j = *this;
    double p = 1.0;
    for (int k = 1; k <= order_; ++k) {
        p *= s;
        j.c_[k] *= p;
    }
    return j;
}

int Jet::vanishing_order(double tol) const {
    for (int k = 0; k <= order_; ++k) {
        if (std::abs(c_[k]) > tol) return k;
    }
    return order_ + 1;
}

Jet Jet::operator-() const {
    Jet j = *this;
    for (int k = 0; k <= order_; ++k) j.c_[k] = -c_[k];
    return j;
}

Jet& Jet::operator+=(const Jet& o) {
    order_ = std::min(order_, o.order_);
    for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
    for (int k = order_ + 1; k <= kJetCapacity; ++k) c_[k] = 0.0;
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    order_ = std::min(order_, o.order_);
    for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
    for (int k = order_ + 1; k <= kJetCapacity; ++k) c_[k] = 0.0;
    return *this;
}

Jet& Jet::operator*=(const Jet& o) {
    *this = *this * o;
    return *this;
}

Jet& Jet::operator/=(const Jet& o) {
    *this = *this / o;
    return *this;
}

Jet& Jet::operator+=(double s) {
    c_[0] += s;
    return *this;
}

Jet& Jet::operator-=(double s) {
    c_[0] -= s;
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (int k = 0; k <= order_; ++k) c_[k] *= s;
    return *this;
}

Jet& Jet::operator/=(double s) {
    for (int k = 0; k <= order_; ++k) c_[k] /= s;
    return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }

Jet operator*(const Jet& a, const Jet& b) {
    const int n = std::min(a.order(), b.order());
    Jet r(a.base_point(), n);
    for (int k = 0; k <= n; ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
        r[k] = s;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b) {
    if (std::abs(b.value()) <= kVanishTol) {
        throw DivisionByVanishing("divisor value " + std::to_string(b.value()) +
                                  " at u0 = " + std::to_string(b.base_point()));
    }
    const int n = std::min(a.order(), b.order());
    Jet q(a.base_point(), n);
    for (int k = 0; k <= n; ++k) {
        double s = a[k];
        for (int j = 1; j <= k; ++j) s -= b[j] * q[k - j];
        q[k] = s / b.value();
    }
    return q;
}

Jet operator+(Jet a, double s) { return a += s; }
Jet operator+(double s, Jet a) { return a += s; }
Jet operator-(Jet a, double s) { return a -= s; }
Jet operator-(double s, const Jet& a) { return (-a) += s; }
Jet operator*(Jet a, double s) { return a *= s; }
Jet operator*(double s, Jet a) { return a *= s; }
Jet operator/(Jet a, double s) { return a /= s; }

Jet operator/(double s, const Jet& a) {
    return Jet::constant(s, a.base_point(), a.order()) / a;
}

Jet sqrt(const Jet& f) {
    const double f0 = f.value();
    if (std::abs(f0) <= kVanishTol) {
        throw SqrtOfVanishing("radicand value " + std::to_string(f0) +
                              " at u0 = " + std::to_string(f.base_point()));
    }
    if (f0 < 0.0) {
        throw DomainError("sqrt of negative value " + std::to_string(f0));
    }
    const int n = f.order();
    Jet g(f.base_point(), n);
    g[0] = std::sqrt(f0);
    for (int k = 1; k <= n; ++k) {
        double s = f[k];
        for (int j = 1; j < k; ++j) s -= g[j] * g[k - j];
        g[k] = s / (2.0 * g[0]);
    }
    return g;
}

void sincos(const Jet& f, Jet& s, Jet& c) {
    const int n = f.order();
    s = Jet(f.base_point(), n);
    c = Jet(f.base_point(), n);
    s[0] = std::sin(f.value());
    c[0] = std::cos(f.value());
    for (int k = 1; k <= n; ++k) {
        double ss = 0.0;
        double cc = 0.0;
        for (int j = 1; j <= k; ++j) {
            ss += j * f[j] * c[k - j];
            cc -= j * f[j] * s[k - j];
        }
        s[k] = ss / k;
        c[k] = cc / k;
    }
}

Jet sin(const Jet& f) {
    Jet s, c;
    sincos(f, s, c);
    return s;
}

Jet cos(const Jet& f) {
    Jet s, c;
    sincos(f, s, c);
    return c;
}

Jet pow(const Jet& f, int n) {
    if (n < 0) return 1.0 / pow(f, -n);
    Jet result = Jet::constant(1.0, f.base_point(), f.order());
    Jet base = f;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

Jet pow(const Jet& f, double alpha) {
    if (alpha == std::nearbyint(alpha) && std::abs(alpha) <= 64.0) {
        return pow(f, static_cast<int>(alpha));
    }
    const double f0 = f.value();
    if (std::abs(f0) <= kVanishTol) {
        throw SqrtOfVanishing("non-integer power of vanishing value at u0 = " +
                              std::to_string(f.base_point()));
    }
    if (f0 < 0.0) {
        throw DomainError("non-integer power of negative value " + std::to_string(f0));
    }
    const int n = f.order();
    Jet g(f.base_point(), n);
    g[0] = std::pow(f0, alpha);
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) s += (alpha * i - (k - i)) * f[i] * g[k - i];
        g[k] = s / (k * f0);
    }
    return g;
}

}  // namespace screw
