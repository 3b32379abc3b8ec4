#pragma once

#include <array>
#include <vector>

namespace screw {

// Largest order promised by the public lifting API.
inline constexpr int kMaxOrder = 6;
// Storage bound; orders above kMaxOrder are used internally for deflation.
inline constexpr int kJetCapacity = 24;
// A divisor or radicand whose value is below this is treated as vanishing.
inline constexpr double kVanishTol = 1e-12;

// Truncated Taylor expansion at base_point: coeff(k) = f^(k)(u0) / k!.
class Jet {
public:
    Jet() = default;
    Jet(double base_point, int order);
    Jet(double base_point, const std::vector<double>& coeffs);

    static Jet constant(double value, double base_point, int order);
    static Jet variable(double base_point, int order);

    double base_point() const { return base_; }
    int order() const { return order_; }
    double value() const { return c_[0]; }

    double operator[](int k) const { return c_[k]; }
    double& operator[](int k) { return c_[k]; }
    double coeff(int k) const;
    // f^(k)(u0) = k! * coeff(k).
    double derivative(int k) const;
    std::vector<double> coeffs() const;

    Jet truncated(int order) const;
    Jet differentiated() const;
    // Antiderivative with the given value at the base point.
    Jet integrated(double value_at_base) const;
    // Removes a factor (u - u0)^m; the first m coefficients are dropped.
    Jet deflated(int m) const;
    // Re-expansion of the represented polynomial about base_point + h.
    Jet shifted(double h) const;
    // Jet of t -> f(u0 + s t), still labelled with base point u0.
    Jet scaled_argument(double s) const;
    // First index whose coefficient exceeds tol, or order()+1.
    int vanishing_order(double tol) const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(const Jet& o);
    Jet& operator/=(const Jet& o);
    Jet& operator+=(double s);
    Jet& operator-=(double s);
    Jet& operator*=(double s);
    Jet& operator/=(double s);

private:
    double base_ = 0.0;
    int order_ = 0;
    std::array<double, kJetCapacity + 1> c_{};
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator+(Jet a, double s);
Jet operator+(double s, Jet a);
Jet operator-(Jet a, double s);
Jet operator-(double s, const Jet& a);
Jet operator*(Jet a, double s);
Jet operator*(double s, Jet a);
Jet operator/(Jet a, double s);
Jet operator/(double s, const Jet& a);

Jet sqrt(const Jet& f);
Jet sin(const Jet& f);
Jet cos(const Jet& f);
void sincos(const Jet& f, Jet& s, Jet& c);
// Integer exponents use repeated products, so a vanishing base is allowed.
Jet pow(const Jet& f, int n);
// Integral-valued exponents dispatch to the integer overload.
Jet pow(const Jet& f, double alpha);

}  // namespace screw
