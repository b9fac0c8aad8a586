#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wentzell {

using Rational = boost::multiprecision::cpp_rational;
using Exponent = std::vector<int>;

// Exact text "p/q", or "p" for integers.
std::string to_string(const Rational& q);

// Parses "p/q", integers and decimals with optional exponent ("0.25", "1e-3") exactly.
Rational parse_rational(const std::string& text);

// Multivariate polynomial in n variables with exact rational coefficients.
// Zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(int n);

    static Polynomial constant(int n, const Rational& c);
    static Polynomial variable(int n, int i);
    static Polynomial monomial(const Exponent& e, const Rational& c = 1);
    // |x|^2
    static Polynomial radius_squared(int n);

    int dimension() const { return n_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int k) const;
    Rational coefficient(const Exponent& e) const;
    Polynomial homogeneous_part(int m) const;

    void add_term(const Exponent& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const { return *this * Rational(-1); }
    bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    Polynomial derivative(int i) const;
    // Value at a rational point.
    Rational evaluate(const std::vector<Rational>& x) const;
    // Human-readable form using x, y, z, w for n <= 4 and x1..xn otherwise.
    std::string to_string() const;

private:
    void check_same_dimension(const Polynomial& o) const;

    int n_;
    std::map<Exponent, Rational> terms_;
};

Polynomial laplacian(const Polynomial& p);
// Lambda^times p with Lambda = sum x_i d/dx_i.
Polynomial euler_apply(const Polynomial& p, int times = 1);
// sum_i (dp/dx_i)^2
Polynomial gradient_norm_squared(const Polynomial& p);
// sum_{i,j} (d^2 p/dx_i dx_j)^2
Polynomial hessian_norm_squared(const Polynomial& p);

// All exponents of total degree k in n variables, in a fixed order.
std::vector<Exponent> monomial_exponents(int n, int k);

}  // namespace wentzell
