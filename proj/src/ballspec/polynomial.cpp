#include "wentzell/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace wentzell {

std::string to_string(const Rational& q) { return q.str(); }

Rational parse_rational(const std::string& text) {
    auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational number: '" + text + "'"); };
    if (text.empty()) return fail();
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const Rational num = parse_rational(text.substr(0, slash));
        const Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) return fail();
        return num / den;
    }
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    boost::multiprecision::cpp_int digits = 0;
    int scale = 0;
    bool any_digit = false, seen_point = false;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits = digits * 10 + (ch - '0');
            any_digit = true;
            if (seen_point) --scale;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) return fail();
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') return fail();
        const std::string exp = text.substr(i + 1);
        if (exp.empty()) return fail();
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(exp, &used);
        } catch (const std::exception&) {
            return fail();
        }
        if (used != exp.size()) return fail();
        scale += e;
    }
    Rational out(digits);
    const boost::multiprecision::cpp_int ten_pow = boost::multiprecision::pow(boost::multiprecision::cpp_int(10), std::abs(scale));
    if (scale >= 0) {
        out *= ten_pow;
    } else {
        out /= ten_pow;
    }
    return negative ? Rational(-out) : out;
}

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

Polynomial Polynomial::constant(int n, const Rational& c) {
    Polynomial p(n);
    p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
    return p;
}

Polynomial Polynomial::variable(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("variable index out of range");
    Exponent e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
    Polynomial p(static_cast<int>(e.size()));
    for (int v : e) {
        if (v < 0) throw std::invalid_argument("negative exponent");
    }
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::radius_squared(int n) {
    Polynomial p(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[i] = 2;
        p.add_term(e, 1);
    }
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool Polynomial::is_homogeneous(int k) const {
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) != k) return false;
    }
    return true;
}

Rational Polynomial::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::homogeneous_part(int m) const {
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) == m) out.terms_.emplace(e, c);
    }
    return out;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent length does not match dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_same_dimension(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomials in different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_dimension(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_dimension(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_dimension(b);
    Polynomial out(a.n_);
    Exponent e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::derivative(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("derivative index out of range");
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d = e;
        --d[i];
        out.add_term(d, c * e[i]);
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < n_; ++i) {
            for (int k = 0; k < e[i]; ++k) term *= x[i];
        }
        sum += term;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    static const char* short_names[] = {"x", "y", "z", "w"};
    std::string out;
    // Highest degree first, then the map's lexicographic order reversed.
    for (int m = degree(); m >= 0; --m) {
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (std::accumulate(e.begin(), e.end(), 0) != m) continue;
            std::string mono;
            for (int i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += n_ <= 4 ? short_names[i] : "x" + std::to_string(i + 1);
                if (e[i] > 1) mono += '^' + std::to_string(e[i]);
            }
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (out.empty()) {
                if (neg) out += '-';
            } else {
                out += neg ? " - " : " + ";
            }
            if (mono.empty()) {
                out += wentzell::to_string(mag);
            } else if (mag == 1) {
                out += mono;
            } else {
                out += wentzell::to_string(mag) + '*' + mono;
            }
        }
    }
    return out;
}

Polynomial laplacian(const Polynomial& p) {
    Polynomial out(p.dimension());
    for (int i = 0; i < p.dimension(); ++i) out += p.derivative(i).derivative(i);
    return out;
}

Polynomial euler_apply(const Polynomial& p, int times) {
    if (times < 0) throw std::invalid_argument("euler_apply: times must be nonnegative");
    Polynomial out(p.dimension());
    for (const auto& [e, c] : p.terms()) {
        const int m = std::accumulate(e.begin(), e.end(), 0);
        Rational f = 1;
        for (int t = 0; t < times; ++t) f *= m;
        out.add_term(e, c * f);
    }
    return out;
}

Polynomial gradient_norm_squared(const Polynomial& p) {
    Polynomial out(p.dimension());
    for (int i = 0; i < p.dimension(); ++i) {
        const Polynomial d = p.derivative(i);
        out += d * d;
    }
    return out;
}

Polynomial hessian_norm_squared(const Polynomial& p) {
    Polynomial out(p.dimension());
    for (int i = 0; i < p.dimension(); ++i) {
        const Polynomial di = p.derivative(i);
        for (int j = 0; j < p.dimension(); ++j) {
            const Polynomial dij = di.derivative(j);
            out += dij * dij;
        }
    }
    return out;
}

std::vector<Exponent> monomial_exponents(int n, int k) {
    std::vector<Exponent> out;
    if (k < 0) return out;
    Exponent e(static_cast<std::size_t>(n), 0);
    // Distribute k among positions i..n-1, leading positions taking the most first.
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == n - 1) {
            e[i] = remaining;
            out.push_back(e);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[i] = v;
            self(self, i + 1, remaining - v);
        }
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace wentzell
