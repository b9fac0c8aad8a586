#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wentzell/ballspec.hpp"

namespace wentzell {

namespace {

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<long long>::max()) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<long long>(r);
}

int exponent_sum(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

HarmonicPolynomial::HarmonicPolynomial(Polynomial p, int k) : p_(std::move(p)), k_(k) {
    if (k < 0) throw std::invalid_argument("harmonic polynomial degree must be nonnegative");
    if (!p_.is_homogeneous(k)) throw std::invalid_argument("polynomial is not homogeneous of degree " + std::to_string(k));
    if (!laplacian(p_).is_zero()) throw std::invalid_argument("polynomial is not harmonic: " + p_.to_string());
}

long long mu(int n, int k) {
    if (n < 2 || k < 0) throw std::invalid_argument("mu: need n >= 2 and k >= 0");
    return binomial(n + k - 1, n - 1) - binomial(n + k - 3, n - 1);
}

std::vector<HarmonicPolynomial> harmonic_basis(int n, int k) {
    if (n < 2 || k < 0) throw std::invalid_argument("harmonic_basis: need n >= 2 and k >= 0");
    const std::vector<Exponent> cols = monomial_exponents(n, k);
    const std::vector<Exponent> rows = monomial_exponents(n, k - 2);
    std::map<Exponent, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;

    // Laplacian of each degree-k monomial, as a column over degree k-2 monomials.
    std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Polynomial lap = laplacian(Polynomial::monomial(cols[c]));
        for (const auto& [e, v] : lap.terms()) a[row_of.at(e)][c] = v;
    }

    // Reduced row echelon form over the rationals.
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && a[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& v : a[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols.size(); ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }

    std::vector<bool> is_pivot(cols.size(), false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<HarmonicPolynomial> basis;
    for (std::size_t f = 0; f < cols.size(); ++f) {
        if (is_pivot[f]) continue;
        Polynomial p = Polynomial::monomial(cols[f]);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            if (a[i][f] != 0) p.add_term(cols[pivot_col[i]], -a[i][f]);
        }
        basis.emplace_back(std::move(p), k);
    }
    return basis;
}

Rational sphere_moment(const Exponent& e) {
    const int n = static_cast<int>(e.size());
    Rational num = 1, den = 1;
    int half_total = 0;
    for (int v : e) {
        if (v % 2 != 0) return 0;
        for (int j = v - 1; j > 0; j -= 2) num *= j;  // (v - 1)!!
        half_total += v / 2;
    }
    for (int j = 0; j < half_total; ++j) den *= n + 2 * j;
    return num / den;
}

Rational ball_moment(const Exponent& e) { return sphere_moment(e) / (exponent_sum(e) + static_cast<int>(e.size())); }

Rational integrate_sphere(const Polynomial& p) {
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c * sphere_moment(e);
    return sum;
}

Rational integrate_ball(const Polynomial& p) {
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c * ball_moment(e);
    return sum;
}

Polynomial reduce_on_sphere(const Polynomial& p) {
    const int n = p.dimension();
    const int last = n - 1;
    // Work from the highest power of the last variable down; each substitution
    // x_n^2 -> 1 - sum_{i<n} x_i^2 lowers that power by two.
    std::map<int, Polynomial> by_power;
    for (const auto& [e, c] : p.terms()) by_power.try_emplace(e[last], n).first->second.add_term(e, c);
    Polynomial out(n);
    while (!by_power.empty()) {
        auto it = std::prev(by_power.end());
        const int power = it->first;
        Polynomial part = std::move(it->second);
        by_power.erase(it);
        if (power <= 1) {
            out += part;
            continue;
        }
        for (const auto& [e, c] : part.terms()) {
            Exponent base = e;
            base[last] -= 2;
            by_power.try_emplace(power - 2, n).first->second.add_term(base, c);
            for (int i = 0; i < last; ++i) {
                Exponent t = base;
                t[i] += 2;
                by_power.try_emplace(power - 2, n).first->second.add_term(t, -c);
            }
        }
    }
    return out;
}

Polynomial sphere_laplacian(const Polynomial& p) {
    const int n = p.dimension();
    return laplacian(p) - euler_apply(p, 2) - Rational(n - 2) * euler_apply(p, 1);
}

Polynomial tangential_gradient_squared(const Polynomial& p) {
    const Polynomial radial = euler_apply(p, 1);
    return gradient_norm_squared(p) - radial * radial;
}

}  // namespace wentzell
