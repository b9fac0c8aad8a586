#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wentzell/bounds.hpp"

namespace wentzell {

ReillySides reilly_sides(const Polynomial& f) {
    const int n = f.dimension();
    if (n < 2) throw std::invalid_argument("reilly_sides: dimension must be >= 2");
    const Polynomial lap = laplacian(f);
    const Polynomial h = euler_apply(f, 1);
    // On the unit sphere the second fundamental form is the identity, so H = 1 and
    // sigma(grad z, grad z) = |grad_S z|^2.
    const Polynomial boundary = (Rational(n - 1) * h + Rational(2) * sphere_laplacian(f)) * h +
                                tangential_gradient_squared(f);
    return {integrate_ball(lap * lap - hessian_norm_squared(f)), integrate_sphere(boundary)};
}

double reilly_residual(const Polynomial& f, const DomainSpec& disk) {
    if (disk.kind() != DomainKind::disk || disk.radius() != 1.0 || disk.center().x != 0.0 || disk.center().y != 0.0) {
        throw std::invalid_argument("reilly_residual: domain must be the unit disk centered at the origin");
    }
    if (f.dimension() != 2) throw std::invalid_argument("reilly_residual: expected a polynomial in two variables");
    const ReillySides s = reilly_sides(f);
    const Rational diff = s.lhs - s.rhs;
    return std::abs(static_cast<double>(diff)) * 2.0 * std::numbers::pi;
}

}  // namespace wentzell
