#include "waveray/fields.hpp"

#include <cmath>

#include "waveray/errors.hpp"

namespace waveray {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0))
        throw ValidationError(std::string("field.") + name + ": must be > 0");
}

}  // namespace

void validate_field(const FieldSpec& spec) {
    std::visit(
        [](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, GaussianBarrier>) {
                require_positive(f.v0_ratio, "v0_ratio");
                require_positive(f.d, "d");
            } else if constexpr (std::is_same_v<T, LogisticStep>) {
                require_positive(f.v0_ratio, "v0_ratio");
                require_positive(f.alpha, "alpha");
            } else if constexpr (std::is_same_v<T, LensField>) {
                require_positive(f.l_x, "l_x");
                require_positive(f.l_z, "l_z");
            }
        },
        spec);
}

double field_value(const FieldSpec& spec, double x, double z) {
    return std::visit(
        [x, z](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FreeField>) {
                return 0.0;
            } else if constexpr (std::is_same_v<T, ConstantForce>) {
                return f.f * z;
            } else if constexpr (std::is_same_v<T, GaussianBarrier>) {
                const double u = (z - f.z_g) / f.d;
                return f.v0_ratio * std::exp(-2.0 * u * u);
            } else if constexpr (std::is_same_v<T, LogisticStep>) {
                return f.v0_ratio / (1.0 + std::exp(-f.alpha * (z - f.z_l)));
            } else {
                static_assert(std::is_same_v<T, LensField>);
                const double gx = x / f.l_x;
                const double gz = (z - f.z_0) / f.l_z;
                const double n = 1.0 + std::exp(-gx * gx - gz * gz);
                return 1.0 - n * n;
            }
        },
        spec);
}

Vec2 field_gradient(const FieldSpec& spec, double x, double z) {
    return std::visit(
        [x, z](const auto& f) -> Vec2 {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FreeField>) {
                return {0.0, 0.0};
            } else if constexpr (std::is_same_v<T, ConstantForce>) {
                return {0.0, f.f};
            } else if constexpr (std::is_same_v<T, GaussianBarrier>) {
                const double u = (z - f.z_g) / f.d;
                const double v = f.v0_ratio * std::exp(-2.0 * u * u);
                return {0.0, -4.0 * u / f.d * v};
            } else if constexpr (std::is_same_v<T, LogisticStep>) {
                // V' = v0 * alpha * s (1 - s) with s the logistic itself;
                // written via exp to stay accurate in both tails.
                const double e = std::exp(-f.alpha * (z - f.z_l));
                const double s = 1.0 / (1.0 + e);
                return {0.0, f.v0_ratio * f.alpha * e * s * s};
            } else {
                static_assert(std::is_same_v<T, LensField>);
                const double gx = x / f.l_x;
                const double gz = (z - f.z_0) / f.l_z;
                const double g = std::exp(-gx * gx - gz * gz);
                const double n = 1.0 + g;
                // dV = -2 n dn, dn = g * (-2 gx / l_x, -2 gz / l_z)
                return {4.0 * n * g * gx / f.l_x, 4.0 * n * g * gz / f.l_z};
            }
        },
        spec);
}

std::string field_type_name(const FieldSpec& spec) {
    return std::visit(
        [](const auto& f) -> std::string {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, FreeField>) return "free";
            else if constexpr (std::is_same_v<T, ConstantForce>) return "constant_force";
            else if constexpr (std::is_same_v<T, GaussianBarrier>) return "gaussian_barrier";
            else if constexpr (std::is_same_v<T, LogisticStep>) return "logistic_step";
            else return "lens";
        },
        spec);
}

}  // namespace waveray
