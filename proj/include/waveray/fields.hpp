#pragma once

#include <string>
#include <variant>

#include "waveray/vec2.hpp"

namespace waveray {

// Stationary external potentials V(x, z), dimensionless: energies as V/E,
// lengths in w0. Every variant is a total, smooth function of (x, z).

struct FreeField {
    friend bool operator==(const FreeField&, const FreeField&) = default;
};

// V = f * z, a constant force -f in the z direction (f = F*w0/E).
struct ConstantForce {
    double f = 1e-4;

    friend bool operator==(const ConstantForce&, const ConstantForce&) = default;
};

// V = v0_ratio * exp(-2 (z - z_g)^2 / d^2); d is the flex-to-flex distance.
struct GaussianBarrier {
    double v0_ratio = 1.0;
    double z_g = 10000.0;
    double d = 5000.0;

    friend bool operator==(const GaussianBarrier&, const GaussianBarrier&) = default;
};

// V = v0_ratio / (1 + exp(-alpha (z - z_l))); step from 0 up to v0_ratio.
struct LogisticStep {
    double v0_ratio = 1.0;
    double alpha = 0.002;
    double z_l = 10000.0;

    friend bool operator==(const LogisticStep&, const LogisticStep&) = default;
};

// Lens-like focusing bump, stored through the refractive-index mapping:
// n(x,z) = 1 + exp(-(x/l_x)^2 - ((z-z_0)/l_z)^2), V = 1 - n^2 (attractive).
struct LensField {
    double l_x = 800.0;
    double l_z = 600.0;
    double z_0 = 2000.0;

    friend bool operator==(const LensField&, const LensField&) = default;
};

using FieldSpec = std::variant<FreeField, ConstantForce, GaussianBarrier, LogisticStep, LensField>;

// Throws ValidationError if a parameter violates its invariant
// (d, l_x, l_z, alpha, v0_ratio must all be positive).
void validate_field(const FieldSpec& spec);

double field_value(const FieldSpec& spec, double x, double z);

// Analytic closed-form gradient (dV/dx, dV/dz).
Vec2 field_gradient(const FieldSpec& spec, double x, double z);

// Schema tag: free, constant_force, gaussian_barrier, logistic_step, lens.
std::string field_type_name(const FieldSpec& spec);

inline bool is_free_field(const FieldSpec& spec) {
    return std::holds_alternative<FreeField>(spec);
}

}  // namespace waveray
