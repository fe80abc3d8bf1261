#pragma once

#include "kslope/geometry.hpp"

#include <optional>

namespace kslope {

// Built-in reference models. Every returned setup passes validate().

// Projective plane: basis {H}, H^2 = 1, K = -3H, Omega = H, cone {H},
// divisor "line" = H.
Setup pp2();

// Product of two genus-g curves (g >= 2): basis {f1, f2, delta} with
// f1^2 = f2^2 = 0, f1.f2 = 1, delta.f_i = 1, delta^2 = 2 - 2g,
// K = (2g-2)(f1 + f2), cone {f1, f2, delta}, divisor "delta".
// Omega is the s = 1 member of the degenerating family built from
// H_ref = f1 + f2: Omega = 2(f1 + f2) + delta/(g-1).
Setup product_of_curves(long genus);

// Ambient intersection data for ah_template. h_squared, h_dot_gamma and
// k_dot_h are required; the divisor self-intersection is d(2-2g) and
// K.Gamma comes from adjunction via p_a (default p_a = d(g-1) + 1) unless
// supplied directly. k_squared is unused by the provided operations and
// defaults to 0.
struct AhAmbient {
    std::optional<Rational> h_squared;
    std::optional<Rational> h_dot_gamma;
    std::optional<Rational> k_dot_h;
    std::optional<Rational> p_a;
    std::optional<Rational> k_dot_gamma;
    std::optional<Rational> k_squared;
};

// Surface containing a degree-d multisection Gamma of a genus-g pencil:
// basis {H, Gamma, K}, Gamma^2 = d(2-2g), Omega = H, cone {Gamma},
// divisor "Gamma". Requires g >= 2, d >= 2.
Setup ah_template(long g, long d, const AhAmbient& ambient);

// Rank-two split bundle with summand degrees (-1, 0).
BundleData voisin_bundle_example();

} // namespace kslope
