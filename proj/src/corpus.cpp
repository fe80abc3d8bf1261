#include "kslope/corpus.hpp"

#include "kslope/errors.hpp"

namespace kslope {

namespace {

ClassVector basis_vector(std::size_t n, std::size_t i, Rational scale = Rational(1)) {
    ClassVector v = ClassVector::zero(n);
    v.coords[i] = std::move(scale);
    return v;
}

Divisor simple_divisor(std::string name, ClassVector cls) {
    Divisor d;
    d.name = std::move(name);
    d.total_class = cls;
    d.components.push_back(DivisorComponent{std::move(cls), 1});
    return d;
}

} // namespace

Setup pp2() {
    Setup s;
    s.name = "pp2";
    s.dimension = 2;
    s.basis = {"H"};
    s.form.dimension = 2;
    s.form.set({0, 0}, Rational(1));
    s.omega = basis_vector(1, 0);
    s.canonical = basis_vector(1, 0, Rational(-3));
    s.twist = ClassVector::zero(1);
    s.divisors.push_back(simple_divisor("line", basis_vector(1, 0)));
    s.curve_cone.push_back(ConeCurve{"line", basis_vector(1, 0)});
    return s;
}

Setup product_of_curves(long genus) {
    if (genus < 2) fail(errc::precondition, "product_of_curves needs genus >= 2");
    Setup s;
    s.name = "product_of_curves_g" + std::to_string(genus);
    s.dimension = 2;
    s.basis = {"f1", "f2", "delta"};
    s.form.dimension = 2;
    s.form.set({0, 1}, Rational(1));
    s.form.set({0, 2}, Rational(1));
    s.form.set({1, 2}, Rational(1));
    s.form.set({2, 2}, Rational(2 - 2 * genus));
    // The s = 1 member of the degenerating family over f1 + f2:
    // 2 (f1 + f2) + delta / (g - 1).
    s.omega = ClassVector({Rational(2), Rational(2), Rational(1, genus - 1)});
    s.canonical = ClassVector({Rational(2 * genus - 2), Rational(2 * genus - 2), Rational(0)});
    s.twist = ClassVector::zero(3);
    s.divisors.push_back(simple_divisor("delta", basis_vector(3, 2)));
    s.curve_cone.push_back(ConeCurve{"f1", basis_vector(3, 0)});
    s.curve_cone.push_back(ConeCurve{"f2", basis_vector(3, 1)});
    s.curve_cone.push_back(ConeCurve{"delta", basis_vector(3, 2)});
    return s;
}

Setup ah_template(long g, long d, const AhAmbient& ambient) {
    if (g < 2) fail(errc::precondition, "ah_template needs genus >= 2");
    if (d < 2) fail(errc::precondition, "ah_template needs degree >= 2");
    if (!ambient.h_squared) fail(errc::precondition, "ah_template needs h_squared");
    if (!ambient.h_dot_gamma) fail(errc::precondition, "ah_template needs h_dot_gamma");
    if (!ambient.k_dot_h) fail(errc::precondition, "ah_template needs k_dot_h");

    const Rational gamma_sq = Rational(d) * Rational(2 - 2 * g);
    Rational k_dot_gamma;
    if (ambient.k_dot_gamma) {
        k_dot_gamma = *ambient.k_dot_gamma;
    } else {
        // Adjunction 2 p_a - 2 = (K + Gamma).Gamma with the default
        // arithmetic genus p_a = d (g - 1) + 1 of a degree-d multisection.
        Rational p_a = ambient.p_a ? *ambient.p_a : Rational(d * (g - 1) + 1);
        k_dot_gamma = Rational(2) * p_a - Rational(2) - gamma_sq;
    }

    Setup s;
    s.name = "ah_g" + std::to_string(g) + "_d" + std::to_string(d);
    s.dimension = 2;
    s.basis = {"H", "Gamma", "K"};
    s.form.dimension = 2;
    s.form.set({0, 0}, *ambient.h_squared);
    s.form.set({0, 1}, *ambient.h_dot_gamma);
    s.form.set({0, 2}, *ambient.k_dot_h);
    s.form.set({1, 1}, gamma_sq);
    s.form.set({1, 2}, k_dot_gamma);
    s.form.set({2, 2}, ambient.k_squared ? *ambient.k_squared : Rational(0));
    s.omega = basis_vector(3, 0);
    s.canonical = basis_vector(3, 2);
    s.twist = ClassVector::zero(3);
    s.divisors.push_back(simple_divisor("Gamma", basis_vector(3, 1)));
    s.curve_cone.push_back(ConeCurve{"Gamma", basis_vector(3, 1)});
    return s;
}

BundleData voisin_bundle_example() {
    BundleData b;
    b.degrees = {Rational(-1), Rational(0)};
    b.total_degree = Rational(-1);
    b.total_rank = 2;
    return b;
}

} // namespace kslope
