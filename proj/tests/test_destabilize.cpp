#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kslope/corpus.hpp"
#include "kslope/destabilize.hpp"
#include "kslope/errors.hpp"
#include "kslope/slope.hpp"

#include <functional>
#include <vector>

using namespace kslope;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    throw std::logic_error("expected a kslope::error");
}

ClassVector cv(std::vector<long> v) {
    std::vector<Rational> c(v.begin(), v.end());
    return ClassVector(std::move(c));
}

Divisor simple(std::string name, ClassVector cls) {
    Divisor d;
    d.name = std::move(name);
    d.total_class = cls;
    d.components = {{std::move(cls), 1}};
    return d;
}

} // namespace

TEST_CASE("adjunction genus on the reference models") {
    Setup plane = pp2();
    CHECK(arithmetic_genus(plane, plane.divisors[0]) == Rational(0));
    for (long g : {2L, 3L, 5L}) {
        Setup s = product_of_curves(g);
        CHECK(arithmetic_genus(s, *s.find_divisor("delta")) == Rational(g));
    }

    Setup cube;
    cube.name = "cube";
    cube.dimension = 3;
    cube.basis = {"H"};
    cube.form.dimension = 3;
    cube.form.set({0, 0, 0}, Rational(1));
    cube.omega = cv({1});
    cube.canonical = cv({-4});
    cube.twist = ClassVector::zero(1);
    CHECK(code_of([&] { arithmetic_genus(cube, simple("H", cv({1}))); }) == errc::not_a_surface);
}

TEST_CASE("destabilization criterion") {
    Setup plane = pp2();
    RpCriterion plane_crit = rp_criterion(plane, plane.divisors[0]);
    CHECK_FALSE(plane_crit.holds);
    CHECK(plane_crit.value == Rational(-2));

    Setup s = product_of_curves(2);
    const Divisor& delta = *s.find_divisor("delta");
    RpCriterion crit = rp_criterion(s, delta);
    CHECK(crit.holds);
    CHECK(crit.value == Rational(2));

    // the twist enters through D.[alpha]
    for (const Rational& t : {Rational(1, 4), Rational(1), Rational(2)}) {
        Setup tw = s.with_twist(ClassVector({t, t, Rational(0)}));
        CHECK(rp_criterion(tw, delta).value == Rational(2) + Rational(2) * t);
    }
}

TEST_CASE("degenerating family on the genus-2 product") {
    Setup s = product_of_curves(2);
    const Divisor& delta = *s.find_divisor("delta");
    ClassVector ref = cv({1, 1, 0});

    DegenerationFamily fam = degenerating_family(s, delta, ref);
    REQUIRE(fam.r.size() == 1);
    CHECK(fam.r[0] == Rational(1));
    CHECK(fam.reference == ref);
    CHECK(fam.omega_at(Rational(1)) == s.omega);
    CHECK(fam.omega_at(Rational(0)) == cv({1, 1, 1}));
    CHECK(intersect(s, {fam.omega_at(Rational(0)), delta.total_class}) == Rational(0));

    // genus 5: the Gram matrix is [-8], so r = 1/4
    Setup s5 = product_of_curves(5);
    DegenerationFamily fam5 = degenerating_family(s5, *s5.find_divisor("delta"), ref);
    REQUIRE(fam5.r.size() == 1);
    CHECK(fam5.r[0] == Rational(1, 4));
}

TEST_CASE("degenerating family guards") {
    Setup s = product_of_curves(2);
    const Divisor& delta = *s.find_divisor("delta");
    // f1^2 = 0: no volume to degenerate
    CHECK(code_of([&] { degenerating_family(s, delta, cv({1, 0, 0})); }) == errc::non_positive_volume);
    // (f1+f2+delta)^2 = 4 but it pairs to zero with delta
    CHECK(code_of([&] { degenerating_family(s, delta, cv({1, 1, 1})); }) == errc::cone_violation);
    // Gram [0] for the fibre component
    CHECK(code_of([&] { degenerating_family(s, simple("f1", cv({1, 0, 0})), cv({1, 1, 0})); }) ==
          errc::singular_system);
    // the plane line has Gram [1] > 0
    Setup plane = pp2();
    CHECK(code_of([&] { degenerating_family(plane, plane.divisors[0], cv({1})); }) ==
          errc::not_negative_definite);
}

TEST_CASE("parameter schedule") {
    std::vector<Rational> sched = default_schedule();
    REQUIRE(sched.size() == 20);
    CHECK(sched.front() == Rational(1, 2));
    CHECK(sched.back() == Rational(1, 1 << 20));
    for (std::size_t i = 1; i < sched.size(); ++i) CHECK(sched[i] < sched[i - 1]);
    CHECK(default_schedule(3) == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)});
}

TEST_CASE("genus-2 product: the first violating parameter is 1/32") {
    Setup s = product_of_curves(2);
    const Divisor& delta = *s.find_divisor("delta");
    ClassVector ref = cv({1, 1, 0});

    auto w = find_witness(s, delta, ref);
    REQUIRE(w.has_value());
    CHECK(w->s == Rational(1, 32));
    CHECK(w->lambda_bound_used == Rational(1));
    CHECK(w->lambda_interval.lo == Rational(5263, 65536));
    CHECK(w->lambda_interval.hi == Rational(640595, 1048576));
    CHECK(w->f_value == *Rational::parse("-4861456718673065079/313738764441138233344"));
    CHECK(w->f_value < Rational(0));

    // the witness value re-evaluates exactly at the interval midpoint
    DegenerationFamily fam = degenerating_family(s, delta, ref);
    Setup at = s.with_omega(fam.omega_at(w->s));
    CHECK(f_alpha_at(at, delta, w->lambda_interval.midpoint()) == w->f_value);

    // every earlier (larger) parameter on the schedule is satisfied
    for (const Rational& p : {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)}) {
        Verdict v = check_stability(s.with_omega(fam.omega_at(p)), delta, Rational(1));
        CHECK(v.status == StabilityStatus::SatisfiedOnInterval);
    }
}

TEST_CASE("the gate and the ungated search") {
    // plane: the criterion fails, and the hypothesis D.D_i <= 0 fails too
    Setup plane = pp2();
    CHECK(code_of([&] { find_witness(plane, plane.divisors[0], cv({1})); }) == errc::criterion_not_met);
    CHECK(code_of([&] { witness_search(plane, plane.divisors[0], cv({1})); }) == errc::assumption_violated);

    // negative control: moving the canonical class to (2,2,2) kills both the
    // criterion and every actual violation
    Setup control = product_of_curves(2);
    control.canonical = cv({2, 2, 2});
    const Divisor& delta = *control.find_divisor("delta");
    ClassVector ref = cv({1, 1, 0});
    CHECK(code_of([&] { find_witness(control, delta, ref); }) == errc::criterion_not_met);
    CHECK_FALSE(witness_search(control, delta, ref).has_value());
}

TEST_CASE("multisection template destabilizes immediately") {
    AhAmbient ambient;
    ambient.h_squared = Rational(1);
    ambient.h_dot_gamma = Rational(2);
    ambient.k_dot_h = Rational(-3);
    Setup s = ah_template(2, 2, ambient);
    const Divisor& gamma = *s.find_divisor("Gamma");

    CHECK(rp_criterion(s, gamma).value == Rational(4));
    DegenerationFamily fam = degenerating_family(s, gamma, s.omega);
    REQUIRE(fam.r.size() == 1);
    CHECK(fam.r[0] == Rational(1, 2));

    auto w = find_witness(s, gamma, s.omega);
    REQUIRE(w.has_value());
    CHECK(w->s == Rational(1, 2));
    CHECK(w->lambda_bound_used == Rational(1, 2));
    CHECK(w->f_value < Rational(0));
    Setup at = s.with_omega(fam.omega_at(w->s));
    CHECK(f_alpha_at(at, gamma, w->lambda_interval.midpoint()) == w->f_value);
}
