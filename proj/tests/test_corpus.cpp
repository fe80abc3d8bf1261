#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kslope/corpus.hpp"
#include "kslope/destabilize.hpp"
#include "kslope/errors.hpp"

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

AhAmbient default_ambient() {
    AhAmbient a;
    a.h_squared = Rational(1);
    a.h_dot_gamma = Rational(2);
    a.k_dot_h = Rational(-3);
    return a;
}

} // namespace

TEST_CASE("every reference model validates") {
    CHECK_NOTHROW(validate(pp2()));
    for (long g : {2L, 3L, 5L}) CHECK_NOTHROW(validate(product_of_curves(g)));
    CHECK_NOTHROW(validate(ah_template(2, 2, default_ambient())));
    CHECK_NOTHROW(validate(ah_template(3, 4, default_ambient())));
}

TEST_CASE("plane model") {
    Setup s = pp2();
    CHECK(s.name == "pp2");
    CHECK(s.dimension == 2);
    REQUIRE(s.basis.size() == 1);
    CHECK(s.basis[0] == "H");
    CHECK(s.omega == cv({1}));
    CHECK(s.canonical == cv({-3}));
    CHECK(s.twist == ClassVector::zero(1));
    REQUIRE(s.divisors.size() == 1);
    CHECK(s.divisors[0].name == "line");
    CHECK(s.divisors[0].total_class == cv({1}));
    REQUIRE(s.curve_cone.size() == 1);
    CHECK(s.curve_cone[0].name == "line");
    CHECK(intersect(s, {s.omega, s.omega}) == Rational(1));
}

TEST_CASE("product model across genera") {
    for (long g : {2L, 3L, 5L}) {
        Setup s = product_of_curves(g);
        ClassVector delta = cv({0, 0, 1});
        CHECK(intersect(s, {delta, delta}) == Rational(2 - 2 * g));
        CHECK(intersect(s, {s.omega, delta}) == Rational(2));
        CHECK(intersect(s, {s.omega, s.omega}) == Rational(8) + Rational(6, g - 1));
        CHECK(s.canonical == Rational(2 * g - 2) * cv({1, 1, 0}));
        CHECK(s.omega == Rational(2) * cv({1, 1, 0}) + Rational(1, g - 1) * delta);
        CHECK(arithmetic_genus(s, *s.find_divisor("delta")) == Rational(g));
        REQUIRE(s.curve_cone.size() == 3);
    }
    CHECK(code_of([] { product_of_curves(1); }) == errc::precondition);
    CHECK(code_of([] { product_of_curves(0); }) == errc::precondition);
}

TEST_CASE("multisection template numbers") {
    Setup s = ah_template(2, 2, default_ambient());
    REQUIRE(s.basis.size() == 3);
    CHECK(s.basis == std::vector<std::string>{"H", "Gamma", "K"});
    ClassVector H = cv({1, 0, 0});
    ClassVector gamma = cv({0, 1, 0});
    ClassVector K = cv({0, 0, 1});
    CHECK(s.omega == H);
    CHECK(s.canonical == K);
    CHECK(intersect(s, {H, H}) == Rational(1));
    CHECK(intersect(s, {H, gamma}) == Rational(2));
    CHECK(intersect(s, {K, H}) == Rational(-3));
    CHECK(intersect(s, {gamma, gamma}) == Rational(-4)); // d(2-2g)
    CHECK(intersect(s, {K, gamma}) == Rational(8));      // adjunction at the default p_a
    CHECK(intersect(s, {K, K}) == Rational(0));
    CHECK(arithmetic_genus(s, *s.find_divisor("Gamma")) == Rational(3)); // d(g-1)+1

    AhAmbient with_pa = default_ambient();
    with_pa.p_a = Rational(2);
    Setup t = ah_template(2, 2, with_pa);
    CHECK(intersect(t, {K, gamma}) == Rational(6));
    CHECK(arithmetic_genus(t, *t.find_divisor("Gamma")) == Rational(2));

    AhAmbient direct = default_ambient();
    direct.k_dot_gamma = Rational(10);
    Setup u = ah_template(2, 2, direct);
    CHECK(intersect(u, {K, gamma}) == Rational(10));
    CHECK(arithmetic_genus(u, *u.find_divisor("Gamma")) == Rational(4));

    AhAmbient with_k2 = default_ambient();
    with_k2.k_squared = Rational(9);
    CHECK(intersect(ah_template(2, 2, with_k2), {K, K}) == Rational(9));
}

TEST_CASE("multisection template guards") {
    CHECK(code_of([] { ah_template(1, 2, default_ambient()); }) == errc::precondition);
    CHECK(code_of([] { ah_template(2, 1, default_ambient()); }) == errc::precondition);
    AhAmbient missing;
    missing.h_dot_gamma = Rational(2);
    missing.k_dot_h = Rational(-3);
    CHECK(code_of([&] { ah_template(2, 2, missing); }) == errc::precondition);
}

TEST_CASE("split bundle example") {
    BundleData b = voisin_bundle_example();
    REQUIRE(b.is_split());
    REQUIRE(b.degrees.size() == 2);
    CHECK(b.degrees[0] == Rational(-1));
    CHECK(b.degrees[1] == Rational(0));
    CHECK(b.total_degree == Rational(-1));
    CHECK(b.total_rank == 2);
}
