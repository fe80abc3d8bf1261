#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kslope/errors.hpp"
#include "kslope/linsolve.hpp"
#include "kslope/poly.hpp"
#include "kslope/rational.hpp"
#include "kslope/sign.hpp"

#include <functional>

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

} // namespace

TEST_CASE("rational construction and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(Rational(7, 2).is_integer());
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(4, -6).str() == "-2/3");
    CHECK_THROWS_AS(Rational(1, 0), error);
    CHECK(Rational(5, 1).fits_long());
    CHECK(Rational(5, 1).as_long() == 5);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-3.25") == Rational(-13, 4));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("0.000") == Rational(0));
    CHECK(Rational::parse("123456789012345678901234567890").has_value());
    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("-").has_value());
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("1.2.3").has_value());
    CHECK_FALSE(Rational::parse("a").has_value());
    CHECK_FALSE(Rational::parse("1e3").has_value());
    CHECK_FALSE(Rational::parse(" 1").has_value());
    CHECK_FALSE(Rational::parse("1 ").has_value());
    CHECK_FALSE(Rational::parse("1/-2").has_value());
    CHECK_FALSE(Rational::parse("1/").has_value());
    CHECK_FALSE(Rational::parse(".5").has_value());
}

TEST_CASE("rational arithmetic and order") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a >= a);
    CHECK(a.abs() == a);
    CHECK((-a).abs() == a);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-7).sign() == -1);
    CHECK_THROWS_AS(a / Rational(0), error);
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3));
}

TEST_CASE("polynomial arithmetic") {
    Poly p({Rational(1), Rational(-2), Rational(1)}); // 1 - 2x + x^2
    Poly x = Poly::variable();
    CHECK(p.degree() == 2);
    CHECK(Poly().degree() == -1);
    CHECK(p(Rational(1)) == Rational(0));
    CHECK(p(Rational(3)) == Rational(4));
    CHECK((p * x).degree() == 3);
    CHECK((p - p).is_zero());
    CHECK(Poly({Rational(0)}).is_zero());
    CHECK(p.derivative() == Poly({Rational(-2), Rational(2)}));
    CHECK(x.antiderivative() == Poly({Rational(0), Rational(0), Rational(1, 2)}));
    CHECK(p == Poly::constant(Rational(1)) - Rational(2) * x + x * x);
    CHECK(p.coeff(1) == Rational(-2));
    CHECK(p.coeff(7) == Rational(0));
    CHECK(p.leading() == Rational(1));
    CHECK(Poly::monomial(3, Rational(2)) == Rational(2) * x * x * x);
    CHECK(p.str("x") == "1 - 2*x + x^2");
    CHECK(Poly().str() == "0");
    CHECK(Poly({Rational(0), Rational(-1, 2)}).str("t") == "-1/2*t");
}

TEST_CASE("argument transforms") {
    Poly p({Rational(1), Rational(0), Rational(1)}); // 1 + x^2
    CHECK(p.scaled_argument(Rational(2)) == Poly({Rational(1), Rational(0), Rational(4)}));
    CHECK(p.scaled_argument(Rational(1)) == p);
    CHECK(p.shifted_argument(Rational(1)) == Poly({Rational(2), Rational(2), Rational(1)}));
    CHECK(p.shifted_argument(Rational(0)) == p);
    // round trip
    Poly q({Rational(3), Rational(-1, 2), Rational(0), Rational(5)});
    CHECK(q.scaled_argument(Rational(3)).scaled_argument(Rational(1, 3)) == q);
    CHECK(q.shifted_argument(Rational(2, 7)).shifted_argument(Rational(-2, 7)) == q);
}

TEST_CASE("exact integration") {
    CHECK(poly_cumulative(Poly::constant(Rational(1)), Rational(3)) == Rational(3));
    CHECK(poly_cumulative(Poly::variable(), Rational(2)) == Rational(2));
    Poly alpha1({Rational(1, 2), Rational(-1), Rational(1, 2)}); // (1-x)^2 / 2
    CHECK(poly_cumulative(alpha1, Rational(1)) == Rational(1, 6));
    CHECK(Poly::constant(Rational(1)).linear_weight_integral() ==
          Poly({Rational(0), Rational(0), Rational(1, 2)}));
    CHECK(alpha1.linear_weight_integral() ==
          Poly({Rational(0), Rational(0), Rational(1, 4), Rational(-1, 6), Rational(1, 24)}));
    CHECK(Poly().linear_weight_integral().is_zero());
}

TEST_CASE("division, gcd, squarefree part") {
    Poly a({Rational(-1), Rational(0), Rational(1)}); // x^2 - 1
    Poly b({Rational(-1), Rational(1)});              // x - 1
    auto [q, r] = divmod(a, b);
    CHECK(q == Poly({Rational(1), Rational(1)}));
    CHECK(r.is_zero());
    auto [q2, r2] = divmod(b, a);
    CHECK(q2.is_zero());
    CHECK(r2 == b);
    CHECK_THROWS_AS(divmod(a, Poly()), error);
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_gcd(Rational(7) * a, Rational(3) * b) == b); // monic result
    Poly c({Rational(1), Rational(1)});                     // x + 1
    Poly sq = b * b * c;                                    // (x-1)^2 (x+1)
    Poly sf = squarefree_part(sq);
    CHECK(sf.degree() == 2);
    CHECK(divmod(sf, b).second.is_zero());
    CHECK(divmod(sf, c).second.is_zero());
    CHECK(poly_gcd(Poly(), Poly()).is_zero());
    CHECK(squarefree_part(Poly::constant(Rational(5))) == Poly::constant(Rational(5)));
}

TEST_CASE("root isolation") {
    Interval unit{Rational(0), Rational(1)};
    Rational max_width = Rational(1) / pow(Rational(2), 20);

    Poly p = Poly({Rational(-1, 3), Rational(1)}) * Poly({Rational(-1, 2), Rational(1)}) *
             Poly({Rational(-2), Rational(1)});
    auto roots = isolate_roots(p, unit);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].contains(Rational(1, 3)));
    CHECK(roots[1].contains(Rational(1, 2)));
    CHECK(roots[0].width() <= max_width);
    CHECK(roots[1].width() <= max_width);
    CHECK(roots[0].hi < roots[1].lo); // strict separation

    // roots at the endpoints come back as exact points
    Poly q = Poly({Rational(0), Rational(1)}) * Poly({Rational(-1), Rational(1)}); // x(x-1)
    auto roots2 = isolate_roots(q, unit);
    REQUIRE(roots2.size() == 2);
    CHECK(roots2[0].is_point());
    CHECK(roots2[0].lo == Rational(0));
    CHECK(roots2[1].is_point());
    CHECK(roots2[1].lo == Rational(1));

    // multiple roots collapse to one
    Poly dbl = Poly({Rational(-1, 3), Rational(1)});
    dbl = dbl * dbl;
    auto roots3 = isolate_roots(dbl, unit);
    REQUIRE(roots3.size() == 1);
    CHECK(roots3[0].contains(Rational(1, 3)));

    // irrational root bracketed exactly: x^2 - 2 on [0, 2]
    auto roots4 = isolate_roots(Poly({Rational(-2), Rational(0), Rational(1)}), {Rational(0), Rational(2)});
    REQUIRE(roots4.size() == 1);
    CHECK_FALSE(roots4[0].is_point());
    CHECK(roots4[0].width() <= Rational(2) / pow(Rational(2), 20));
    CHECK(roots4[0].lo * roots4[0].lo < Rational(2));
    CHECK(roots4[0].hi * roots4[0].hi > Rational(2));

    // dyadic root gets found exactly by the midpoint probe
    auto roots5 = isolate_roots(Poly({Rational(-1, 2), Rational(1)}), unit);
    REQUIRE(roots5.size() == 1);
    CHECK(roots5[0].is_point());
    CHECK(roots5[0].lo == Rational(1, 2));

    CHECK(isolate_roots(Poly({Rational(1), Rational(0), Rational(1)}), unit).empty());
    CHECK_THROWS_AS(isolate_roots(Poly(), unit), error);

    // point domain
    auto roots6 = isolate_roots(Poly({Rational(-1, 2), Rational(1)}), {Rational(1, 2), Rational(1, 2)});
    REQUIRE(roots6.size() == 1);
    CHECK(roots6[0].is_point());
}

TEST_CASE("sign classification") {
    Interval unit{Rational(0), Rational(1)};

    auto r1 = min_sign_on_interval(Poly({Rational(1), Rational(1)}), unit);
    CHECK(r1.verdict == SignVerdict::StrictlyPositive);
    CHECK(r1.zeros.empty());
    CHECK_FALSE(r1.negative_witness.has_value());

    Poly sq = Poly({Rational(-1, 3), Rational(1)});
    sq = sq * sq;
    auto r2 = min_sign_on_interval(sq, unit);
    CHECK(r2.verdict == SignVerdict::NonnegativeWithZeros);
    REQUIRE(r2.zeros.size() == 1);
    CHECK(r2.zeros[0].contains(Rational(1, 3)));
    CHECK_FALSE(r2.negative_witness.has_value());

    auto r3 = min_sign_on_interval(Poly({Rational(0), Rational(-1), Rational(1)}), unit); // x(x-1)
    CHECK(r3.verdict == SignVerdict::AttainsNegative);
    REQUIRE(r3.negative_witness.has_value());
    CHECK(r3.negative_witness->where.contains(Rational(1, 2)));
    CHECK(r3.negative_witness->value == Rational(-1, 4));
    REQUIRE(r3.zeros.size() == 2);

    auto r4 = min_sign_on_interval(Poly(), unit);
    CHECK(r4.verdict == SignVerdict::NonnegativeWithZeros);

    auto r5 = min_sign_on_interval(Poly::constant(Rational(-1)), {Rational(1, 2), Rational(1, 2)});
    CHECK(r5.verdict == SignVerdict::AttainsNegative);

    auto r6 = min_sign_on_interval(Poly::constant(Rational(2)), {Rational(1, 2), Rational(1, 2)});
    CHECK(r6.verdict == SignVerdict::StrictlyPositive);
}

TEST_CASE("certified negativity of a frozen cubic") {
    // (1/100) x - (19597/40802) x^2 + (13400/20401) x^3: the slope polynomial
    // of the s = 1/100 member of the standard degenerating family on the
    // genus-2 product surface.
    Poly F({Rational(0), Rational(1, 100), Rational(-19597, 40802), Rational(13400, 20401)});
    CHECK(F(Rational(1, 4)) == Rational(-281623, 16320800));

    auto report = min_sign_on_interval(F, {Rational(0), Rational(1)});
    CHECK(report.verdict == SignVerdict::AttainsNegative);
    REQUIRE(report.negative_witness.has_value());
    CHECK(report.negative_witness->where.contains(Rational(1, 4)));
    CHECK(report.negative_witness->value.sign() < 0);
    REQUIRE(report.zeros.size() == 3);
    CHECK(report.zeros[0].is_point());
    CHECK(report.zeros[0].lo == Rational(0));
    // interior crossings near 0.0215 and 0.7098
    CHECK(report.zeros[1].lo > Rational(1, 100));
    CHECK(report.zeros[1].hi < Rational(3, 100));
    CHECK(report.zeros[2].lo > Rational(7, 10));
    CHECK(report.zeros[2].hi < Rational(71, 100));
}

TEST_CASE("negative definite solver") {
    CHECK(solve_negdef({{Rational(-2)}}, {Rational(-2)}) == std::vector<Rational>{Rational(1)});

    auto r = solve_negdef({{Rational(-2), Rational(1)}, {Rational(1), Rational(-2)}},
                          {Rational(-1), Rational(-1)});
    CHECK(r == std::vector<Rational>({Rational(1), Rational(1)}));

    Matrix tri = {{Rational(-2), Rational(1), Rational(0)},
                  {Rational(1), Rational(-2), Rational(1)},
                  {Rational(0), Rational(1), Rational(-2)}};
    auto x = solve_negdef(tri, {Rational(-1), Rational(0), Rational(-1)});
    CHECK(x == std::vector<Rational>({Rational(1), Rational(1), Rational(1)}));

    CHECK(code_of([] { solve_negdef({{Rational(1)}}, {Rational(1)}); }) == errc::not_negative_definite);
    CHECK(code_of([] { solve_negdef({{Rational(0)}}, {Rational(1)}); }) == errc::singular_system);
    CHECK(code_of([] {
              solve_negdef({{Rational(-1), Rational(1)}, {Rational(1), Rational(-1)}},
                           {Rational(0), Rational(0)});
          }) == errc::singular_system);
    CHECK(code_of([] {
              solve_negdef({{Rational(-1), Rational(2)}, {Rational(1), Rational(-1)}},
                           {Rational(0), Rational(0)});
          }) == errc::precondition);
    CHECK(code_of([] { solve_negdef({{Rational(-1)}}, {Rational(1), Rational(2)}); }) == errc::precondition);
    CHECK(code_of([] { solve_negdef({}, {}); }) == errc::precondition);
}
