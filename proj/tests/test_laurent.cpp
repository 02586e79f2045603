#include <catch2/catch.hpp>

#include "vknot/laurent.hpp"

using namespace vknot;

namespace {
LaurentPolynomial poly(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPolynomial p;
    for (auto [e, c] : terms) p += LaurentPolynomial::monomial(c, e);
    return p;
}
} // namespace

TEST_CASE("arithmetic keeps no zero coefficients") {
    LaurentPolynomial a = poly({{2, 3}, {0, -1}});
    LaurentPolynomial b = poly({{2, -3}, {1, 5}});
    LaurentPolynomial s = a + b;
    CHECK(s == poly({{1, 5}, {0, -1}}));
    CHECK(s.coeff(2) == 0);
    CHECK((a - a).is_zero());
}

TEST_CASE("multiplication and shifting") {
    // (t - 1)(t + 1) = t^2 - 1
    LaurentPolynomial tm1 = poly({{1, 1}, {0, -1}});
    LaurentPolynomial tp1 = poly({{1, 1}, {0, 1}});
    CHECK(tm1 * tp1 == poly({{2, 1}, {0, -1}}));
    CHECK(tm1.shifted(-3) == poly({{-2, 1}, {-3, -1}}));
}

TEST_CASE("text form: descending exponents, explicit signs, zero") {
    CHECK(LaurentPolynomial{}.to_string() == "0");
    CHECK(poly({{1, 1}, {-1, 1}}).to_string() == "1*t^1 + 1*t^-1");
    CHECK(poly({{2, 1}, {1, -3}, {0, 1}}).to_string() == "1*t^2 + -3*t^1 + 1*t^0");
}

TEST_CASE("units are +-t^k") {
    CHECK(LaurentPolynomial::one().is_unit());
    CHECK(LaurentPolynomial::monomial(-1, 7).is_unit());
    CHECK(!LaurentPolynomial::monomial(2, 0).is_unit());
    CHECK(!poly({{1, 1}, {0, 1}}).is_unit());
    CHECK(!LaurentPolynomial{}.is_unit());
}

TEST_CASE("normalized: lowest exponent zero, positive leading coefficient") {
    LaurentPolynomial p = poly({{3, -2}, {1, 4}});
    LaurentPolynomial n = p.normalized();
    CHECK(n == poly({{2, 2}, {0, -4}}));
    CHECK(LaurentPolynomial{}.normalized().is_zero());
}

TEST_CASE("gcd: hand-checked cases") {
    // gcd(t^2 - 1, t^3 - 1) = t - 1
    LaurentPolynomial a = poly({{2, 1}, {0, -1}});
    LaurentPolynomial b = poly({{3, 1}, {0, -1}});
    CHECK(laurent_gcd(a, b) == poly({{1, 1}, {0, -1}}));

    // content is part of the gcd: gcd(2t, 4) = 2
    CHECK(laurent_gcd(poly({{1, 2}}), poly({{0, 4}})) == poly({{0, 2}}));

    // coprime polynomials give 1
    CHECK(laurent_gcd(poly({{1, 1}, {0, -2}}), poly({{2, 1}, {1, -1}, {0, 1}})) ==
          LaurentPolynomial::one());

    // gcd with zero and gcd(0,0)
    CHECK(laurent_gcd(LaurentPolynomial{}, a) == a.normalized());
    CHECK(laurent_gcd(LaurentPolynomial{}, LaurentPolynomial{}).is_zero());

    // Laurent shifts are units: gcd(t^-3 (t-1), t^5 (t-1)) = t - 1
    CHECK(laurent_gcd(poly({{1, 1}, {0, -1}}).shifted(-3),
                      poly({{1, 1}, {0, -1}}).shifted(5)) == poly({{1, 1}, {0, -1}}));
}

TEST_CASE("exact division") {
    LaurentPolynomial prod = poly({{2, 1}, {1, -1}, {0, 1}}) * poly({{1, 3}, {0, -2}});
    CHECK(divide_exact(prod, poly({{1, 3}, {0, -2}})) == poly({{2, 1}, {1, -1}, {0, 1}}));
    CHECK(divide_exact(LaurentPolynomial{}, poly({{1, 1}})).is_zero());
    CHECK_THROWS_AS(divide_exact(poly({{1, 1}, {0, 1}}), poly({{1, 2}})), std::logic_error);
}
