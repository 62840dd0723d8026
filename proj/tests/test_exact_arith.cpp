#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "n2alg/index_expr.hpp"
#include "n2alg/poly.hpp"

#include <random>

using namespace n2alg;

namespace {

Poly random_poly(std::mt19937& rng) {
    static const char* names[] = {"a", "b", "c", "m", "n", "i"};
    std::uniform_int_distribution<int> nterms(0, 5), coeff(-9, 9), deg(0, 2),
        which(0, 5);
    Poly p;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m;
        int vars = deg(rng);
        for (int v = 0; v < vars; ++v) m[names[which(rng)]] += 1;
        p.add_term(m, coeff(rng));
    }
    return p;
}

// independent oracle: quadratic-scan multiplication into a fresh term map
Poly naive_mul(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            Monomial m = mx;
            for (const auto& [name, e] : my) m[name] += e;
            out.add_term(m, cx * cy);
        }
    }
    return out;
}

std::map<std::string, Rational> random_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    std::map<std::string, Rational> pt;
    for (const char* n : {"a", "b", "c", "m", "n", "i"})
        pt[n] = Rational(num(rng), den(rng));
    return pt;
}

}  // namespace

TEST_CASE("rational parsing accepts exact strings only") {
    CHECK(*parse_rational("3") == 3);
    CHECK(*parse_rational("-7/2") == Rational(-7, 2));
    CHECK(*parse_rational("1/3") == Rational(1, 3));
    CHECK(!parse_rational("0.5"));
    CHECK(!parse_rational("1e3"));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational(""));
    CHECK(to_string(Rational(-7, 2)) == "-7/2");
    CHECK(to_string(Rational(4, 2)) == "2");
}

TEST_CASE("polynomial arithmetic fixed values") {
    Poly b = Poly::var("b"), c = Poly::var("c");
    // like-term cancellation
    CHECK((Poly(2) * b + c) + (Poly(2) - Poly(2) * b + c) == Poly(2) + Poly(2) * c);
    // hand expansion of (2b+c)(2+c-2b) = -4b^2 + 4b + c^2 + 2c
    Poly expected;
    expected.add_term({{"b", 2}}, -4);
    expected.add_term({{"b", 1}}, 4);
    expected.add_term({{"c", 2}}, 1);
    expected.add_term({{"c", 1}}, 2);
    CHECK((Poly(2) * b + c) * (Poly(2) + c - Poly(2) * b) == expected);
    CHECK((expected * Poly(0)).is_zero());
}

TEST_CASE("substitution fixed values") {
    Poly a = Poly::var("a"), b = Poly::var("b"), c = Poly::var("c");
    Poly i = Poly::var("i"), m = Poly::var("m");
    Poly d = (Poly(2) * b + c) * (Poly(2) + c - Poly(2) * b);
    CHECK(d.substitute({{"b", Rational(1)}, {"c", Rational(0)}}).is_zero());
    Poly w = a + i + b * m;
    CHECK(w.substitute({{"a", Rational(0)}, {"b", Rational(0)}, {"i", Rational(0)}})
              .is_zero());
    CHECK(w.substitute(std::map<std::string, Rational>{}) == w);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Poly p = random_poly(rng), q = random_poly(rng);
        auto pt = random_point(rng);
        CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
        CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
        CHECK((p - q).evaluate(pt) == p.evaluate(pt) - q.evaluate(pt));
    }
}

TEST_CASE("canonical form soundness") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Poly p = random_poly(rng), q = random_poly(rng);
        CHECK((p + q) - q == p);
        CHECK(p - p == Poly());
        CHECK(-(-p) == p);
    }
}

TEST_CASE("multiplication agrees with the independent oracle") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        Poly p = random_poly(rng), q = random_poly(rng);
        CHECK(p * q == naive_mul(p, q));
    }
}

TEST_CASE("probabilistic zero test implies canonical zero") {
    Poly x = Poly::var("m"), y = Poly::var("n");
    Poly p = (x + y) * (x + y) - x * x - Poly(2) * x * y - y * y;
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> v(-50, 50);
    for (int k = 0; k < 1000; ++k) {
        std::map<std::string, Rational> pt{{"m", v(rng)}, {"n", v(rng)}};
        REQUIRE(p.evaluate(pt) == 0);
    }
    CHECK(p.is_zero());  // normalization must agree with the sampled verdict
}

TEST_CASE("index expressions canonicalize") {
    IndexExpr i = IndexExpr::sym("i"), r1 = IndexExpr::sym("r1"),
              r2 = IndexExpr::sym("r2"), s1 = IndexExpr::sym("s1"),
              s2 = IndexExpr::sym("s2");
    IndexExpr sum = i + r1 + r2 + s1 + s2;
    CHECK(sum == s2 + s1 + r2 + r1 + i);  // order independent
    IndexExpr m = IndexExpr::sym("m");
    CHECK((m + (-m)).is_zero());
    CHECK((m - m) == IndexExpr::constant(0));

    IndexExpr half_odd = IndexExpr::from_doubled(3);
    CHECK(half_odd.is_half_odd());
    CHECK(!half_odd.is_integer_valued());
    CHECK(IndexExpr::constant(3).is_integer_valued());
    CHECK(half_odd + half_odd == IndexExpr::constant(3));
}

TEST_CASE("index expressions convert to polynomials") {
    IndexExpr e = IndexExpr::sym("m").scaled(2) + IndexExpr::from_doubled(-1);
    Poly expected = Poly(2) * Poly::var("m") - Poly(Rational(1, 2));
    CHECK(e.to_poly() == expected);
}
