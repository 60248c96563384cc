#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcf/extensions.hpp"
#include "lcf/polynomial.hpp"

#include <random>

using namespace lcf;

namespace {

// Plain product and composition, written without the Taylor shift.
IntPoly multiply(const IntPoly& f, const IntPoly& g)
{
    IntPoly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] += f[i] * g[j];
    return h;
}

IntPoly compose(const IntPoly& f, const IntPoly& g)
{
    IntPoly out{f.back()};
    for (std::size_t k = f.size() - 1; k-- > 0;) {
        out = multiply(out, g);
        out[0] += f[k];
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

QuadraticElement random_element(const QuadraticField& f, std::mt19937_64& rng)
{
    return {f, random_rational(rng), random_rational(rng)};
}

}  // namespace

TEST_CASE("quadratic field construction")
{
    CHECK_THROWS_AS(QuadraticField(Rational(4), 3), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticField(Rational(17), 2), std::invalid_argument);
    CHECK_THROWS_AS(QuadraticField(Rational(0), 5), std::invalid_argument);
    CHECK_NOTHROW(QuadraticField(Rational(-1), 2));
}

TEST_CASE("parse_quadratic")
{
    const QuadraticField f(Rational(2), 2);
    CHECK(parse_quadratic("2+1r", f) == QuadraticElement(f, 2, 1));
    CHECK(parse_quadratic("2-1r", f) == QuadraticElement(f, 2, -1));
    CHECK(parse_quadratic("-1/2+-3/4r", f) == QuadraticElement(f, Rational(-1, 2), Rational(-3, 4)));
    CHECK(parse_quadratic("7", f) == QuadraticElement(f, 7, 0));
    CHECK(parse_quadratic("r", f) == QuadraticElement(f, 0, 1));
    CHECK(parse_quadratic("-r", f) == QuadraticElement(f, 0, -1));
    CHECK(parse_quadratic("3/2r", f) == QuadraticElement(f, 0, Rational(3, 2)));
    CHECK_THROWS_AS(parse_quadratic("2+xr", f), std::invalid_argument);
    CHECK_THROWS_AS(parse_quadratic("", f), std::invalid_argument);
    CHECK(QuadraticElement(f, 2, -1).to_string() == "2-1r");
    CHECK(parse_quadratic(QuadraticElement(f, Rational(-5, 3), Rational(7, 2)).to_string(), f) ==
          QuadraticElement(f, Rational(-5, 3), Rational(7, 2)));
}

TEST_CASE("quad_norm")
{
    const QuadraticField f2(Rational(2), 2), f10(Rational(10), 2), f5(Rational(5), 2);
    CHECK(quad_norm(QuadraticElement(f2, 2, 1)) == 2);
    CHECK(quad_norm(QuadraticElement(f10, 10, 1)) == 90);
    CHECK(quad_norm(QuadraticElement(f5, 5, 2)) == 5);
    CHECK(quad_norm(QuadraticElement(f5, Rational(7, 3), 0)) == Rational(49, 9));
}

TEST_CASE("is_square in Q_p(sqrt a)")
{
    const QuadraticField f2(Rational(2), 2);
    CHECK(is_square(QuadraticElement(f2, 2, 0)));  // (sqrt 2)^2
    CHECK(is_square(QuadraticElement(f2, 3, 2)));  // (1 + sqrt 2)^2
    CHECK_FALSE(is_square(QuadraticElement(f2, 2, 1)));
    CHECK_FALSE(is_square(QuadraticElement(f2, 2, -1)));
    CHECK_FALSE(is_square(QuadraticElement(f2, -1, 0)));
    // 17 is a 2-adic square but not a rational one
    CHECK(is_square(QuadraticElement(f2, 17, 0)));
    CHECK_FALSE(exact_sqrt(QuadraticElement(f2, 17, 0)).has_value());
    auto r = exact_sqrt(QuadraticElement(f2, 3, 2));
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == QuadraticElement(f2, 3, 2));
}

TEST_CASE("property: squares are squares")
{
    std::mt19937_64 rng(11);
    for (long p : {2, 3, 5}) {
        for (long a : {-1, 2, 3, 5, -2, 6, 10}) {
            if (is_square(Rational(a), p))
                continue;
            const QuadraticField f(Rational(a), p);
            for (int k = 0; k < 20; ++k) {
                auto x = random_element(f, rng);
                if (x.is_zero())
                    continue;
                CHECK(is_square(x * x));
                auto r = exact_sqrt(x * x);
                REQUIRE(r.has_value());
                CHECK((*r) * (*r) == x * x);
            }
        }
    }
}

TEST_CASE("property: quad_norm is multiplicative")
{
    std::mt19937_64 rng(2024);
    const std::vector<std::pair<long, long>> fields = {{2, 2}, {5, 2}, {10, 2}, {-1, 2}, {2, 3}, {3, 7}};
    for (int k = 0; k < 200; ++k) {
        auto [a, p] = fields[k % fields.size()];
        const QuadraticField f(Rational(a), p);
        auto u = random_element(f, rng), v = random_element(f, rng);
        CHECK(quad_norm(u * v) == quad_norm(u) * quad_norm(v));
        if (!v.is_zero())
            CHECK((u / v) * v == u);
    }
}

TEST_CASE("tower_norm")
{
    const QuadraticField f(Rational(2), 2);
    const QuadraticElement c(f, 2, 1);
    const QuarticField L(c);
    const QuarticElement root_c(L, QuadraticElement(f, 0, 0), QuadraticElement(f, 1, 0));
    CHECK(std::get<QuadraticElement>(tower_norm(root_c, NormTarget::mid)) == -c);
    CHECK(std::get<Rational>(tower_norm(root_c, NormTarget::base)) == 2);
    const QuarticElement e0 = QuarticElement::embed(L, QuadraticElement(f, 3, 1));
    CHECK(tower_norm_to_mid(e0) == QuadraticElement(f, 3, 1) * QuadraticElement(f, 3, 1));
    CHECK(norm_by_determinant(root_c) == 2);
    CHECK_THROWS_AS(QuarticField(QuadraticElement(f, 3, 2)), std::invalid_argument);
}

TEST_CASE("property: tower norm transitivity")
{
    std::mt19937_64 rng(5);
    const QuadraticField f2(Rational(2), 2), f5(Rational(5), 2), f3(Rational(3), 7);
    const std::vector<QuarticField> towers = {QuarticField(QuadraticElement(f2, 2, 1)),
                                              QuarticField(QuadraticElement(f5, 5, 2)),
                                              QuarticField(QuadraticElement(f2, 0, 1)),
                                              QuarticField(QuadraticElement(f3, 1, 1))};
    for (int k = 0; k < 100; ++k) {
        const QuarticField& L = towers[k % towers.size()];
        const QuarticElement w(L, random_element(L.base(), rng), random_element(L.base(), rng));
        const Rational base = tower_norm_to_base(w);
        CHECK(base == quad_norm(tower_norm_to_mid(w)));
        CHECK(base == norm_by_determinant(w));
        const QuarticElement w2(L, random_element(L.base(), rng), random_element(L.base(), rng));
        CHECK(tower_norm_to_base(w * w2) == base * tower_norm_to_base(w2));
    }
}

TEST_CASE("reduction_step_check")
{
    const QuadraticField f(Rational(2), 2);
    const QuarticField L(QuadraticElement(f, 2, 1));  // Q_2(eta_2)
    const QuarticElement eta(L, QuadraticElement(f, 0, 0), QuadraticElement(f, 1, 0));

    const QuarticElement v(L, QuadraticElement(f, 2, 0), QuadraticElement(f, 1, 0));
    auto rep = reduction_step_check(Rational(2), v);
    CHECK(rep.v_prime == QuadraticElement(f, 2, -1));
    CHECK(rep.sqrt_of_vprime_in_L);
    REQUIRE(rep.sqrt_of_vprime.has_value());
    CHECK((*rep.sqrt_of_vprime) * (*rep.sqrt_of_vprime) == QuarticElement::embed(L, rep.v_prime));
    CHECK(rep.quartic_cyclic);
    CHECK(rep.norm_to_base == 2);
    CHECK(rep.full_norm == 2);
    CHECK(rep.norms_agree);

    auto rep2 = reduction_step_check(Rational(2), eta);
    CHECK(rep2.v_prime == QuadraticElement(f, -2, -1));
    CHECK(rep2.norm_to_base == 2);

    // v a square from the middle field
    const QuadraticElement w(f, 1, 1);
    auto rep3 = reduction_step_check(Rational(2), QuarticElement::embed(L, w * w));
    CHECK(rep3.norm_to_base == quad_norm(w) * quad_norm(w) * quad_norm(w) * quad_norm(w));
    CHECK_FALSE(rep3.quartic_cyclic);

    CHECK_THROWS_AS(reduction_step_check(Rational(2), QuarticElement::embed(L, QuadraticElement(f, 0, 0))),
                    std::domain_error);
    // Q_2(sqrt 2)(sqrt(1 + sqrt 2)) is not cyclic over Q_2
    const QuarticField bad(QuadraticElement(f, 1, 1));
    CHECK_THROWS_AS(reduction_step_check(Rational(2), QuarticElement::embed(bad, QuadraticElement(f, 1, 0))),
                    std::invalid_argument);
}

TEST_CASE("cyclotomic_degree")
{
    CHECK(cyclotomic_degree(8, 3) == 2);
    CHECK(cyclotomic_degree(18, 7) == 3);
    CHECK(cyclotomic_degree(1, 5) == 1);
    CHECK(cyclotomic_degree(16, 7) == 2);
    CHECK_THROWS_AS(cyclotomic_degree(8, 2), std::invalid_argument);
}

TEST_CASE("unram_norm")
{
    const RootOfUnityElt z8(8, 1, 3);
    CHECK(z8.degree() == 2);
    auto n = unram_norm(z8, 1);
    CHECK(n.exponent() == 4);
    CHECK(n.order() == 2);
    CHECK(unram_norm(RootOfUnityElt(8, 0, 3), 1).exponent() == 0);
    auto n18 = unram_norm(RootOfUnityElt(18, 1, 7), 1);
    CHECK(n18.exponent() == 3);
    CHECK(n18.order() == 6);
    CHECK_THROWS_AS(unram_norm(z8, 3), std::invalid_argument);
    CHECK_THROWS_AS(RootOfUnityElt(4, 1, 2), std::invalid_argument);
    CHECK(z8.frobenius().exponent() == 3);
    CHECK(z8.frobenius().frobenius() == z8);
}

TEST_CASE("property: unram_norm transitivity")
{
    struct Chain {
        long M, p;
    };
    for (auto [M, p] : {Chain{80, 3}, Chain{63, 2}, Chain{91, 3}, Chain{255, 2}, Chain{624, 5}}) {
        const long d = cyclotomic_degree(M, p);
        for (long e = 0; e < M; e += 7) {
            const RootOfUnityElt z(M, e, p);
            for (long d1 = 1; d1 <= d; ++d1) {
                if (d % d1)
                    continue;
                for (long d2 = 1; d2 <= d1; ++d2) {
                    if (d1 % d2)
                        continue;
                    CHECK(unram_norm(unram_norm(z, d1), d2) == unram_norm(z, d2));
                }
            }
            // the norm is the product of the Galois orbit
            long prod = 0;
            RootOfUnityElt conj = z;
            for (long i = 0; i < d; ++i) {
                prod = (prod + conj.exponent()) % M;
                conj = conj.frobenius();
            }
            CHECK(unram_norm(z, 1).exponent() == prod);
        }
    }
}

TEST_CASE("to_padic")
{
    auto z = to_padic(RootOfUnityElt(4, 1, 5));
    CHECK(z * z == PadicNumber::from_rational(Rational(-1), 5));
    CHECK(to_padic(RootOfUnityElt(8, 4, 3)) == PadicNumber::from_rational(Rational(-1), 3));
    CHECK_THROWS_AS(to_padic(RootOfUnityElt(8, 1, 3)), std::invalid_argument);
}

TEST_CASE("eta_minpoly")
{
    CHECK(eta_minpoly(1) == IntPoly{-2, 0, 1});
    CHECK(eta_minpoly(2) == IntPoly{2, 0, -4, 0, 1});
    const IntPoly f3 = eta_minpoly(3);
    CHECK(f3.front() == 2);
    CHECK(f3 == compose(eta_minpoly(2), IntPoly{-2, 0, 1}));
    CHECK(to_string(eta_minpoly(1)) == "[-2, 0, 1]");
    CHECK_THROWS_AS(eta_minpoly(0), std::invalid_argument);
    CHECK_THROWS_AS(eta_minpoly(kMaxEtaIndex + 1), std::invalid_argument);
}

TEST_CASE("eta_norm")
{
    CHECK(eta_norm(1) == -2);
    CHECK(eta_norm(2) == 2);
    CHECK(eta_norm(5) == 2);
    for (int j = 2; j <= kMaxEtaIndex; ++j)
        CHECK(eta_norm(j) == 2);
}

TEST_CASE("property: eta_minpoly is Eisenstein")
{
    for (int j = 1; j <= kMaxEtaIndex; ++j) {
        const IntPoly f = eta_minpoly(j);
        CHECK(degree(f) == (1L << j));
        CHECK(is_eisenstein(f, 2));
    }
    CHECK_FALSE(is_eisenstein(IntPoly{4, 2, 1}, 2));
    CHECK_FALSE(is_eisenstein(IntPoly{2, 1, 1}, 2));
    CHECK_FALSE(is_eisenstein(IntPoly{2, 2, 3}, 2));
}

TEST_CASE("property: recursion f_{j+1} = f_j(x^2 - 2)")
{
    // naive composition on small degrees
    for (int j = 1; j <= 6; ++j)
        CHECK(eta_minpoly(j + 1) == compose(eta_minpoly(j), IntPoly{-2, 0, 1}));
    for (int j = 1; j < 12; ++j)
        CHECK(eta_minpoly(j + 1) == substitute_quadratic(eta_minpoly(j), -2));
    CHECK(substitute_quadratic(IntPoly{0, 1}, 3) == IntPoly{3, 0, 1});
}
