#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcf/brauer.hpp"

#include <numeric>
#include <random>

using namespace lcf;

TEST_CASE("BrauerInv")
{
    CHECK(BrauerInv(3, 8).to_string() == "3/8");
    CHECK(BrauerInv(-1, 4) == BrauerInv(3, 4));
    CHECK(BrauerInv(6, 4) == BrauerInv::half());
    CHECK(BrauerInv(5, 5).is_zero());
    CHECK(BrauerInv().to_string() == "0/1");
    CHECK(BrauerInv(1, 3) + BrauerInv(2, 3) == BrauerInv());
    CHECK(BrauerInv(1, 4) - BrauerInv(1, 2) == BrauerInv(3, 4));
    CHECK(3 * BrauerInv(1, 4) == BrauerInv(3, 4));
    CHECK(-5 * BrauerInv(1, 4) == BrauerInv(3, 4));
    CHECK(BrauerInv::parse("-1/6") == BrauerInv(5, 6));
    CHECK_THROWS_AS(BrauerInv(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(BrauerInv::parse("1/x"), std::invalid_argument);
}

TEST_CASE("local_index")
{
    CHECK(local_index(BrauerInv(3, 8)) == 8);
    CHECK(local_index(BrauerInv()) == 1);
    CHECK(local_index(BrauerInv(1, 4)) == 4);
}

TEST_CASE("restrict_inv")
{
    CHECK(restrict_inv(BrauerInv(1, 4), 2) == BrauerInv::half());
    CHECK(restrict_inv(BrauerInv(5, 9), 1) == BrauerInv(5, 9));
    CHECK(restrict_inv(BrauerInv(1, 8), 4) == BrauerInv::half());
    CHECK_THROWS_AS(restrict_inv(BrauerInv(1, 8), 0), std::invalid_argument);
}

TEST_CASE("property: restriction composes")
{
    for (long den : {1, 2, 3, 4, 6, 8, 9, 12, 16, 25})
        for (long num = 0; num < den; ++num)
            for (long d1 : {1, 2, 3, 4, 5})
                for (long d2 : {1, 2, 3, 8}) {
                    const BrauerInv inv(num, den);
                    CHECK(restrict_inv(inv, d1 * d2) == restrict_inv(restrict_inv(inv, d1), d2));
                }
}

TEST_CASE("characters")
{
    CHECK(Character::quadratic(Rational(-1), 2).order() == 2);
    CHECK(Character::quadratic(Rational(-1), 2).to_string() == "(-1)_2");
    CHECK(Character::unramified(5, BrauerInv(1, 4)).order() == 4);
    CHECK(Character::trivial(3).order() == 1);
    CHECK_THROWS_AS(Character::quadratic(Rational(9), 2), std::invalid_argument);
    CHECK_THROWS_AS(Character::quadratic(Rational(4), 3), std::invalid_argument);
}

TEST_CASE("inv_pairing")
{
    const auto minus_one = Character::quadratic(Rational(-1), 2);
    CHECK(inv_pairing(minus_one, Rational(-1)) == BrauerInv::half());
    CHECK(inv_pairing(minus_one, Rational(5)) == BrauerInv());
    CHECK(inv_pairing(Character::unramified(7, BrauerInv(1, 4)), Rational(7)) == BrauerInv(1, 4));
    CHECK(inv_pairing(Character::unramified(7, BrauerInv(1, 4)), Rational(1, 49)) == BrauerInv(1, 2));
    for (long p : {2, 3, 5}) {
        CHECK(inv_pairing(Character::trivial(p), Rational(1)).is_zero());
        CHECK(inv_pairing(Character::unramified(p, BrauerInv(1, 3)), Rational(1)).is_zero());
    }
    CHECK_THROWS_AS(inv_pairing(minus_one, Rational(0)), std::domain_error);
}

TEST_CASE("property: inv_pairing is additive")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 50);
    for (long p : {2, 3, 5, 7}) {
        std::vector<Character> thetas;
        for (const auto& c : square_class_reps(p))
            if (!c.is_trivial())
                thetas.push_back(Character::quadratic(c));
        thetas.push_back(Character::unramified(p, BrauerInv(1, 4)));
        thetas.push_back(Character::unramified(p, BrauerInv(2, 9)));
        for (const auto& theta : thetas)
            for (int k = 0; k < 20; ++k) {
                Rational b(num(rng), den(rng)), b2(num(rng), den(rng));
                b.canonicalize();
                b2.canonicalize();
                if (b == 0 || b2 == 0)
                    continue;
                CHECK(inv_pairing(theta, Rational(b * b2)) == inv_pairing(theta, b) + inv_pairing(theta, b2));
            }
    }
}

TEST_CASE("quaternion_cor")
{
    const QuadraticField f2(Rational(2), 2), f10(Rational(10), 2);
    CHECK(quaternion_cor(Rational(-1), QuadraticElement(f2, 2, 1)).is_plus());
    CHECK(quaternion_cor(Rational(-1), QuadraticElement(f10, 10, 1)).is_plus());
    const QuadraticElement twisted = QuadraticElement(f2, 0, 1) * QuadraticElement(f2, 2, 1);
    CHECK(quad_norm(twisted) == -4);
    CHECK_FALSE(quaternion_cor(Rational(-1), twisted).is_plus());
    CHECK(quaternion_cor(Rational(2), RootOfUnityElt(8, 1, 3)) == hilbert(Rational(2), Rational(-1), 3));
    CHECK_THROWS_AS(quaternion_cor(Rational(-1), QuadraticElement(f2, 0, 0)), std::domain_error);
}

TEST_CASE("property: quaternion_cor invariance")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> small(-12, 12);
    for (long a : {2, 5, 10, -1, -2}) {
        const QuadraticField f(Rational(a), 2);
        for (int k = 0; k < 40; ++k) {
            const QuadraticElement v(f, small(rng), small(rng));
            const QuadraticElement x(f, small(rng), small(rng));
            if (v.is_zero() || x.is_zero())
                continue;
            for (const auto& c : square_class_reps(2)) {
                const Rational s = c.value();
                CHECK(quaternion_cor(s, v * x * x) == quaternion_cor(s, v));
                // [Lbar:Q_2] = 2 is even
                for (long w : {3, -1, 2, 6, -10})
                    CHECK(quaternion_cor(s, Rational(w) * v) == quaternion_cor(s, v));
            }
        }
    }
}

TEST_CASE("witt_index")
{
    CHECK(witt_index({BrauerInv(1, 4), Character::quadratic(Rational(-1), 2)}) == 4);
    CHECK(witt_index({BrauerInv(1, 3), Character::trivial(5)}) == 3);
    CHECK(witt_index({BrauerInv(1, 2), Character::unramified(7, BrauerInv(1, 2))}) == 2);
    CHECK(witt_index({BrauerInv(), Character::quadratic(Rational(3), 3)}) == 2);
    const WittClass d{BrauerInv(1, 8), Character::unramified(3, BrauerInv(1, 4))};
    CHECK(d.period() == 8);
}

TEST_CASE("property: witt_index formulas agree on the full grid")
{
    for (long p : {2, 3, 5}) {
        for (long den : {1, 2, 3, 4, 8, 9}) {
            for (long num = 0; num < den; ++num) {
                if (std::gcd(num, den) != 1)
                    continue;
                const BrauerInv alpha(num, den);
                std::vector<Character> thetas = {Character::trivial(p), Character::unramified(p, BrauerInv(1, 2)),
                                                 Character::unramified(p, BrauerInv(1, 4)),
                                                 Character::unramified(p, BrauerInv(3, 4))};
                for (const auto& c : square_class_reps(p))
                    if (!c.is_trivial())
                        thetas.push_back(Character::quadratic(c));
                for (const auto& theta : thetas) {
                    const std::int64_t d = theta.order();
                    const std::int64_t lcm = std::lcm(d, den);
                    const std::int64_t by_restriction = d * (den / std::gcd(den, d));
                    CHECK(lcm == by_restriction);
                    CHECK(witt_index({alpha, theta}) == lcm);
                }
            }
        }
    }
}

TEST_CASE("char_extendable")
{
    CHECK(char_extendable(Character::quadratic(Rational(5), 2)));
    CHECK_FALSE(char_extendable(Character::quadratic(Rational(-1), 2)));
    CHECK_FALSE(char_extendable(Character::quadratic(Rational(3), 3)));
    CHECK(char_extendable(Character::quadratic(Rational(2), 3)));
    CHECK(char_extendable(Character::unramified(3, BrauerInv(1, 4))));
    // p = 1 mod 4: -1 is a square, but the generator of mu(Q_5) is not a norm from Q_5(sqrt 5)
    CHECK_FALSE(char_extendable(Character::quadratic(Rational(5), 5)));
    CHECK(char_extendable(Character::quadratic(Rational(2), 5)));
}

TEST_CASE("property: char_extendable matches the Albert criterion over Q_2")
{
    int extendable = 0;
    for (const auto& c : square_class_reps(2)) {
        if (c.is_trivial())
            continue;
        const bool ext = char_extendable(Character::quadratic(c));
        CHECK(ext == albert_extendable_deg4(c.value(), 2));
        extendable += ext ? 1 : 0;
    }
    CHECK(extendable == 3);
}

TEST_CASE("restrict_witt")
{
    const WittClass delta{BrauerInv(1, 4), Character::quadratic(Rational(-1), 2)};
    const QuadraticField f2(Rational(2), 2);
    CHECK(restrict_witt(delta, {QuadraticElement(f2, 2, 1), 2}) == BrauerInv::half());
    const QuadraticElement bad = QuadraticElement(f2, 0, 1) * QuadraticElement(f2, 2, 1);
    CHECK(restrict_witt(delta, {bad, 2}).is_zero());
    CHECK_THROWS_AS(restrict_witt(delta, {QuadraticElement(f2, 2, 1), 1}), std::invalid_argument);

    const WittClass over3{BrauerInv(1, 4), Character::quadratic(Rational(3), 3)};
    CHECK(restrict_witt(over3, {RootOfUnityElt(8, 1, 3), 2}).is_zero());
    CHECK(restrict_witt({BrauerInv(3, 4), Character::quadratic(Rational(3), 3)}, {RootOfUnityElt(8, 1, 3), 2})
              .is_zero());

    // unramified theta pairs with the valuation of the norm
    const WittClass unr{BrauerInv(1, 2), Character::unramified(5, BrauerInv(1, 2))};
    CHECK(restrict_witt(unr, {RootOfUnityElt(1, 0, 5), 2}) == BrauerInv::half());
    CHECK_THROWS_AS(restrict_witt(delta, {RootOfUnityElt(8, 1, 3), 2}), std::invalid_argument);
}
