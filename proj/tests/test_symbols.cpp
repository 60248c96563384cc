#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcf/extensions.hpp"
#include "lcf/symbols.hpp"

#include <random>

using namespace lcf;

namespace {

int H(long a, long b, long p)
{
    return hilbert(Rational(a), Rational(b), p).sign();
}

std::vector<Rational> grid()
{
    std::vector<Rational> out;
    for (long n = -24; n <= 24; ++n)
        for (long d : {1, 3, 4, 5})
            if (n != 0) {
                Rational q(n, d);
                q.canonicalize();
                out.push_back(q);
            }
    return out;
}

}  // namespace

TEST_CASE("hilbert examples")
{
    CHECK(H(-1, -1, 2) == -1);
    CHECK(H(-1, 5, 2) == 1);
    CHECK(H(2, 2, 2) == 1);
    CHECK(H(-1, 2, 2) == 1);
    CHECK(H(-1, 10, 2) == 1);
    CHECK(H(-1, -2, 2) == -1);
    CHECK(H(-1, -5, 2) == -1);
    CHECK(H(-1, -10, 2) == -1);
    CHECK(H(3, 5, 5) == -1);
    CHECK(H(2, 3, 3) == -1);
    CHECK(hilbert(Rational(1, 2), Rational(-3), 3).sign() == -1);
    CHECK_THROWS_AS(hilbert(Rational(0), Rational(1), 3), std::domain_error);
    CHECK_THROWS_AS(hilbert(Rational(1), Rational(1), 4), std::invalid_argument);
}

TEST_CASE("hilbert_oracle examples")
{
    CHECK(hilbert_oracle(Rational(-1), Rational(-1), 2).sign() == -1);
    CHECK(hilbert_oracle(Rational(3), Rational(5), 5).sign() == -1);
    for (long p : {2, 3, 5, 7})
        for (long b : {-10, -3, 2, 7, 12})
            CHECK(hilbert_oracle(Rational(1), Rational(b), p).is_plus());
}

TEST_CASE("formula agrees with the oracle on square-class pairs")
{
    for (long p : {2, 3, 5, 7, 13}) {
        const auto reps = square_class_reps(p);
        for (const auto& a : reps)
            for (const auto& b : reps) {
                CAPTURE(p);
                CAPTURE(a.representative);
                CAPTURE(b.representative);
                CHECK(hilbert(a.value(), b.value(), p) == hilbert_oracle(a.value(), b.value(), p));
            }
    }
}

TEST_CASE("formula agrees with the oracle off the representatives")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 12);
    for (long p : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 60; ++trial) {
            Rational a(num(rng), den(rng)), b(num(rng), den(rng));
            a.canonicalize();
            b.canonicalize();
            if (a == 0 || b == 0)
                continue;
            CAPTURE(p);
            CAPTURE(to_string(a));
            CAPTURE(to_string(b));
            CHECK(hilbert(a, b, p) == hilbert_oracle(a, b, p));
        }
    }
}

TEST_CASE("property: bilinearity and symmetry")
{
    for (long p : {2, 3, 5, 7, 13}) {
        const auto reps = square_class_reps(p);
        for (const auto& a : reps)
            for (const auto& a2 : reps)
                for (const auto& b : reps) {
                    const Rational aa = a.value() * a2.value();
                    CHECK(hilbert(aa, b.value(), p) == hilbert(a.value(), b.value(), p) * hilbert(a2.value(), b.value(), p));
                    CHECK(hilbert(a.value(), b.value(), p) == hilbert(b.value(), a.value(), p));
                }
    }
}

TEST_CASE("property: (a, -a) = (a, 1 - a) = +1")
{
    for (long p : {2, 3, 5, 7, 13})
        for (const auto& a : grid()) {
            CHECK(hilbert(a, Rational(-a), p).is_plus());
            if (a != 1)
                CHECK(hilbert(a, Rational(1 - a), p).is_plus());
        }
}

TEST_CASE("property: nondegeneracy")
{
    for (long p : {2, 3, 5, 7, 13}) {
        const auto reps = square_class_reps(p);
        for (const auto& a : reps) {
            if (a.is_trivial())
                continue;
            bool found = false;
            for (const auto& b : reps)
                found = found || !hilbert(a.value(), b.value(), p).is_plus();
            CHECK(found);
        }
    }
}

TEST_CASE("is_norm_quadratic")
{
    CHECK_FALSE(is_norm_quadratic(Rational(-1), Rational(-1), 2));
    CHECK(is_norm_quadratic(Rational(2), Rational(-1), 2));
    CHECK(is_norm_quadratic(Rational(-1), Rational(2), 2));
    CHECK_THROWS_AS(is_norm_quadratic(Rational(3), Rational(4), 5), std::invalid_argument);
}

TEST_CASE("property: norms form a group")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> small(-9, 9);
    for (long p : {2, 3, 5, 7}) {
        for (const auto& a : square_class_reps(p)) {
            if (a.is_trivial())
                continue;
            for (const auto& b : square_class_reps(p))
                for (int k = 0; k < 6; ++k) {
                    long x = small(rng), y = small(rng);
                    Rational n = Rational(x * x) - a.value() * y * y;
                    if (n == 0)
                        continue;
                    CHECK(is_norm_quadratic(Rational(b.value() * n), a.value(), p) ==
                          is_norm_quadratic(b.value(), a.value(), p));
                }
        }
    }
}

TEST_CASE("albert_extendable_deg4")
{
    CHECK_FALSE(albert_extendable_deg4(Rational(-1), 2));
    CHECK(albert_extendable_deg4(Rational(2), 2));
    CHECK_FALSE(albert_extendable_deg4(Rational(-2), 2));
    CHECK(albert_extendable_deg4(Rational(5), 2));
    CHECK(albert_extendable_deg4(Rational(10), 2));
    CHECK_THROWS_AS(albert_extendable_deg4(Rational(9), 2), std::invalid_argument);
}

TEST_CASE("cyclic_quartic_test")
{
    const QuadraticField f2(Rational(2), 2), f5(Rational(5), 2);
    CHECK(cyclic_quartic_test(Rational(2), QuadraticElement(f2, 2, 1)));
    CHECK(cyclic_quartic_test(Rational(5), QuadraticElement(f5, 5, 2)));
    CHECK_FALSE(cyclic_quartic_test(Rational(2), QuadraticElement(f2, 1, 1)));
    // a square in Q_2(sqrt 2) gives no quartic field at all
    CHECK_FALSE(cyclic_quartic_test(Rational(2), QuadraticElement(f2, 3, 2) * QuadraticElement(f2, 3, 2)));
    CHECK_THROWS_AS(cyclic_quartic_test(Rational(5), QuadraticElement(f2, 2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_quartic_test(Rational(2), QuadraticElement(f2, 0, 0)), std::domain_error);
}
