#include "lcf/padic.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lcf {

namespace {

void require_precision(int precision)
{
    if (precision < kMinPrecision)
        throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecision));
}

void require_same_prime(const PadicNumber& x, const PadicNumber& y)
{
    if (x.prime() != y.prime())
        throw std::invalid_argument("prime mismatch: " + std::to_string(x.prime()) + " vs " +
                                    std::to_string(y.prime()));
}

Integer mod_positive(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& a, const Integer& m)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible");
    return r;
}

Integer powmod(const Integer& base, const Integer& e, const Integer& m)
{
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// strips every factor p from n, returning the count
long strip(Integer& n, long p)
{
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

bool is_residue_mod_p(const Integer& unit, long p)
{
    Integer P(p);
    Integer r = mod_positive(unit, P);
    return powmod(r, Integer((p - 1) / 2), P) == 1;
}

}  // namespace

void require_prime(long p)
{
    if (p < 2)
        throw std::invalid_argument("prime must be >= 2, got " + std::to_string(p));
    Integer n(p);
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
        throw std::invalid_argument(std::to_string(p) + " is not prime");
}

long valuation(const Integer& n, long p)
{
    if (n == 0)
        throw std::domain_error("valuation of zero");
    Integer m = n;
    return strip(m, p);
}

long least_nonresidue(long p)
{
    if (p == 2)
        throw std::invalid_argument("least_nonresidue needs an odd prime");
    for (long n = 2; n < p; ++n)
        if (!is_residue_mod_p(Integer(n), p))
            return n;
    throw std::logic_error("no quadratic non-residue found");
}

long primitive_root(long p)
{
    require_prime(p);
    if (p == 2)
        return 1;
    std::vector<long> factors;
    long m = p - 1;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            factors.push_back(q);
            while (m % q == 0)
                m /= q;
        }
    }
    if (m > 1)
        factors.push_back(m);
    const Integer P(p);
    for (long g = 2; g < p; ++g) {
        bool generator = std::all_of(factors.begin(), factors.end(), [&](long q) {
            return powmod(Integer(g), Integer((p - 1) / q), P) != 1;
        });
        if (generator)
            return g;
    }
    throw std::logic_error("no primitive root found");
}

Integer ipow(long p, unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
    return r;
}

Rational parse_rational(std::string_view text)
{
    auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad();
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i >= s.size())
            throw bad();
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw bad();
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Integer(digits);
    };
    Integer num = parse_int(text.substr(0, slash), true);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parse_int(text.substr(slash + 1), false);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

// --- PadicNumber -----------------------------------------------------------

PadicNumber::PadicNumber(long prime, std::optional<long> valuation, Integer unit, int precision)
    : prime_(prime), valuation_(valuation), unit_(std::move(unit)), precision_(precision)
{
}

PadicNumber PadicNumber::zero(long prime, int precision)
{
    require_prime(prime);
    require_precision(precision);
    return PadicNumber(prime, std::nullopt, Integer(0), precision);
}

PadicNumber PadicNumber::from_unit(long prime, long valuation, const Integer& unit, int precision)
{
    require_prime(prime);
    require_precision(precision);
    if (mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(prime)))
        throw std::invalid_argument("unit part divisible by the prime");
    return PadicNumber(prime, valuation, mod_positive(unit, ipow(prime, precision)), precision);
}

PadicNumber PadicNumber::from_rational(const Integer& numerator, const Integer& denominator, long prime,
                                       int precision)
{
    if (denominator == 0)
        throw std::invalid_argument("zero denominator");
    require_prime(prime);
    require_precision(precision);
    if (numerator == 0)
        return zero(prime, precision);
    Integer num = numerator;
    Integer den = denominator;
    long v = strip(num, prime) - strip(den, prime);
    const Integer mod = ipow(prime, precision);
    Integer unit = mod_positive(num * mod_inverse(den, mod), mod);
    return PadicNumber(prime, v, unit, precision);
}

PadicNumber PadicNumber::from_rational(const Rational& q, long prime, int precision)
{
    return from_rational(q.get_num(), q.get_den(), prime, precision);
}

long PadicNumber::valuation() const
{
    if (!valuation_)
        throw std::domain_error("valuation of the zero element");
    return *valuation_;
}

PadicNumber PadicNumber::with_precision(int precision) const
{
    require_precision(precision);
    if (is_zero())
        return zero(prime_, precision);
    if (precision > precision_)
        throw std::invalid_argument("cannot raise the precision of an inexact value");
    return PadicNumber(prime_, valuation_, mod_positive(unit_, ipow(prime_, precision)), precision);
}

std::string PadicNumber::to_string() const
{
    if (is_zero())
        return "0";
    return std::to_string(prime_) + "^" + std::to_string(*valuation_) + " * " + unit_.get_str() + " mod " +
           std::to_string(prime_) + "^" + std::to_string(precision_);
}

bool operator==(const PadicNumber& x, const PadicNumber& y)
{
    if (x.prime_ != y.prime_)
        return false;
    if (x.is_zero() || y.is_zero())
        return x.is_zero() && y.is_zero();
    if (*x.valuation_ != *y.valuation_)
        return false;
    const Integer mod = ipow(x.prime_, std::min(x.precision_, y.precision_));
    return mod_positive(x.unit_ - y.unit_, mod) == 0;
}

// --- arithmetic ------------------------------------------------------------

namespace {

PadicNumber negate(const PadicNumber& x)
{
    if (x.is_zero())
        return x;
    return PadicNumber::from_unit(x.prime(), x.valuation(), x.modulus() - x.unit(), x.precision());
}

PadicNumber add(const PadicNumber& x0, const PadicNumber& y0)
{
    if (x0.is_zero())
        return y0;
    if (y0.is_zero())
        return x0;
    const PadicNumber* x = &x0;
    const PadicNumber* y = &y0;
    if (x->valuation() > y->valuation())
        std::swap(x, y);
    const long p = x->prime();
    const long a = x->valuation();
    const long b = y->valuation();
    // absolute precision of the sum, and the digits available above p^a
    const long absolute = std::min(a + x->precision(), b + y->precision());
    const long width = absolute - a;
    const Integer mod = ipow(p, static_cast<unsigned long>(width));
    Integer s = x->unit();
    if (b - a < width)
        s += ipow(p, static_cast<unsigned long>(b - a)) * y->unit();
    s = mod_positive(s, mod);
    const int common = std::min(x->precision(), y->precision());
    if (s == 0)
        return PadicNumber::zero(p, common);
    long k = strip(s, p);
    long relative = width - k;
    if (relative < kMinPrecision)
        throw std::domain_error("cancellation left fewer than " + std::to_string(kMinPrecision) +
                                " significant digits");
    return PadicNumber::from_unit(p, a + k, s, static_cast<int>(std::min<long>(relative, common)));
}

}  // namespace

PadicNumber arith(const PadicNumber& x, const PadicNumber& y, ArithOp op)
{
    require_same_prime(x, y);
    const long p = x.prime();
    const int common = std::min(x.precision(), y.precision());
    switch (op) {
    case ArithOp::add:
        return add(x, y);
    case ArithOp::sub:
        return add(x, negate(y));
    case ArithOp::mul: {
        if (x.is_zero() || y.is_zero())
            return PadicNumber::zero(p, common);
        const Integer mod = ipow(p, common);
        return PadicNumber::from_unit(p, x.valuation() + y.valuation(), mod_positive(x.unit() * y.unit(), mod),
                                      common);
    }
    case ArithOp::div: {
        if (y.is_zero())
            throw std::domain_error("division by zero");
        if (x.is_zero())
            return PadicNumber::zero(p, common);
        const Integer mod = ipow(p, common);
        return PadicNumber::from_unit(p, x.valuation() - y.valuation(),
                                      mod_positive(x.unit() * mod_inverse(y.unit(), mod), mod), common);
    }
    }
    throw std::logic_error("unknown operator");
}

PadicNumber pow(const PadicNumber& x, unsigned long e)
{
    if (x.is_zero())
        return e == 0 ? PadicNumber::from_rational(1, 1, x.prime(), x.precision()) : x;
    return PadicNumber::from_unit(x.prime(), x.valuation() * static_cast<long>(e),
                                  powmod(x.unit(), Integer(e), x.modulus()), x.precision());
}

// --- squares ---------------------------------------------------------------

bool is_square(const PadicNumber& x)
{
    if (x.is_zero())
        throw std::domain_error("is_square of zero");
    if (x.valuation() % 2 != 0)
        return false;
    if (x.prime() == 2)
        return mpz_fdiv_ui(x.unit().get_mpz_t(), 8) == 1;
    return is_residue_mod_p(x.unit(), x.prime());
}

bool is_square(const Rational& q, long prime)
{
    return is_square(PadicNumber::from_rational(q, prime));
}

PadicNumber sqrt(const PadicNumber& x)
{
    if (!is_square(x))
        throw std::domain_error("not a square in Q_" + std::to_string(x.prime()) + ": " + x.to_string());
    const long p = x.prime();
    const int n = x.precision();
    const Integer mod = x.modulus();
    const Integer& u = x.unit();
    Integer root;
    if (p == 2) {
        // r^2 = u mod 2^k lifts to r or r + 2^(k-1) mod 2^(k+1), k >= 3
        root = 1;
        for (int k = 3; k < n; ++k) {
            Integer m = ipow(2, k + 1);
            if (mod_positive(root * root - u, m) != 0)
                root += ipow(2, k - 1);
        }
        Integer half = ipow(2, n - 1);
        Integer best = mod_positive(root, mod);
        for (const Integer& c : {mod_positive(-root, mod), mod_positive(root + half, mod),
                                 mod_positive(-root + half, mod)})
            best = std::min(best, c);
        root = best;
    } else {
        const Integer P(p);
        const Integer r0 = mod_positive(u, P);
        Integer r = 1;
        while (mod_positive(r * r - r0, P) != 0)
            ++r;
        // Newton: r <- (r + u/r) / 2, each step doubles the correct digits
        const Integer inv2 = mod_inverse(Integer(2), mod);
        for (int correct = 1; correct < n; correct *= 2)
            r = mod_positive((r + u * mod_inverse(r, mod)) * inv2, mod);
        root = std::min(r, Integer(mod - r));
    }
    return PadicNumber::from_unit(p, x.valuation() / 2, root, n);
}

SquareClass square_class(const PadicNumber& x)
{
    if (x.is_zero())
        throw std::domain_error("square class of zero");
    const long p = x.prime();
    const bool odd_valuation = x.valuation() % 2 != 0;
    long rep;
    if (p == 2) {
        switch (mpz_fdiv_ui(x.unit().get_mpz_t(), 8)) {
        case 1: rep = 1; break;
        case 3: rep = -5; break;
        case 5: rep = 5; break;
        default: rep = -1; break;
        }
    } else {
        rep = is_residue_mod_p(x.unit(), p) ? 1 : least_nonresidue(p);
    }
    return {p, odd_valuation ? rep * p : rep};
}

SquareClass square_class(const Rational& q, long prime)
{
    if (q == 0)
        throw std::domain_error("square class of zero");
    return square_class(PadicNumber::from_rational(q, prime));
}

std::vector<SquareClass> square_class_reps(long prime)
{
    require_prime(prime);
    if (prime == 2)
        return {{2, 1}, {2, -1}, {2, 2}, {2, -2}, {2, 5}, {2, -5}, {2, 10}, {2, -10}};
    const long u = least_nonresidue(prime);
    return {{prime, 1}, {prime, u}, {prime, prime}, {prime, u * prime}};
}

PadicNumber teichmuller(const Integer& residue, long prime, int precision)
{
    require_prime(prime);
    require_precision(precision);
    if (prime == 2)
        throw std::invalid_argument("teichmuller lifts are for odd primes; mu(Q_2) = {1, -1}");
    if (mpz_divisible_ui_p(residue.get_mpz_t(), static_cast<unsigned long>(prime)))
        throw std::invalid_argument("residue divisible by the prime");
    const Integer mod = ipow(prime, precision);
    const Integer P(prime);
    Integer w = mod_positive(residue, mod);
    // x -> x^p gains one digit of the fixed point per step
    for (int i = 0; i < precision; ++i)
        w = powmod(w, P, mod);
    return PadicNumber::from_unit(prime, 0, w, precision);
}

}  // namespace lcf
