#include "lcf/symbols.hpp"

#include "lcf/extensions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace lcf {

SymbolValue SymbolValue::from_int(int s)
{
    if (s != 1 && s != -1)
        throw std::invalid_argument("symbol value must be +1 or -1");
    return SymbolValue(s);
}

namespace {

int legendre(const Integer& u, long p)
{
    Integer P(p);
    return mpz_legendre(u.get_mpz_t(), P.get_mpz_t());
}

// (u - 1)/2 and (u^2 - 1)/8 mod 2 for a 2-adic unit, read off u mod 8
int epsilon(const Integer& u) { return ((mpz_fdiv_ui(u.get_mpz_t(), 8) - 1) / 2) % 2; }

int omega(const Integer& u)
{
    unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
    return ((r * r - 1) / 8) % 2;
}

void require_nonzero(const Rational& q)
{
    if (q == 0)
        throw std::domain_error("Hilbert symbol of zero");
}

}  // namespace

SymbolValue hilbert(const PadicNumber& a, const PadicNumber& b)
{
    if (a.prime() != b.prime())
        throw std::invalid_argument("prime mismatch");
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("Hilbert symbol of zero");
    const long p = a.prime();
    const long alpha = a.valuation();
    const long beta = b.valuation();
    const Integer& u = a.unit();
    const Integer& w = b.unit();
    if (p == 2) {
        long e = epsilon(u) * epsilon(w) + alpha * omega(w) + beta * omega(u);
        return SymbolValue::from_int(e % 2 == 0 ? 1 : -1);
    }
    int s = 1;
    if ((alpha * beta) % 2 != 0 && ((p - 1) / 2) % 2 != 0)
        s = -s;
    if (beta % 2 != 0)
        s *= legendre(u, p);
    if (alpha % 2 != 0)
        s *= legendre(w, p);
    return SymbolValue::from_int(s);
}

SymbolValue hilbert(const Rational& a, const Rational& b, long prime)
{
    require_nonzero(a);
    require_nonzero(b);
    return hilbert(PadicNumber::from_rational(a, prime), PadicNumber::from_rational(b, prime));
}

namespace {

struct OracleSearch {
    long p;
    int depth;
    std::array<__int128, 24> powers{};  // p^k, k <= depth
    __int128 a;
    __int128 b;

    static __int128 mod(__int128 x, __int128 m)
    {
        __int128 r = x % m;
        return r < 0 ? r + m : r;
    }

    bool solves(__int128 x, __int128 y, __int128 z, int level) const
    {
        const __int128 m = powers[level];
        __int128 lhs = mod(z * z, m);
        __int128 rhs = mod(mod(a, m) * mod(x * x, m) + mod(b, m) * mod(y * y, m), m);
        return lhs == rhs;
    }

    // extends a solution modulo p^level digit by digit
    bool lift(__int128 x, __int128 y, __int128 z, int level) const
    {
        if (level == depth)
            return true;
        const __int128 step = powers[level];
        for (long dx = 0; dx < p; ++dx)
            for (long dy = 0; dy < p; ++dy)
                for (long dz = 0; dz < p; ++dz) {
                    __int128 X = x + dx * step, Y = y + dy * step, Z = z + dz * step;
                    if (solves(X, Y, Z, level + 1) && lift(X, Y, Z, level + 1))
                        return true;
                }
        return false;
    }

    bool run() const
    {
        for (long x = 0; x < p; ++x)
            for (long y = 0; y < p; ++y)
                for (long z = 0; z < p; ++z) {
                    if (x == 0 && y == 0 && z == 0)
                        continue;
                    if (solves(x, y, z, 1) && lift(x, y, z, 1))
                        return true;
                }
        return false;
    }
};

}  // namespace

SymbolValue hilbert_oracle(const Rational& a, const Rational& b, long prime)
{
    require_nonzero(a);
    require_nonzero(b);
    require_prime(prime);
    // a * den^2 has the same square class and is an integer
    const Integer ai = a.get_num() * a.get_den();
    const Integer bi = b.get_num() * b.get_den();
    const long va = valuation(ai, prime);
    const long vb = valuation(bi, prime);
    const long depth = 2 * std::max(std::labs(va), std::labs(vb)) + (prime == 2 ? 3 : 1) + 2;

    OracleSearch search{prime, static_cast<int>(depth), {}, 0, 0};
    if (depth >= static_cast<long>(search.powers.size()))
        throw std::invalid_argument("hilbert_oracle: valuations too large for exhaustive search");
    Integer bound = ipow(prime, static_cast<unsigned long>(depth));
    if (mpz_sizeinbase(bound.get_mpz_t(), 2) > 40 || !ai.fits_slong_p() || !bi.fits_slong_p())
        throw std::invalid_argument("hilbert_oracle: inputs too large for exhaustive search");
    search.powers[0] = 1;
    for (int k = 1; k <= depth; ++k)
        search.powers[k] = search.powers[k - 1] * prime;
    search.a = ai.get_si();
    search.b = bi.get_si();
    return search.run() ? SymbolValue::plus() : SymbolValue::minus();
}

namespace {

void require_nonsquare(const Rational& a, long prime)
{
    if (a == 0)
        throw std::domain_error("radicand is zero");
    if (is_square(a, prime))
        throw std::invalid_argument(to_string(a) + " is a square in Q_" + std::to_string(prime) +
                                    "; the extension is split");
}

}  // namespace

bool is_norm_quadratic(const Rational& b, const Rational& a, long prime)
{
    require_nonsquare(a, prime);
    return hilbert(a, b, prime).is_plus();
}

bool albert_extendable_deg4(const Rational& a, long prime)
{
    require_nonsquare(a, prime);
    return hilbert(a, Rational(-1), prime).is_plus();
}

bool cyclic_quartic_test(const Rational& a, const QuadraticElement& v)
{
    const long p = v.field().prime();
    require_nonsquare(a, p);
    if (v.field().radicand() != a)
        throw std::invalid_argument("element does not live in Q_p(sqrt " + to_string(a) + ")");
    if (v.is_zero())
        throw std::domain_error("cyclic_quartic_test: v is zero");
    if (is_square(v))
        return false;
    return is_square(Rational(a * quad_norm(v)), p);
}

}  // namespace lcf
