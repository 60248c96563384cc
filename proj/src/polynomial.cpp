#include "lcf/polynomial.hpp"

#include <stdexcept>

namespace lcf {

namespace {

void require_eta_index(int j)
{
    if (j < 1 || j > kMaxEtaIndex)
        throw std::invalid_argument("eta index must be in [1, " + std::to_string(kMaxEtaIndex) + "], got " +
                                    std::to_string(j));
}

}  // namespace

/*
 * f_j is the j-fold iterate of x^2 - 2, i.e. the Dickson polynomial
 * D_N(x, 1) with N = 2^j:
 *
 *     f_j(x) = sum_{k <= N/2} (-1)^k N/(N-k) binom(N-k, k) x^(N-2k)
 *
 * Successive magnitudes satisfy
 *     c_{k+1} = c_k (N-2k)(N-2k-1) / ((k+1)(N-k-1)),
 * each division exact, so the whole table costs O(N) bignum operations
 * instead of the O(N^2) of repeated composition.
 */
IntPoly eta_minpoly(int j)
{
    require_eta_index(j);
    const unsigned long n = 1UL << j;
    IntPoly f(n + 1, 0);
    Integer c = 1;
    for (unsigned long k = 0; 2 * k <= n; ++k) {
        f[n - 2 * k] = (k % 2 == 0) ? c : Integer(-c);
        if (2 * k + 2 > n)
            break;
        c *= (n - 2 * k) * (n - 2 * k - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), (k + 1) * (n - k - 1));
    }
    return f;
}

Rational eta_norm(int j)
{
    const IntPoly f = eta_minpoly(j);
    // N(eta) = (-1)^deg f(0), and deg = 2^j is even
    return Rational(f.front());
}

IntPoly substitute_quadratic(const IntPoly& f, long c)
{
    if (f.empty())
        return {};
    IntPoly h = f;
    const long n = static_cast<long>(h.size()) - 1;
    // Taylor shift h(y) = f(y + c)
    for (long i = 0; i < n; ++i)
        for (long k = n - 1; k >= i; --k) {
            if (c >= 0)
                mpz_addmul_ui(h[k].get_mpz_t(), h[k + 1].get_mpz_t(), static_cast<unsigned long>(c));
            else
                mpz_submul_ui(h[k].get_mpz_t(), h[k + 1].get_mpz_t(), static_cast<unsigned long>(-c));
        }
    IntPoly g(2 * n + 1, 0);
    for (long k = 0; k <= n; ++k)
        g[2 * k] = std::move(h[k]);
    return g;
}

long degree(const IntPoly& f)
{
    for (long k = static_cast<long>(f.size()) - 1; k >= 0; --k)
        if (f[k] != 0)
            return k;
    return -1;
}

bool is_eisenstein(const IntPoly& f, long p)
{
    const long d = degree(f);
    if (d < 1 || f[d] != 1)
        return false;
    const auto up = static_cast<unsigned long>(p);
    for (long k = 0; k < d; ++k)
        if (!mpz_divisible_ui_p(f[k].get_mpz_t(), up))
            return false;
    return !mpz_divisible_ui_p(f[0].get_mpz_t(), up * up);
}

std::string to_string(const IntPoly& f)
{
    std::string out = "[";
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (k)
            out += ", ";
        out += f[k].get_str();
    }
    return out + "]";
}

}  // namespace lcf
