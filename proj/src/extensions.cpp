#include "lcf/extensions.hpp"

#include "lcf/symbols.hpp"

#include <array>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace lcf {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (q < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

long rational_valuation(const Rational& q, long p)
{
    return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

void require_same_field(const QuadraticElement& u, const QuadraticElement& v)
{
    if (!(u.field() == v.field()))
        throw std::invalid_argument("elements of different quadratic fields");
}

}  // namespace

// --- Q_p(sqrt a) -----------------------------------------------------------

QuadraticField::QuadraticField(Rational radicand, long prime) : radicand_(std::move(radicand)), prime_(prime)
{
    require_prime(prime_);
    radicand_.canonicalize();
    if (radicand_ == 0)
        throw std::invalid_argument("quadratic field with radicand 0");
    if (is_square(radicand_, prime_))
        throw std::invalid_argument(to_string(radicand_) + " is a square in Q_" + std::to_string(prime_));
}

QuadraticElement::QuadraticElement(QuadraticField field, Rational x, Rational y)
    : field_(std::move(field)), x_(std::move(x)), y_(std::move(y))
{
    x_.canonicalize();
    y_.canonicalize();
}

std::string QuadraticElement::to_string() const
{
    if (y_ < 0)
        return lcf::to_string(x_) + "-" + lcf::to_string(Rational(-y_)) + "r";
    return lcf::to_string(x_) + "+" + lcf::to_string(y_) + "r";
}

QuadraticElement operator+(const QuadraticElement& u, const QuadraticElement& v)
{
    require_same_field(u, v);
    return {u.field_, u.x_ + v.x_, u.y_ + v.y_};
}

QuadraticElement operator-(const QuadraticElement& u, const QuadraticElement& v)
{
    require_same_field(u, v);
    return {u.field_, u.x_ - v.x_, u.y_ - v.y_};
}

QuadraticElement operator*(const QuadraticElement& u, const QuadraticElement& v)
{
    require_same_field(u, v);
    const Rational& a = u.field_.radicand();
    return {u.field_, u.x_ * v.x_ + a * u.y_ * v.y_, u.x_ * v.y_ + u.y_ * v.x_};
}

QuadraticElement operator/(const QuadraticElement& u, const QuadraticElement& v)
{
    if (v.is_zero())
        throw std::domain_error("division by zero in a quadratic field");
    const Rational n = quad_norm(v);
    QuadraticElement num = u * v.conjugate();
    return {u.field_, num.x_ / n, num.y_ / n};
}

QuadraticElement operator*(const Rational& c, const QuadraticElement& v)
{
    return {v.field_, c * v.x_, c * v.y_};
}

QuadraticElement parse_quadratic(std::string_view text, const QuadraticField& field)
{
    if (text.empty())
        throw std::invalid_argument("empty tower element");
    if (text.back() != 'r')
        return {field, parse_rational(text), 0};
    std::string_view body = text.substr(0, text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '+' && body[i - 1] != '-' && body[i - 1] != '/') {
            split = i;
            break;
        }
    }
    std::string_view xs = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view ys = split == std::string_view::npos ? body : body.substr(body[split] == '+' ? split + 1 : split);
    Rational x = xs.empty() ? Rational(0) : parse_rational(xs);
    Rational y;
    if (ys.empty() || ys == "+")
        y = 1;
    else if (ys == "-")
        y = -1;
    else
        y = parse_rational(ys);
    return {field, x, y};
}

Rational quad_norm(const QuadraticElement& v)
{
    return v.x() * v.x() - v.field().radicand() * v.y() * v.y();
}

bool is_square(const QuadraticElement& v)
{
    if (v.is_zero())
        throw std::domain_error("is_square of zero");
    const long p = v.field().prime();
    const Rational& a = v.field().radicand();
    if (v.is_rational())
        return is_square(v.x(), p) || is_square(Rational(v.x() / a), p);

    // (X + Y sqrt a)^2 = v forces X^2 = (x +- sqrt N)/2 for one sign
    const Rational n = quad_norm(v);
    if (!is_square(n, p))
        return false;
    long margin = std::labs(rational_valuation(a * v.y() * v.y(), p)) + std::labs(rational_valuation(n, p));
    if (v.x() != 0)
        margin += std::labs(rational_valuation(v.x(), p));
    const int precision = kDefaultPrecision + 2 * static_cast<int>(margin) + 4;
    const PadicNumber root = sqrt(PadicNumber::from_rational(n, p, precision));
    const PadicNumber x = PadicNumber::from_rational(v.x(), p, precision);
    const PadicNumber half = PadicNumber::from_rational(1, 2, p, precision);
    for (const PadicNumber& t : {(x + root) * half, (x - root) * half})
        if (!t.is_zero() && is_square(t))
            return true;
    return false;
}

std::optional<QuadraticElement> exact_sqrt(const QuadraticElement& v)
{
    const QuadraticField& f = v.field();
    if (v.is_zero())
        return v;
    if (v.is_rational()) {
        if (auto r = rational_sqrt(v.x()))
            return QuadraticElement(f, *r, 0);
        if (auto r = rational_sqrt(v.x() / f.radicand()))
            return QuadraticElement(f, 0, *r);
        return std::nullopt;
    }
    auto n = rational_sqrt(quad_norm(v));
    if (!n)
        return std::nullopt;
    for (const Rational& t : {Rational((v.x() + *n) / 2), Rational((v.x() - *n) / 2)}) {
        if (t == 0)
            continue;
        if (auto X = rational_sqrt(t))
            return QuadraticElement(f, *X, v.y() / (2 * *X));
    }
    return std::nullopt;
}

// --- Q_p(sqrt a)(sqrt c) ---------------------------------------------------

QuarticField::QuarticField(QuadraticElement radicand) : radicand_(std::move(radicand))
{
    if (radicand_.is_zero())
        throw std::invalid_argument("quartic tower with radicand 0");
    if (is_square(radicand_))
        throw std::invalid_argument(radicand_.to_string() + " is a square in Q_p(sqrt " +
                                    to_string(radicand_.field().radicand()) + ")");
}

QuarticElement::QuarticElement(QuarticField field, QuadraticElement e0, QuadraticElement e1)
    : field_(std::move(field)), e0_(std::move(e0)), e1_(std::move(e1))
{
    if (!(e0_.field() == field_.base()) || !(e1_.field() == field_.base()))
        throw std::invalid_argument("tower coordinates outside the base field");
}

QuarticElement QuarticElement::embed(const QuarticField& field, const QuadraticElement& e0)
{
    return {field, e0, QuadraticElement(field.base(), 0, 0)};
}

std::string QuarticElement::to_string() const
{
    return "(" + e0_.to_string() + ")+(" + e1_.to_string() + ")s";
}

QuarticElement operator*(const QuarticElement& u, const QuarticElement& v)
{
    if (!(u.field_ == v.field_))
        throw std::invalid_argument("elements of different towers");
    const QuadraticElement& c = u.field_.radicand();
    return {u.field_, u.e0_ * v.e0_ + c * u.e1_ * v.e1_, u.e0_ * v.e1_ + u.e1_ * v.e0_};
}

QuarticElement operator+(const QuarticElement& u, const QuarticElement& v)
{
    if (!(u.field_ == v.field_))
        throw std::invalid_argument("elements of different towers");
    return {u.field_, u.e0_ + v.e0_, u.e1_ + v.e1_};
}

QuadraticElement tower_norm_to_mid(const QuarticElement& w)
{
    return w.e0() * w.e0() - w.field().radicand() * w.e1() * w.e1();
}

Rational tower_norm_to_base(const QuarticElement& w)
{
    return quad_norm(tower_norm_to_mid(w));
}

std::variant<QuadraticElement, Rational> tower_norm(const QuarticElement& w, NormTarget target)
{
    if (target == NormTarget::mid)
        return tower_norm_to_mid(w);
    return tower_norm_to_base(w);
}

Rational norm_by_determinant(const QuarticElement& w)
{
    const QuarticField& L = w.field();
    const QuadraticField& F = L.base();
    const QuadraticElement zero(F, 0, 0);
    const std::array<QuarticElement, 4> basis = {
        QuarticElement(L, QuadraticElement(F, 1, 0), zero),
        QuarticElement(L, QuadraticElement(F, 0, 1), zero),
        QuarticElement(L, zero, QuadraticElement(F, 1, 0)),
        QuarticElement(L, zero, QuadraticElement(F, 0, 1)),
    };
    std::array<std::array<Rational, 4>, 4> m;
    for (std::size_t col = 0; col < 4; ++col) {
        QuarticElement image = w * basis[col];
        m[0][col] = image.e0().x();
        m[1][col] = image.e0().y();
        m[2][col] = image.e1().x();
        m[3][col] = image.e1().y();
    }
    Rational det = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t pivot = k;
        while (pivot < 4 && m[pivot][k] == 0)
            ++pivot;
        if (pivot == 4)
            return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < 4; ++r) {
            Rational f = m[r][k] / m[k][k];
            for (std::size_t c = k; c < 4; ++c)
                m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

ReductionReport reduction_step_check(const Rational& a, const QuarticElement& v)
{
    const QuarticField& L = v.field();
    const QuadraticElement& c = L.radicand();
    if (L.base().radicand() != a)
        throw std::invalid_argument("tower is not built over Q_p(sqrt " + to_string(a) + ")");
    if (!cyclic_quartic_test(a, c))
        throw std::invalid_argument("Q_p(sqrt " + to_string(a) + ")(sqrt(" + c.to_string() +
                                    ")) is not cyclic of degree 4");
    if (v.is_zero())
        throw std::domain_error("reduction_step_check: v is zero");

    ReductionReport report{tower_norm_to_mid(v), false, std::nullopt, false, 0, 0, false};
    const QuadraticElement& vp = report.v_prime;
    // (X + Y sqrt c)^2 = v' with X, Y in F forces XY = 0
    report.sqrt_of_vprime_in_L = is_square(vp) || is_square(vp / c);
    if (auto r = exact_sqrt(vp))
        report.sqrt_of_vprime = QuarticElement::embed(L, *r);
    else if (auto s = exact_sqrt(vp / c))
        report.sqrt_of_vprime = QuarticElement(L, QuadraticElement(L.base(), 0, 0), *s);
    report.quartic_cyclic = cyclic_quartic_test(a, vp);
    report.norm_to_base = quad_norm(vp);
    report.full_norm = norm_by_determinant(v);
    report.norms_agree = report.norm_to_base == report.full_norm;
    return report;
}

// --- roots of unity --------------------------------------------------------

long cyclotomic_degree(long modulus, long prime)
{
    require_prime(prime);
    if (modulus < 1)
        throw std::invalid_argument("modulus must be positive");
    if (std::gcd(modulus, prime) != 1)
        throw std::invalid_argument("gcd(" + std::to_string(modulus) + ", " + std::to_string(prime) + ") != 1");
    if (modulus == 1)
        return 1;
    const long base = prime % modulus;
    long power = base;
    long order = 1;
    while (power != 1) {
        power = static_cast<long>(static_cast<__int128>(power) * base % modulus);
        ++order;
    }
    return order;
}

RootOfUnityElt::RootOfUnityElt(long modulus, long exponent, long prime)
    : RootOfUnityElt(modulus, exponent, prime, cyclotomic_degree(modulus, prime))
{
}

RootOfUnityElt::RootOfUnityElt(long modulus, long exponent, long prime, long degree)
    : modulus_(modulus), exponent_(((exponent % modulus) + modulus) % modulus), prime_(prime), degree_(degree)
{
}

long RootOfUnityElt::order() const
{
    return modulus_ / std::gcd(exponent_, modulus_);
}

RootOfUnityElt RootOfUnityElt::frobenius() const
{
    long e = static_cast<long>(static_cast<__int128>(exponent_) * prime_ % modulus_);
    return RootOfUnityElt(modulus_, e, prime_, degree_);
}

std::string RootOfUnityElt::to_string() const
{
    return "zeta_" + std::to_string(modulus_) + "^" + std::to_string(exponent_);
}

RootOfUnityElt unram_norm(const RootOfUnityElt& z, long to_subfield_degree)
{
    if (to_subfield_degree < 1 || z.degree() % to_subfield_degree != 0)
        throw std::invalid_argument("subfield degree " + std::to_string(to_subfield_degree) +
                                    " does not divide " + std::to_string(z.degree()));
    const long M = z.modulus();
    // p^d' generates Gal(L/L'); the norm is the product over that orbit
    __int128 step = 1;
    for (long i = 0; i < to_subfield_degree; ++i)
        step = step * z.prime() % M;
    __int128 sum = 0;
    __int128 term = 1 % M;
    for (long i = 0; i < z.degree() / to_subfield_degree; ++i) {
        sum = (sum + term) % M;
        term = term * step % M;
    }
    long e = static_cast<long>(static_cast<__int128>(z.exponent()) * sum % M);
    return RootOfUnityElt(M, e, z.prime(), to_subfield_degree);
}

PadicNumber to_padic(const RootOfUnityElt& z, int precision)
{
    // the element may sit in Q_p even when its ambient field is larger
    if (cyclotomic_degree(z.order(), z.prime()) != 1)
        throw std::invalid_argument(z.to_string() + " does not lie in Q_" + std::to_string(z.prime()));
    const long p = z.prime();
    const long d = z.order();
    if (d == 1)
        return PadicNumber::from_rational(1, 1, p, precision);
    if ((p - 1) % d != 0)
        throw std::logic_error("root of unity of order " + std::to_string(d) + " outside Q_" + std::to_string(p));
    // zeta_M^e = zeta_d^c with zeta_d = omega(g)^((p-1)/d)
    const long c = z.exponent() / std::gcd(z.exponent(), z.modulus());
    Integer residue;
    Integer g(primitive_root(p));
    Integer P(p);
    mpz_powm_ui(residue.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>((p - 1) / d * c), P.get_mpz_t());
    return teichmuller(residue, p, precision);
}

}  // namespace lcf
