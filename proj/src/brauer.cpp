#include "lcf/brauer.hpp"

#include <numeric>
#include <stdexcept>

namespace lcf {

// --- BrauerInv -------------------------------------------------------------

BrauerInv::BrauerInv(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator <= 0)
        throw std::invalid_argument("invariant denominator must be positive");
    numerator %= denominator;
    if (numerator < 0)
        numerator += denominator;
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

std::string BrauerInv::to_string() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

BrauerInv BrauerInv::parse(std::string_view text)
{
    Rational q = parse_rational(text);
    if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
        throw std::invalid_argument("invariant out of range");
    return {q.get_num().get_si(), q.get_den().get_si()};
}

BrauerInv operator+(BrauerInv a, BrauerInv b)
{
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

BrauerInv operator*(std::int64_t k, BrauerInv a)
{
    const __int128 n = static_cast<__int128>(k % a.den_) * a.num_;
    return {static_cast<std::int64_t>(n % a.den_), a.den_};
}

// --- characters ------------------------------------------------------------

Character Character::quadratic(const SquareClass& a)
{
    if (a.is_trivial())
        throw std::invalid_argument("quadratic character of the trivial class");
    return Character(a.prime, QuadraticCharacter{a});
}

Character Character::quadratic(const Rational& a, long prime)
{
    return quadratic(square_class(a, prime));
}

Character Character::unramified(long prime, BrauerInv frobenius_value)
{
    require_prime(prime);
    return Character(prime, UnramifiedCharacter{frobenius_value.order(), frobenius_value});
}

std::int64_t Character::order() const
{
    if (std::holds_alternative<QuadraticCharacter>(kind_))
        return 2;
    return std::get<UnramifiedCharacter>(kind_).order;
}

std::string Character::to_string() const
{
    if (auto q = std::get_if<QuadraticCharacter>(&kind_))
        return "(" + std::to_string(q->a.representative) + ")_2";
    const auto& u = std::get<UnramifiedCharacter>(kind_);
    return "unramified(" + u.frobenius_value.to_string() + ")";
}

std::int64_t WittClass::period() const
{
    return std::lcm(theta.order(), alpha_inv.order());
}

long CandidateSubfield::residue_degree() const
{
    struct {
        long operator()(const QuadraticElement&) const { return 2; }
        long operator()(const QuarticElement&) const { return 4; }
        long operator()(const RootOfUnityElt& z) const { return z.degree(); }
    } visitor;
    return std::visit(visitor, v);
}

long CandidateSubfield::prime() const
{
    struct {
        long operator()(const QuadraticElement& e) const { return e.field().prime(); }
        long operator()(const QuarticElement& e) const { return e.field().prime(); }
        long operator()(const RootOfUnityElt& z) const { return z.prime(); }
    } visitor;
    return std::visit(visitor, v);
}

// --- norms -----------------------------------------------------------------

PadicNumber norm_to_base(const QuadraticElement& v)
{
    return PadicNumber::from_rational(quad_norm(v), v.field().prime());
}

PadicNumber norm_to_base(const QuarticElement& v)
{
    return PadicNumber::from_rational(tower_norm_to_base(v), v.field().prime());
}

PadicNumber norm_to_base(const RootOfUnityElt& v)
{
    return to_padic(unram_norm(v, 1));
}

// --- invariants ------------------------------------------------------------

std::int64_t local_index(BrauerInv inv)
{
    return inv.denominator();
}

BrauerInv restrict_inv(BrauerInv inv, std::int64_t extension_degree)
{
    if (extension_degree < 1)
        throw std::invalid_argument("extension degree must be positive");
    return extension_degree * inv;
}

BrauerInv inv_pairing(const Character& theta, const PadicNumber& b)
{
    if (b.prime() != theta.prime())
        throw std::invalid_argument("prime mismatch");
    if (b.is_zero())
        throw std::domain_error("pairing with zero");
    if (auto q = std::get_if<QuadraticCharacter>(&theta.kind())) {
        const PadicNumber a = PadicNumber::from_rational(q->a.value(), theta.prime(), b.precision());
        return hilbert(a, b).is_plus() ? BrauerInv() : BrauerInv::half();
    }
    const auto& u = std::get<UnramifiedCharacter>(theta.kind());
    return b.valuation() * u.frobenius_value;
}

BrauerInv inv_pairing(const Character& theta, const Rational& b)
{
    if (b == 0)
        throw std::domain_error("pairing with zero");
    return inv_pairing(theta, PadicNumber::from_rational(b, theta.prime()));
}

SymbolValue quaternion_cor(const Rational& a, const QuadraticElement& v)
{
    if (v.is_zero())
        throw std::domain_error("quaternion_cor: v is zero");
    return hilbert(a, quad_norm(v), v.field().prime());
}

SymbolValue quaternion_cor(const Rational& a, const QuarticElement& v)
{
    if (v.is_zero())
        throw std::domain_error("quaternion_cor: v is zero");
    return hilbert(a, tower_norm_to_base(v), v.field().prime());
}

SymbolValue quaternion_cor(const Rational& a, const RootOfUnityElt& v)
{
    const PadicNumber n = norm_to_base(v);
    return hilbert(PadicNumber::from_rational(a, v.prime(), n.precision()), n);
}

std::int64_t witt_index(const WittClass& delta)
{
    const std::int64_t theta_order = delta.theta.order();
    const std::int64_t by_lcm = std::lcm(theta_order, local_index(delta.alpha_inv));
    const std::int64_t by_restriction = theta_order * local_index(restrict_inv(delta.alpha_inv, theta_order));
    if (by_lcm != by_restriction)
        throw std::logic_error("index formulas disagree: " + std::to_string(by_lcm) + " vs " +
                               std::to_string(by_restriction));
    return by_lcm;
}

bool char_extendable(const Character& theta)
{
    const auto* q = std::get_if<QuadraticCharacter>(&theta.kind());
    if (!q)
        return true;
    const long p = theta.prime();
    const PadicNumber a = PadicNumber::from_rational(q->a.value(), p);
    // extendable iff the generator of mu(Q_p) is a norm from k(theta)
    const PadicNumber zeta = p == 2 ? PadicNumber::from_rational(Rational(-1), 2) : teichmuller(primitive_root(p), p);
    return hilbert(a, zeta).is_plus();
}

BrauerInv restrict_witt(const WittClass& delta, const CandidateSubfield& candidate)
{
    if (candidate.prime() != delta.prime())
        throw std::invalid_argument("prime mismatch");
    const std::int64_t index = witt_index(delta);
    if (candidate.degree() != index)
        throw std::invalid_argument("candidate degree " + std::to_string(candidate.degree()) +
                                    " differs from ind(delta) = " + std::to_string(index));
    const BrauerInv alpha_part = restrict_inv(delta.alpha_inv, candidate.residue_degree());
    BrauerInv theta_part;
    if (auto q = std::get_if<QuadraticCharacter>(&delta.theta.kind())) {
        const Rational a = q->a.value();
        SymbolValue s = std::visit([&](const auto& v) { return quaternion_cor(a, v); }, candidate.v);
        theta_part = s.is_plus() ? BrauerInv() : BrauerInv::half();
    } else {
        const PadicNumber n = std::visit([](const auto& v) { return norm_to_base(v); }, candidate.v);
        theta_part = inv_pairing(delta.theta, n);
    }
    return alpha_part + theta_part;
}

}  // namespace lcf
