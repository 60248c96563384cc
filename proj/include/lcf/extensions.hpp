#ifndef LCF_EXTENSIONS_HPP
#define LCF_EXTENSIONS_HPP

#include "lcf/padic.hpp"

#include <optional>
#include <string>
#include <variant>

namespace lcf {

/// Q_p(sqrt a) with a a non-square in Q_p.
class QuadraticField {
public:
    /// Throws std::invalid_argument if a is zero or a square in Q_p.
    QuadraticField(Rational radicand, long prime);

    const Rational& radicand() const { return radicand_; }
    long prime() const { return prime_; }

    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

private:
    Rational radicand_;
    long prime_;
};

/// x + y sqrt(a) with exact rational coordinates (a level-1 tower element).
class QuadraticElement {
public:
    QuadraticElement(QuadraticField field, Rational x, Rational y = 0);

    const QuadraticField& field() const { return field_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    QuadraticElement conjugate() const { return {field_, x_, -y_}; }

    /// "x+yr", the command-line grammar with r = sqrt(a).
    std::string to_string() const;

    friend QuadraticElement operator+(const QuadraticElement& u, const QuadraticElement& v);
    friend QuadraticElement operator-(const QuadraticElement& u, const QuadraticElement& v);
    friend QuadraticElement operator*(const QuadraticElement& u, const QuadraticElement& v);
    friend QuadraticElement operator/(const QuadraticElement& u, const QuadraticElement& v);
    friend QuadraticElement operator*(const Rational& c, const QuadraticElement& v);
    friend QuadraticElement operator-(const QuadraticElement& v) { return {v.field_, -v.x_, -v.y_}; }
    friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;

private:
    QuadraticField field_;
    Rational x_;
    Rational y_;
};

/// Parses "<rational>+<rational>r" (or a bare rational) into field.
QuadraticElement parse_quadratic(std::string_view text, const QuadraticField& field);

/// x^2 - a y^2.
Rational quad_norm(const QuadraticElement& v);

/// v is a square in Q_p(sqrt a), decided p-adically.
bool is_square(const QuadraticElement& v);

/// A square root with rational coordinates, when one exists.
std::optional<QuadraticElement> exact_sqrt(const QuadraticElement& v);

/// F(sqrt c) for F = Q_p(sqrt a) and c in F a non-square in F.
class QuarticField {
public:
    explicit QuarticField(QuadraticElement radicand);

    const QuadraticElement& radicand() const { return radicand_; }
    const QuadraticField& base() const { return radicand_.field(); }
    long prime() const { return radicand_.field().prime(); }

    friend bool operator==(const QuarticField&, const QuarticField&) = default;

private:
    QuadraticElement radicand_;
};

/// e0 + e1 sqrt(c) over F (a level-2 tower element).
class QuarticElement {
public:
    QuarticElement(QuarticField field, QuadraticElement e0, QuadraticElement e1);

    /// The element of F viewed inside F(sqrt c).
    static QuarticElement embed(const QuarticField& field, const QuadraticElement& e0);

    const QuarticField& field() const { return field_; }
    const QuadraticElement& e0() const { return e0_; }
    const QuadraticElement& e1() const { return e1_; }
    bool is_zero() const { return e0_.is_zero() && e1_.is_zero(); }

    std::string to_string() const;

    friend QuarticElement operator*(const QuarticElement& u, const QuarticElement& v);
    friend QuarticElement operator+(const QuarticElement& u, const QuarticElement& v);
    friend bool operator==(const QuarticElement&, const QuarticElement&) = default;

private:
    QuarticField field_;
    QuadraticElement e0_;
    QuadraticElement e1_;
};

enum class NormTarget { mid, base };

/// Relative norm e0^2 - c e1^2 to F (mid) or its composite with quad_norm (base).
std::variant<QuadraticElement, Rational> tower_norm(const QuarticElement& w, NormTarget target);
QuadraticElement tower_norm_to_mid(const QuarticElement& w);
Rational tower_norm_to_base(const QuarticElement& w);

/// Norm to Q as the determinant of multiplication by w on the basis
/// 1, sqrt a, sqrt c, sqrt a sqrt c.  Independent of the tower route.
Rational norm_by_determinant(const QuarticElement& w);

struct ReductionReport {
    QuadraticElement v_prime;                 // relative norm of v down to F
    bool sqrt_of_vprime_in_L = false;         // v' is a square in F(sqrt c)
    std::optional<QuarticElement> sqrt_of_vprime;  // explicit root with rational coordinates
    bool quartic_cyclic = false;              // F(sqrt v')/Q_p cyclic of degree 4
    Rational norm_to_base;                    // quad_norm(v')
    Rational full_norm;                       // determinant route
    bool norms_agree = false;
    std::string corestriction_argument = "assumed, not machine-checked";
};

/// Pushes v in L = Q_p(sqrt a)(sqrt c) down to Q_p(sqrt a) and records the
/// checkable consequences.  Throws if L/Q_p is not cyclic quartic or v = 0.
ReductionReport reduction_step_check(const Rational& a, const QuarticElement& v);

/// ord_M(p).
long cyclotomic_degree(long modulus, long prime);

/// zeta_M^exponent inside an unramified extension of Q_p.
class RootOfUnityElt {
public:
    /// Ambient degree is ord_M(p).  Throws unless gcd(M, p) = 1.
    RootOfUnityElt(long modulus, long exponent, long prime);

    long modulus() const { return modulus_; }
    long exponent() const { return exponent_; }
    long prime() const { return prime_; }
    long degree() const { return degree_; }

    /// Multiplicative order of the element.
    long order() const;

    RootOfUnityElt frobenius() const;
    std::string to_string() const;

    friend bool operator==(const RootOfUnityElt&, const RootOfUnityElt&) = default;

private:
    friend RootOfUnityElt unram_norm(const RootOfUnityElt& z, long to_subfield_degree);
    RootOfUnityElt(long modulus, long exponent, long prime, long degree);

    long modulus_;
    long exponent_;
    long prime_;
    long degree_;
};

/// Norm to the degree-d' subfield: exponent times sum_{i < d/d'} p^(d' i).
RootOfUnityElt unram_norm(const RootOfUnityElt& z, long to_subfield_degree);

/// z as an element of Q_p; z itself (not its ambient field) must lie in Q_p.
PadicNumber to_padic(const RootOfUnityElt& z, int precision = kDefaultPrecision);

}  // namespace lcf

#endif  // LCF_EXTENSIONS_HPP
