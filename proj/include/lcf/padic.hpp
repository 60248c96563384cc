#ifndef LCF_PADIC_HPP
#define LCF_PADIC_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lcf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Number of significant p-adic digits carried when the caller does not say.
inline constexpr int kDefaultPrecision = 24;

/// Smallest relative precision a PadicNumber may carry (the 2-adic square
/// criterion looks at the unit mod 8).
inline constexpr int kMinPrecision = 3;

/// Throws std::invalid_argument unless p is a prime.
void require_prime(long p);

/// v_p(n) for a nonzero integer.
long valuation(const Integer& n, long p);

/// Smallest positive quadratic non-residue modulo an odd prime.
long least_nonresidue(long p);

/// Integer power p^e.
Integer ipow(long p, unsigned long e);

/// Parses "n", "n/d" (optionally signed). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/*
 * An element p^valuation * unit of Q_p, where unit is known modulo
 * p^precision.  The zero element carries no valuation; it is never
 * represented as a unit with fake precision.
 */
class PadicNumber {
public:
    static PadicNumber from_rational(const Integer& numerator, const Integer& denominator, long prime,
                                     int precision = kDefaultPrecision);
    static PadicNumber from_rational(const Rational& q, long prime, int precision = kDefaultPrecision);
    static PadicNumber zero(long prime, int precision = kDefaultPrecision);

    /// Builds p^valuation * unit; unit must be prime to p.
    static PadicNumber from_unit(long prime, long valuation, const Integer& unit, int precision);

    long prime() const { return prime_; }
    int precision() const { return precision_; }
    bool is_zero() const { return !valuation_.has_value(); }

    /// Throws std::domain_error for the zero element.
    long valuation() const;

    /// Canonical residue in [0, p^precision).
    const Integer& unit() const { return unit_; }

    /// p^precision.
    Integer modulus() const { return ipow(prime_, static_cast<unsigned long>(precision_)); }

    PadicNumber with_precision(int precision) const;

    /// "p^v * u mod p^N", or "0" for the zero element.
    std::string to_string() const;

    /// Equal valuations and units agreeing modulo p^min(precision).
    friend bool operator==(const PadicNumber& x, const PadicNumber& y);

private:
    PadicNumber(long prime, std::optional<long> valuation, Integer unit, int precision);

    long prime_;
    std::optional<long> valuation_;
    Integer unit_;
    int precision_;
};

enum class ArithOp { add, sub, mul, div };

/// Field arithmetic at the smaller of the two precisions.  Cancellation in
/// add/sub lowers the relative precision of the result; if fewer than
/// kMinPrecision digits survive, std::domain_error is thrown.
PadicNumber arith(const PadicNumber& x, const PadicNumber& y, ArithOp op);

inline PadicNumber operator+(const PadicNumber& x, const PadicNumber& y) { return arith(x, y, ArithOp::add); }
inline PadicNumber operator-(const PadicNumber& x, const PadicNumber& y) { return arith(x, y, ArithOp::sub); }
inline PadicNumber operator*(const PadicNumber& x, const PadicNumber& y) { return arith(x, y, ArithOp::mul); }
inline PadicNumber operator/(const PadicNumber& x, const PadicNumber& y) { return arith(x, y, ArithOp::div); }

PadicNumber pow(const PadicNumber& x, unsigned long e);

bool is_square(const PadicNumber& x);
bool is_square(const Rational& q, long prime);

/// Square root with the smallest nonnegative unit residue.
PadicNumber sqrt(const PadicNumber& x);

/// Canonical representative of x (Q_p^x)^2.
struct SquareClass {
    long prime;
    long representative;

    Rational value() const { return Rational(representative); }
    bool is_trivial() const { return representative == 1; }
    friend auto operator<=>(const SquareClass&, const SquareClass&) = default;
};

SquareClass square_class(const PadicNumber& x);
SquareClass square_class(const Rational& q, long prime);

/// 8 classes for p = 2, 4 for odd p; the trivial class comes first.
std::vector<SquareClass> square_class_reps(long prime);

/// The (p-1)-th root of unity congruent to residue mod p, odd p only.
PadicNumber teichmuller(const Integer& residue, long prime, int precision = kDefaultPrecision);

/// Least positive primitive root modulo an odd prime.
long primitive_root(long p);

}  // namespace lcf

#endif  // LCF_PADIC_HPP
