#ifndef LCF_BRAUER_HPP
#define LCF_BRAUER_HPP

#include "lcf/extensions.hpp"
#include "lcf/padic.hpp"
#include "lcf/symbols.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace lcf {

/// An element of Q/Z in reduced form, 0 <= numerator < denominator.
class BrauerInv {
public:
    BrauerInv() = default;
    BrauerInv(std::int64_t numerator, std::int64_t denominator);

    static BrauerInv half() { return {1, 2}; }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    /// Order in Q/Z, equal to the denominator.
    std::int64_t order() const { return den_; }

    /// "num/den".
    std::string to_string() const;
    static BrauerInv parse(std::string_view text);

    friend BrauerInv operator+(BrauerInv a, BrauerInv b);
    friend BrauerInv operator-(BrauerInv a) { return {-a.num_, a.den_}; }
    friend BrauerInv operator-(BrauerInv a, BrauerInv b) { return a + (-b); }
    friend BrauerInv operator*(std::int64_t k, BrauerInv a);
    friend bool operator==(const BrauerInv&, const BrauerInv&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Character (a)_2 cutting out Q_p(sqrt a); a is a nontrivial class.
struct QuadraticCharacter {
    SquareClass a;
};

/// Unramified character of order d sending Frobenius to frobenius_value.
struct UnramifiedCharacter {
    std::int64_t order;
    BrauerInv frobenius_value;
};

class Character {
public:
    static Character quadratic(const SquareClass& a);
    static Character quadratic(const Rational& a, long prime);
    static Character unramified(long prime, BrauerInv frobenius_value);
    static Character trivial(long prime) { return unramified(prime, BrauerInv()); }

    long prime() const { return prime_; }
    std::int64_t order() const;
    const std::variant<QuadraticCharacter, UnramifiedCharacter>& kind() const { return kind_; }
    std::string to_string() const;

private:
    Character(long prime, std::variant<QuadraticCharacter, UnramifiedCharacter> kind)
        : prime_(prime), kind_(std::move(kind))
    {
    }

    long prime_;
    std::variant<QuadraticCharacter, UnramifiedCharacter> kind_;
};

/// delta = alpha + (theta, t) over Q_p((t)).
struct WittClass {
    BrauerInv alpha_inv;
    Character theta;

    long prime() const { return theta.prime(); }
    std::int64_t period() const;
};

/// E = L(tau), tau^e = v t, with residue field Lbar determined by v.
struct CandidateSubfield {
    std::variant<QuadraticElement, QuarticElement, RootOfUnityElt> v;
    long ramification;

    /// [Lbar : Q_p].
    long residue_degree() const;
    /// [E : K] = [Lbar : Q_p] * e.
    long degree() const { return residue_degree() * ramification; }
    long prime() const;
};

/// Full norm of v down to Q_p.
PadicNumber norm_to_base(const QuadraticElement& v);
PadicNumber norm_to_base(const QuarticElement& v);
PadicNumber norm_to_base(const RootOfUnityElt& v);

std::int64_t local_index(BrauerInv inv);
BrauerInv restrict_inv(BrauerInv inv, std::int64_t extension_degree);

BrauerInv inv_pairing(const Character& theta, const Rational& b);
BrauerInv inv_pairing(const Character& theta, const PadicNumber& b);

/// (a, v) over Lbar, computed as (a, N(v)) over Q_p.
SymbolValue quaternion_cor(const Rational& a, const QuadraticElement& v);
SymbolValue quaternion_cor(const Rational& a, const QuarticElement& v);
SymbolValue quaternion_cor(const Rational& a, const RootOfUnityElt& v);

/// ind(delta), cross-checked between lcm(|theta|, per alpha) and
/// |theta| * ind(alpha restricted to k(theta)).  std::logic_error on disagreement.
std::int64_t witt_index(const WittClass& delta);

/// theta extends to characters of every larger prime-power order.
bool char_extendable(const Character& theta);

/// Invariant over Lbar of alpha + (theta, v); zero iff the candidate splits delta.
BrauerInv restrict_witt(const WittClass& delta, const CandidateSubfield& candidate);

}  // namespace lcf

#endif  // LCF_BRAUER_HPP
