#ifndef LCF_SYMBOLS_HPP
#define LCF_SYMBOLS_HPP

#include "lcf/padic.hpp"

#include <string>

namespace lcf {

class QuadraticElement;

/// A value in {+1, -1}.
class SymbolValue {
public:
    static SymbolValue plus() { return SymbolValue(1); }
    static SymbolValue minus() { return SymbolValue(-1); }
    static SymbolValue from_int(int s);

    int sign() const { return sign_; }
    bool is_plus() const { return sign_ == 1; }
    std::string to_string() const { return sign_ == 1 ? "+1" : "-1"; }

    friend SymbolValue operator*(SymbolValue a, SymbolValue b) { return SymbolValue(a.sign_ * b.sign_); }
    friend bool operator==(SymbolValue, SymbolValue) = default;

private:
    explicit SymbolValue(int s) : sign_(s) {}
    int sign_;
};

/// (a, b)_p by the closed formula on valuations and units.
SymbolValue hilbert(const PadicNumber& a, const PadicNumber& b);
SymbolValue hilbert(const Rational& a, const Rational& b, long prime);

/// (a, b)_p by searching for a primitive solution of z^2 = a x^2 + b y^2
/// modulo p^B, B = 2 max(|v(a)|, |v(b)|) + (3 if p = 2 else 1) + 2, after
/// clearing denominators.  Meant for small inputs.
SymbolValue hilbert_oracle(const Rational& a, const Rational& b, long prime);

/// b in N(Q_p(sqrt a)/Q_p); a must be a non-square.
bool is_norm_quadratic(const Rational& b, const Rational& a, long prime);

/// Q_p(sqrt a) embeds in a cyclic quartic extension iff -1 is a norm from it.
bool albert_extendable_deg4(const Rational& a, long prime);

/// Q_p(sqrt a)(sqrt v)/Q_p is cyclic of degree 4: v a non-square in
/// Q_p(sqrt a) and a N(v) a square in Q_p.
bool cyclic_quartic_test(const Rational& a, const QuadraticElement& v);

}  // namespace lcf

#endif  // LCF_SYMBOLS_HPP
