#ifndef LCF_POLYNOMIAL_HPP
#define LCF_POLYNOMIAL_HPP

#include "lcf/padic.hpp"

#include <string>
#include <vector>

namespace lcf {

/// Dense integer polynomial, constant term first.
using IntPoly = std::vector<Integer>;

inline constexpr int kMaxEtaIndex = 16;

/// Minimal polynomial of eta_j = zeta_{2^(j+2)} + zeta_{2^(j+2)}^(-1):
/// f_1 = x^2 - 2, f_{j+1}(x) = f_j(x^2 - 2).  1 <= j <= 16.
IntPoly eta_minpoly(int j);

/// Field norm of eta_j from Q_2(eta_j) to Q_2, read off f_j(0).
Rational eta_norm(int j);

/// f(x^2 + c) by a Taylor shift followed by x -> x^2.
IntPoly substitute_quadratic(const IntPoly& f, long c);

/// Monic, lower coefficients divisible by p, constant term not by p^2.
bool is_eisenstein(const IntPoly& f, long p);

/// Degree of f; -1 for the zero polynomial.
long degree(const IntPoly& f);

/// "[c0, c1, ..., cn]".
std::string to_string(const IntPoly& f);

}  // namespace lcf

#endif  // LCF_POLYNOMIAL_HPP
