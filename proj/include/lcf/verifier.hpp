#ifndef LCF_VERIFIER_HPP
#define LCF_VERIFIER_HPP

#include "lcf/brauer.hpp"
#include "lcf/certificate.hpp"
#include "lcf/extensions.hpp"

#include <optional>
#include <vector>

namespace lcf {

/*
 * Parameters of the tame cyclic construction over Q_p((t)):
 * index n = l^a, m = |mu(Q_p)|, e the order of zeta_m modulo the norms from
 * k(theta) (l | e | m, 1 < e <= n), inv(alpha) = i/n with gcd(i, n) = 1,
 * and j with gcd(j, e) = 1.  theta is not materialized; its pairing with
 * zeta_m is fixed to 1/e.
 */
struct TameConstruction {
    long p;
    long l;
    long n;
    long m;
    long e;
    long i;
    long j;

    /// Validates and fills m; when j is absent picks the smallest j in
    /// [1, e] coprime to e with j/e = i/e mod 1.  Throws std::invalid_argument.
    static TameConstruction make(long p, long l, long n, long e, long i, std::optional<long> j = std::nullopt);

    /// Every valid (e, i, j) for the given p, l, n.
    static std::vector<TameConstruction> all(long p, long l, long n);
};

/// p = 3 mod 4, r >= 2, s = v_2(p^2 - 1).
struct TwoAdicConstruction {
    long p;
    long r;
    long s;

    static TwoAdicConstruction make(long p, long r);
};

/// A cyclic quartic Lbar = Q_2(sqrt a)(sqrt c) with an element v of Lbar.
struct QuarticTowerChoice {
    Rational a;
    QuarticElement v;
    std::optional<QuadraticElement> expected_v_prime;
    std::optional<Rational> expected_norm;

    /// Lbar = Q_2(eta_2), eta_2 = sqrt(2 + sqrt 2), v = 2 + eta_2.
    static QuarticTowerChoice eta2();

    /// v replaced by w v for w in Q_2^x.
    QuarticTowerChoice twisted(const Rational& w) const;
};

Certificate noncyclic_certificate_deg4();
Certificate noncyclic_reduction_deg8(const QuarticTowerChoice& tower = QuarticTowerChoice::eta2());
Certificate cyclic_construct_tame(const TameConstruction& c);
Certificate cyclic_construct_2adic(const TwoAdicConstruction& c);

inline constexpr int kMaxEtaSplittingIndex = 12;

/// 2 <= n <= 12.
Certificate eta_splitting_check(int n);

/// The n-cyclic length of Q_p((t)).
int cyclic_length_table(long p, long n);
Certificate cyclic_length_certificate(long p, long n);

Certificate mu_split_check(long p, long n);

/// |mu(Q_p)|.
long roots_of_unity_order(long p);

}  // namespace lcf

#endif  // LCF_VERIFIER_HPP
