#pragma once

#include "qrr/report.hpp"
#include "qrr/series.hpp"

namespace qrr {

// False theta series h_b = sum_{n in Z} eps_b(n) q^(b n (n+1)/2 - n), where
// eps_b(n) = (-1)^n for odd b and sign(n >= 0) for even b.
TruncSeries h_series(Exponent b, Exponent prec);

// sum_{n>=0} q^(n^2 + s n) / (q)_n and the matching modulus-5 product.
TruncSeries rr_lhs(int s, Exponent prec);
TruncSeries rr_product(int s, Exponent prec);
IdentityReport rr_check(int s, Exponent prec);

// Andrews-Gordon, summed over chains N_1 >= ... >= N_{k-1} >= 0.
TruncSeries ag_lhs(int k, int i, Exponent prec);
TruncSeries ag_product(int k, int i, Exponent prec);
IdentityReport ag_check(int k, int i, Exponent prec);

// t = q^m in both Euler identities.
IdentityReport euler1_check(Exponent m, Exponent prec);
IdentityReport euler2_check(Exponent m, Exponent prec);

// sum_{n>=0} q^(n^2 + A n) / ((q)_n (q)_{n+A}) = 1/(q)_inf.
TruncSeries andy_lhs(Exponent A, Exponent prec);
IdentityReport andy_check(Exponent A, Exponent prec);

// Finite q-binomial theorem; certified exactly from a degree bound.
IdentityReport qbt_check(const Monomial& t, Exponent K);

// sum_{n in Z} sigma^n q^((alpha n^2 + beta n)/2) and its product side.
// Both are formed in u = q^(1/2) and contracted back.
TruncSeries jtp_sum(Exponent alpha, Exponent beta, int sigma, Exponent prec);
TruncSeries jtp_product(Exponent alpha, Exponent beta, int sigma, Exponent prec);
IdentityReport jtp_check(Exponent alpha, Exponent beta, int sigma, Exponent prec);

// h_b for odd b as the triple product with alpha = b, beta = b - 2.
IdentityReport h_odd_product_check(Exponent b, Exponent prec);

// sum_{n>=0} q^(p n^2 + (p-1) n) (1 - q^(2n+1)).
TruncSeries even_unilateral_sum(Exponent p, Exponent prec);
IdentityReport h_even_unilateral_check(Exponent p, Exponent prec);

// Exact Laurent identity (q^(-a-b))_a/(q)_a = (-1)^a q^(-a(a+1)/2 - ab) [a+b, a]_q.
IdentityReport negab_check(Exponent a, Exponent b);

}  // namespace qrr
