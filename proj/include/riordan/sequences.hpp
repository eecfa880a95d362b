#pragma once

/*
 * Named series, vectors and Riordan pairs.
 *
 *   C(x)  Catalan            C = 1 + x C^2
 *   M(x)  Motzkin            M_n = sum_k binom(n, 2k) C_k
 *   W(x)  central binomial   W = (1 - 4x)^(-1/2)
 *
 * Catalog of pairs:
 *   pascal P = (1/(1-x), x/(1-x))      Q  = ((2-x)/(1-x), x/(1-x))
 *   D        = (1, -x)
 *   FS = (1, x(1+x))                   LS = (1+2x, x(1+x))            second kind
 *   FF = (x/(1-x), x^2/(1-x))          LF = ((2-x)/(1-x), x^2/(1-x))  first kind
 *
 * Lucas numbers start L_0 = 2, L_1 = 1.
 */

#include <map>
#include <string>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Catalan numbers C_0 .. C_{n-1} from the binomial formula.
std::vector<mpz_class> catalan_numbers(int n);

Series catalan_series(int order);
Series motzkin_series(int order);
Series central_binomial_series(int order);

SeqVec fibonacci_vec(int n);
SeqVec lucas_vec(int n);

/// e_j of length n (finitely supported).
SeqVec unit_vec(int j, int n);
/// e = e_0 + e_1 + ... (all ones, infinite support).
SeqVec ones_vec(int n);

/// J(0) v: out[i] = v[i+1]; the window shrinks by one.
SeqVec shift_vec(const SeqVec& v);

/// (1/(1+x)) f(x/(1+x))
Series euler_transform(const Series& f);

namespace pairs {

RiordanPair pascal(int order);
RiordanPair q_matrix(int order);
RiordanPair D(int order);
RiordanPair FS(int order);
RiordanPair LS(int order);
RiordanPair FF(int order);
RiordanPair LF(int order);

/// ((1+x)/(1-x), -x): an involution in the (-1)-Appell subgroup
RiordanPair appell_involution(int order);

/// ((1 + xC)C, x(1 + xC)C): a pseudo-involution with rows 1; 2 1; 4 4 1; ...
RiordanPair catalan_pseudo_involution(int order);

} // namespace pairs

/// Named pairs: pascal, Q, D, FS, LS, FF, LF, FSinv, LSinv, DFSinvD, DLSinvD,
/// appell, R (the Catalan pseudo-involution), I.
RiordanPair catalog_pair(const std::string& name, int order);
std::vector<std::string> catalog_names();

} // namespace riordan
