#pragma once

#include <span>

#include "ainfty/rational.hpp"

namespace ainfty {

// Shifted degree |a| + 1; all signs in this library are built from it.
inline int sdeg(int degree) { return degree + 1; }

// Parity (0/1) of |a_p| + ... + |a_q| + q - p + 1 for p <= q over the given
// degree list; the empty range p > q gives 0.
int l_linear(std::span<const int> degrees, int p, int q);

// The wrap-around variant: for p > q the range runs p..n, 0..q where
// n = degrees.size() - 1, with value |a_p|+...+|a_n|+|a_0|+...+|a_q|+n-p+q.
// Both branches agree with the shifted-degree sum over the cyclic range
// modulo 2.
int l_cyclic(std::span<const int> degrees, int p, int q);

// Exact integer value of the same expression (not reduced mod 2).
long l_value(std::span<const int> degrees, int p, int q);

inline Scalar parity_sign(int parity) { return (parity % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace ainfty
