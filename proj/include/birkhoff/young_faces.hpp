#pragma once

#include "birkhoff/bigint.hpp"
#include "birkhoff/binary_matrix.hpp"

namespace birkhoff {

// The staircase face of B_n: entry (i,j) is 1 iff j <= i+1
// (0-indexed).  A face of dimension n(n-1)/2 with 2^(n-1) vertices.
BinaryMatrix staircase_face(int n);

// Product of the first n-1 Catalan numbers, C(0)...C(n-2) with
// C(k) = binom(2k,k)/(k+1).
BigInt catalan_product(int n);

// Checks the conjecture that the staircase face's relative volume is
// that Catalan product, by actually triangulating.
bool verify_conjecture(int n);

}  // namespace birkhoff
