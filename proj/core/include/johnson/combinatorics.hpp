#pragma once

#include "johnson/exact.hpp"

namespace johnson {

/// C(n, k) with the zero extension: 0 whenever k < 0 or k > n.
/// Negative n is rejected (std::domain_error).
Int binom(long n, long k);

/// Subset-count extension of binom: additionally 0 for n < 0. Criterion
/// polynomials reach such arguments when their reduced parameters degenerate;
/// an n-set with n < 0 has no k-subsets, so those terms drop out.
Int binom_ext(long n, long k);

/// i-th adjacency eigenvalue of J(n, w): (w - i)(n - w - i) - i.
/// Requires 0 <= i <= w and 2w <= n.
Int eigenvalue(int i, int n, int w);

/// Dimension of the lambda_i eigenspace: C(n, i) - C(n, i-1).
/// Requires 0 <= i <= n.
Int multiplicity(int i, int n);

/// Eberlein polynomial E_k(i, w, n) = sum_j (-1)^j C(i,j) C(w-i,k-j) C(n-w-i,k-j).
/// Requires 0 <= k <= w, 0 <= i <= w, n >= 2w.
Int eberlein(int k, int i, int w, int n);

/// The defining sum of E_k without the graph-regime parameter checks
/// (empty sum, hence 0, for k < 0). Used where reduced parameters may
/// leave the n >= 2w regime.
Int eberlein_sum(long k, long i, long w, long n);

}  // namespace johnson
