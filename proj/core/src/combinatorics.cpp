#include "johnson/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace johnson {

Int binom(long n, long k) {
    if (n < 0) throw std::domain_error("binom: negative n (" + std::to_string(n) + ")");
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Int binom_ext(long n, long k) {
    if (n < 0) return 0;
    return binom(n, k);
}

Int eigenvalue(int i, int n, int w) {
    if (i < 0 || i > w || 2 * w > n)
        throw std::domain_error("eigenvalue: need 0 <= i <= w <= n/2");
    return Int(w - i) * (n - w - i) - i;
}

Int multiplicity(int i, int n) {
    if (i < 0 || i > n) throw std::domain_error("multiplicity: need 0 <= i <= n");
    return binom(n, i) - binom(n, i - 1);
}

Int eberlein(int k, int i, int w, int n) {
    if (k < 0 || k > w || i < 0 || i > w || 2 * w > n)
        throw std::domain_error("eberlein: need 0 <= k <= w, 0 <= i <= w, n >= 2w");
    return eberlein_sum(k, i, w, n);
}

Int eberlein_sum(long k, long i, long w, long n) {
    Int total = 0;
    for (long j = 0; j <= k; ++j) {
        Int term = binom_ext(i, j) * binom_ext(w - i, k - j) * binom_ext(n - w - i, k - j);
        if ((j & 1) != 0)
            total -= term;
        else
            total += term;
    }
    return total;
}

}  // namespace johnson
