#pragma once

#include "wwm/gaussian_rational.hpp"

namespace wwm::detail {

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// n (n-1) ... (n-k+1); zero when k > n.
inline Integer falling(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned j = 0; j < k; ++j) r *= n - j;
  return r;
}

}  // namespace wwm::detail
