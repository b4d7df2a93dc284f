#pragma once

// __float128 oracles: the Wright series summed term by term with quad
// Gamma values, and erf from its Maclaurin series.

#include <quadmath.h>

namespace oracle {

using quad = __float128;

inline quad rgamma_q(quad y) {
  if (y > 0) return 1 / tgammaq(y);
  if (y == floorq(y)) return 0;
  // Gamma(y) Gamma(1 - y) = pi / sin(pi y)
  return sinq(M_PIq * y) * tgammaq(1 - y) / M_PIq;
}

inline double wright_quad(double z, double rho, double beta, int max_terms = 10000) {
  quad sum = 0, fact = 1, zk = 1;
  int small = 0;
  for (int k = 0; k < max_terms; ++k) {
    if (k > 0) {
      fact *= k;
      zk *= z;
    }
    const quad term = zk / fact * rgamma_q(static_cast<quad>(rho) * k + beta);
    sum += term;
    if (fabsq(term) < static_cast<quad>(1e-40) * (1 + fabsq(sum))) {
      if (++small > 5) break;
    } else {
      small = 0;
    }
    if (isinfq(fact)) break;
  }
  return static_cast<double>(sum);
}

inline double erf_quad(double x) {
  const quad xq = x;
  quad term = xq, sum = xq;
  for (int n = 1; n < 400; ++n) {
    term *= -xq * xq / n;
    const quad add = term / (2 * n + 1);
    sum += add;
    if (fabsq(add) < static_cast<quad>(1e-36)) break;
  }
  return static_cast<double>(2 / sqrtq(M_PIq) * sum);
}

}  // namespace oracle
