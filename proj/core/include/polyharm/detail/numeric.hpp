#pragma once

#include <complex>

namespace polyharm::detail {

/// z^k for k >= 0 by repeated squaring; ipow(z, 0) == 1 for every z.
template <class T>
T ipow(T z, int k) {
  T result(1);
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

}  // namespace polyharm::detail
