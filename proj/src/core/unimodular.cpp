#include "core/unimodular.hpp"

#include <cassert>

namespace convexval {

Mat random_unimodular(Rng& rng, int n, int shears, long bound) {
  assert(n >= 1);
  Mat m = mat_identity(n);
  if (n == 1) return m;  // SL(1) is trivial
  for (int s = 0; s < shears; ++s) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    if (j >= i) ++j;
    long k = rng.range(1, bound);
    if (rng.below(2) == 1) k = -k;
    Mat e = mat_identity(n);
    e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(k);
    m = mat_mul(m, e);
  }
  assert(mat_det(m) == 1);
  return m;
}

}  // namespace convexval
