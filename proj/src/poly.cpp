#include "siegel/poly.hpp"

namespace siegel {

std::uint64_t graded_dimension(int k, int d) {
  if (k < 1 || d < 0) throw std::invalid_argument("graded_dimension needs k >= 1, d >= 0");
  // C(d + k - 1, k - 1), built incrementally so every partial product is exact
  std::uint64_t r = 1;
  for (int j = 1; j < k; ++j) r = r * static_cast<std::uint64_t>(d + j) / static_cast<std::uint64_t>(j);
  return r;
}

}  // namespace siegel
