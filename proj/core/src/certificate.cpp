#include "schmidt/certificate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schmidt {

Certificate certify_pointwise(const PointFunction& lhs, const PointFunction& rhs,
                              std::span<const Integer> samples, std::size_t min_points) {
  std::vector<Integer> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("certificate samples must be distinct");
  if (samples.size() < min_points)
    throw std::invalid_argument("certificate needs at least " + std::to_string(min_points) +
                                " sample points, got " + std::to_string(samples.size()));
  Certificate cert;
  for (const auto& x : samples) {
    Rational l = lhs(x);
    Rational r = rhs(x);
    ++cert.points;
    if (l != r) {
      cert.passed = false;
      cert.mismatch = Mismatch{x, l, r};
      break;
    }
  }
  return cert;
}

std::vector<Integer> sample_range(long lo, long hi) {
  std::vector<Integer> out;
  for (long x = lo; x <= hi; ++x) out.emplace_back(x);
  return out;
}

}  // namespace schmidt
