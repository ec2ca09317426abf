#pragma once

// Degree-bound certificates: two polynomials of degree <= d that agree at
// d+1 distinct points are equal.

#include "schmidt/exact_arith.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace schmidt {

struct Mismatch {
  Integer point;
  Rational lhs;
  Rational rhs;
};

struct Certificate {
  bool passed = true;
  std::size_t points = 0;
  std::optional<Mismatch> mismatch;

  explicit operator bool() const { return passed; }
};

using PointFunction = std::function<Rational(const Integer&)>;

/// Compares lhs and rhs at every sample; stops at the first disagreement.
/// Throws std::invalid_argument if the samples are not pairwise distinct or
/// fewer than min_points are supplied.
Certificate certify_pointwise(const PointFunction& lhs, const PointFunction& rhs,
                              std::span<const Integer> samples, std::size_t min_points);

/// lo, lo+1, ..., hi
std::vector<Integer> sample_range(long lo, long hi);

}  // namespace schmidt
