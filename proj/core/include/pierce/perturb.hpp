#pragma once

#include <cstdint>

#include "pierce/geometry.hpp"

namespace pierce {

// Moves every point by independent seeded rational offsets strictly smaller
// than `magnitude` in every coordinate (fixed denominator 2^16), rescanning
// all (d+1)-subsets for genericity. The magnitude halves on each failed
// round; after 32 rounds the attempt is abandoned (RetryExhausted).
PointSet perturb_general_position(const PointSet& input, std::uint64_t seed, const Rational& magnitude);

}  // namespace pierce
