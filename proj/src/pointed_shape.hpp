#pragma once

// Grouplike skeleton of a Hopf algebra whose certificate spans its basis.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bicrossed/hopf.hpp"

namespace bicrossed::detail {

struct PointedShape {
  std::vector<std::size_t> grouplikes;      // basis indices
  std::vector<SkewPrimitive> skews;
  std::vector<long> ordinal;                // basis index -> grouplike ordinal or -1
  std::vector<std::size_t> mult;            // ordinal product table
  std::size_t unit = 0;                     // ordinal of 1

  std::size_t size() const { return grouplikes.size(); }
  std::size_t product(std::size_t a, std::size_t b) const {
    return mult[a * grouplikes.size() + b];
  }
};

/// Ordinal of the grouplike a single-term vector with coefficient 1 stands
/// for, or -1.
long grouplike_of(const PointedShape& s, const Vec& v);

/// Validates the certificate and that grouplikes and skew-primitives form
/// the whole basis. Throws Error{unsupported_shape} naming `which`.
PointedShape pointed_shape(const HopfStructure& h,
                           const PointedCertificate& cert, const char* which);

/// Basis of {y : Delta(y) = y (x) e_v + e_u (x) y}.
std::vector<Vec> skew_space(const HopfStructure& h, std::size_t u,
                            std::size_t v);

/// Order of each grouplike in the ordinal group.
std::vector<std::size_t> element_orders(const PointedShape& s);

}  // namespace bicrossed::detail
