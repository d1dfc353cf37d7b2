#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "anyonwalk/cyclotomic.hpp"

namespace anyonwalk {

/// Finite group generated by the phase-stripped Milnor generators ζ·g_left
/// and ζ·g_right, enumerated once in exact CycMat2 arithmetic. Lets the
/// enumeration engines evaluate a Milnor product as a walk over a
/// multiplication table.
///
/// For a history h restricted to letters on strands (r, s), the element
/// stripped(h) = ζ^{#letters}·B_rs(h). A pair's normalized Milnor product is
/// stripped(a')^{-1}·stripped(a), so c3 = 1 exactly when
/// stripped(a) = -stripped(a').
class MilnorGroup {
 public:
  using Id = std::uint16_t;

  static const MilnorGroup& instance();

  Id identity() const { return identity_; }
  /// Id of G·g where G is the left (side 0) or right (side 1) generator, or
  /// its inverse for sign < 0.
  Id left_multiply(Id g, int side, int sign) const {
    return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(2 * side + (sign > 0 ? 0 : 1))];
  }
  Id negate(Id g) const { return negation_[static_cast<std::size_t>(g)]; }
  /// Representative of {g, -g}; flipped(g) says g is its negative.
  Id canonical(Id g) const { return std::min(g, negate(g)); }
  bool flipped(Id g) const { return g != canonical(g); }
  std::size_t size() const { return elements_.size(); }
  const CycMat2& element(Id g) const { return elements_[static_cast<std::size_t>(g)]; }

 private:
  MilnorGroup();

  std::vector<CycMat2> elements_;
  std::vector<std::array<Id, 4>> table_;
  std::vector<Id> negation_;
  Id identity_ = 0;
};

}  // namespace anyonwalk
