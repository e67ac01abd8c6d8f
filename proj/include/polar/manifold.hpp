#pragma once

// Symbolic names for the closed 5-manifolds produced by the classifications.

#include <string>

#include "polar/lattice.hpp"

namespace polar {

/// S^5, #_a (S^3 x~ S^2) # #_n (S^3 x S^2) with a in {0,1}, or a
/// non-simply-connected space recorded by its fundamental group.
class DiffeoType5 {
 public:
  enum class Kind { Sphere5, ConnectedSum, NotSimplyConnected };

  static DiffeoType5 sphere() { return {}; }
  /// Collapses the empty sum to Sphere5.
  static DiffeoType5 connected_sum(int twisted, Int trivial);
  static DiffeoType5 not_simply_connected(lattice::AbelianGroupShape pi1);
  /// Barden-Smale lookup for a simply connected spin/non-spin space with
  /// free H_2 of the given rank.
  static DiffeoType5 from_rank_and_spin(Int rank, bool spin);

  Kind kind() const noexcept { return kind_; }
  int twisted() const noexcept { return twisted_; }
  Int trivial() const noexcept { return trivial_; }
  const lattice::AbelianGroupShape& pi1() const noexcept { return pi1_; }
  Int h2_rank() const noexcept { return twisted_ + trivial_; }

  /// "S5", "S3xS2", "S3~xS2", "#3(S3xS2)", "S3~xS2 # #2(S3xS2)", or
  /// "pi1=Z2" for the non-simply-connected case.
  std::string to_string() const;

  friend bool operator==(const DiffeoType5&, const DiffeoType5&) = default;

 private:
  Kind kind_ = Kind::Sphere5;
  int twisted_ = 0;
  Int trivial_ = 0;
  lattice::AbelianGroupShape pi1_;
};

}  // namespace polar
