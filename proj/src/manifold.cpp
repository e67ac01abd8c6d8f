#include "polar/manifold.hpp"

namespace polar {

DiffeoType5 DiffeoType5::connected_sum(int twisted, Int trivial) {
  if ((twisted != 0 && twisted != 1) || trivial < 0) {
    throw Error(ErrorCode::InvalidData, "connected sum needs twisted in {0,1} and trivial >= 0");
  }
  DiffeoType5 t;
  if (twisted == 0 && trivial == 0) return t;
  t.kind_ = Kind::ConnectedSum;
  t.twisted_ = twisted;
  t.trivial_ = trivial;
  return t;
}

DiffeoType5 DiffeoType5::not_simply_connected(lattice::AbelianGroupShape pi1) {
  DiffeoType5 t;
  t.kind_ = Kind::NotSimplyConnected;
  t.pi1_ = std::move(pi1);
  return t;
}

DiffeoType5 DiffeoType5::from_rank_and_spin(Int rank, bool spin) {
  if (rank < 0) throw Error(ErrorCode::InvalidData, "negative rank");
  if (rank == 0) {
    if (!spin) throw Error(ErrorCode::InvalidData, "a non-spin 5-manifold needs H2 of rank >= 1");
    return sphere();
  }
  const int alpha = spin ? 0 : 1;
  return connected_sum(alpha, rank - alpha);
}

std::string DiffeoType5::to_string() const {
  switch (kind_) {
    case Kind::Sphere5: return "S5";
    case Kind::NotSimplyConnected: return "pi1=" + pi1_.to_string();
    case Kind::ConnectedSum: break;
  }
  std::string s;
  if (twisted_) s = "S3~xS2";
  if (trivial_ > 0) {
    if (!s.empty()) s += " # ";
    s += trivial_ == 1 ? "S3xS2" : "#" + std::to_string(trivial_) + "(S3xS2)";
  }
  return s;
}

}  // namespace polar
