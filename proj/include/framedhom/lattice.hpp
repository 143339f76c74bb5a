#pragma once

// Coordinate model of the three homology lattices of a marked surface
// (Sigma_g, Z) with Z = {p_1, ..., p_n}:
//
//   absolute  H_1(Sigma_g)      basis x_1, y_1, ..., x_g, y_g
//   relative  H_1(Sigma_g, Z)   basis x_1, ..., y_g, a_2, ..., a_n
//   punctured H_1(Sigma_g - Z)  basis x_1, ..., y_g, d_2, ..., d_n
//
// a_i is the arc from p_1 to p_i, d_i the loop around p_i with the surface
// on its left, and d_1 = -(d_2 + ... + d_n). Pairings: <x_i, y_i> = +1 and
// <a_i, d_j> = delta_ij; the arcs are disjoint from every x_i, y_i.

#include <framedhom/errors.hpp>
#include <framedhom/integer.hpp>

#include <vector>

namespace framedhom {

class SurfaceSpec {
 public:
  /// Throws ValidationError unless g >= 2, n >= 1 and sum(kappa) = 2g - 2.
  SurfaceSpec(int genus, std::vector<long> kappa);

  int genus() const { return genus_; }
  int points() const { return static_cast<int>(kappa_.size()); }
  const std::vector<long>& kappa() const { return kappa_; }
  /// 1-based, matching the marked point labels p_1..p_n.
  long kappa_at(int point) const { return kappa_.at(static_cast<std::size_t>(point - 1)); }
  /// Winding number of the loop around p_i: -1 - kappa_i.
  long signature(int point) const { return -1 - kappa_at(point); }

  Eigen::Index abs_dim() const { return 2 * genus_; }
  Eigen::Index rel_dim() const { return 2 * genus_ + points() - 1; }
  Eigen::Index arc_count() const { return points() - 1; }

  Eigen::Index x_index(int handle) const { return 2 * (handle - 1); }
  Eigen::Index y_index(int handle) const { return 2 * (handle - 1) + 1; }
  /// Coordinate of a_i (or d_i) for i in 2..n.
  Eigen::Index arc_index(int point) const { return 2 * genus_ + point - 2; }

  bool all_kappa_even() const;
  long kappa_gcd() const;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;

 private:
  int genus_;
  std::vector<long> kappa_;
};

/// Integer vector tagged with the lattice it lives in.
template <typename Tag>
struct LatticeVector {
  IntVector coords;

  LatticeVector() = default;
  explicit LatticeVector(IntVector c) : coords(std::move(c)) {}

  static LatticeVector zero(Eigen::Index n) { return LatticeVector(IntVector::Zero(n)); }

  Eigen::Index size() const { return coords.size(); }
  const Integer& operator[](Eigen::Index i) const { return coords(i); }
  Integer& operator[](Eigen::Index i) { return coords(i); }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return LatticeVector(IntVector(a.coords + b.coords));
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return LatticeVector(IntVector(a.coords - b.coords));
  }
  friend LatticeVector operator-(const LatticeVector& a) { return LatticeVector(IntVector(-a.coords)); }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& a) {
    return LatticeVector(IntVector(a.coords * k));
  }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords.size() == b.coords.size() && a.coords == b.coords;
  }
};

struct AbsTag {};
struct RelTag {};
struct PunctTag {};
struct ZeroChainTag {};

using AbsVec = LatticeVector<AbsTag>;
using RelVec = LatticeVector<RelTag>;
using PunctVec = LatticeVector<PunctTag>;
using ZeroChain = LatticeVector<ZeroChainTag>;

AbsVec x_class(const SurfaceSpec& spec, int handle);
AbsVec y_class(const SurfaceSpec& spec, int handle);
AbsVec abs_basis(const SurfaceSpec& spec, Eigen::Index k);
/// Arc a_i, i in 2..n.
RelVec arc_class(const SurfaceSpec& spec, int point);
/// Puncture loop d_i, i in 1..n (d_1 is minus the sum of the others).
PunctVec puncture_class(const SurfaceSpec& spec, int point);

RelVec embed_rel(const SurfaceSpec& spec, const AbsVec& v);
PunctVec embed_punct(const SurfaceSpec& spec, const AbsVec& v);
/// The x/y coordinates of a relative class.
AbsVec absolute_part(const SurfaceSpec& spec, const RelVec& x);

/// Gram matrix J of the standard symplectic form: <u, v> = u^T J v.
IntMatrix symplectic_gram(int genus);
/// Gram matrix B of the relative-punctured pairing: <x, c> = x^T B c.
IntMatrix rel_punct_gram(const SurfaceSpec& spec);

/// Standard symplectic form on the leading 2g coordinates, for any scalar.
template <typename DerivedU, typename DerivedV>
typename DerivedU::Scalar symplectic_form(const Eigen::MatrixBase<DerivedU>& u,
                                          const Eigen::MatrixBase<DerivedV>& v, Eigen::Index abs_dim) {
  typename DerivedU::Scalar s(0);
  for (Eigen::Index i = 0; i + 1 < abs_dim; i += 2) s += u(i) * v(i + 1) - u(i + 1) * v(i);
  return s;
}

Integer symplectic_pairing(const AbsVec& u, const AbsVec& v);
Integer rel_punct_pairing(const SurfaceSpec& spec, const RelVec& x, const PunctVec& c);
ZeroChain boundary(const SurfaceSpec& spec, const RelVec& x);
AbsVec project_punct(const SurfaceSpec& spec, const PunctVec& c);

/// Coefficient of [p_i] in the boundary of x, i in 1..n; equals <x, d_i>.
Integer point_coefficient(const SurfaceSpec& spec, const RelVec& x, int point);

}  // namespace framedhom
