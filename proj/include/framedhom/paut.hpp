#pragma once

#include <framedhom/mod2.hpp>

#include <vector>

namespace framedhom {

/// Pure automorphism of H_1(Sigma_g, Z; Z): the block matrix
///   [ S  M ]
///   [ 0  I ]
/// in relative coordinates, with S symplectic and M in Hom(H~_0(Z), H_1).
class PAutElem {
 public:
  /// Throws NotSymplectic or ValidationError on a malformed block.
  PAutElem(int genus, int points, IntMatrix s, IntMatrix m);

  static PAutElem identity(int genus, int points);
  /// From the full (2g + n - 1)-square matrix; rejects impure matrices.
  static PAutElem from_block(int genus, int points, const IntMatrix& full);

  int genus() const { return genus_; }
  int points() const { return points_; }
  const IntMatrix& symplectic() const { return s_; }
  const IntMatrix& relative() const { return m_; }

  IntMatrix block() const;
  RelVec apply(const RelVec& x) const;
  Mod2Matrix symplectic_mod2() const { return reduce_mod2(s_); }
  bool is_identity() const;

  friend bool operator==(const PAutElem& a, const PAutElem& b);

 private:
  int genus_;
  int points_;
  IntMatrix s_;
  IntMatrix m_;
};

PAutElem compose(const PAutElem& a, const PAutElem& b);
PAutElem invert(const PAutElem& a);

/// A = rel * sp with rel = (I, M_A) and sp = (S_A, 0).
struct Decomposition {
  PAutElem rel;
  PAutElem sp;
};
Decomposition decompose(const PAutElem& a);

bool is_symplectic(const IntMatrix& s);
IntMatrix symplectic_inverse(const IntMatrix& s);

/// x -> x + k <x, v> v.
IntMatrix transvection(const AbsVec& v, const Integer& power);
/// The mod-2 transvection x -> x + <x, v> v.
Mod2Matrix transvection_mod2(const Mod2Vector& v);

struct TransvectionFactor {
  AbsVec v;  // primitive
  Integer power;
};

/// Writes S as the ordered product T_{v_1}^{k_1} ... T_{v_m}^{k_m}.
/// Elimination runs handle by handle: Euclid inside each handle, then
/// across handles with the smallest nonzero pivot (lowest index on ties),
/// then clearing the partner column. Throws NotSymplectic.
std::vector<TransvectionFactor> factor_sp(const IntMatrix& s);
IntMatrix product_of(const std::vector<TransvectionFactor>& factors, int genus);

/// (pullback theta)(x) = theta(S x).
CohomClass pullback_h1(const Mod2Matrix& s, const CohomClass& theta);

}  // namespace framedhom
