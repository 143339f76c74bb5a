#pragma once

#include <framedhom/lattice.hpp>

namespace framedhom {

/// An element of H^1(Sigma_g; Z/2), stored as its values on the basis
/// x_1, y_1, ..., x_g, y_g. Evaluation on a mod-2 class x is bits . x.
struct CohomClass {
  Mod2Vector bits;

  static CohomClass zero(int genus) { return {Mod2Vector::Zero(2 * genus)}; }
  /// The functional x -> <u, x> mod 2.
  static CohomClass pairing_with(const AbsVec& u);

  int genus() const { return static_cast<int>(bits.size() / 2); }
  int evaluate(const Mod2Vector& x) const;
  int evaluate(const AbsVec& x) const;
  bool is_zero() const { return bits.isZero(); }

  friend CohomClass operator+(const CohomClass& a, const CohomClass& b);
  friend bool operator==(const CohomClass& a, const CohomClass& b) {
    return a.bits.size() == b.bits.size() && a.bits == b.bits;
  }
};

Mod2Matrix mod2_gram(int genus);
int mod2_pairing(const Mod2Vector& u, const Mod2Vector& v);
Mod2Matrix mod2_product(const Mod2Matrix& a, const Mod2Matrix& b);
Mod2Vector mod2_apply(const Mod2Matrix& a, const Mod2Vector& x);
bool is_symplectic_mod2(const Mod2Matrix& s);

}  // namespace framedhom
