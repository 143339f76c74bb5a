#pragma once

#include <framedhom/mod2.hpp>

#include <optional>

namespace framedhom {

/// A framing, recorded by its winding numbers on the distinguished basis.
/// Arc windings are half-integers and are stored doubled (always odd).
/// Puncture signatures are never stored: they are -1 - kappa_i.
class Framing {
 public:
  Framing(SurfaceSpec spec, IntVector wind_x, IntVector wind_y, std::optional<IntVector> arc2 = std::nullopt);

  /// All windings zero and no arc data.
  static Framing zero(const SurfaceSpec& spec);

  const SurfaceSpec& spec() const { return spec_; }
  const IntVector& wind_x() const { return wind_x_; }
  const IntVector& wind_y() const { return wind_y_; }
  const std::optional<IntVector>& arc2() const { return arc2_; }
  bool has_arcs() const { return arc2_.has_value(); }

  /// Winding of the basis curve at interleaved coordinate k.
  const Integer& curve_winding(Eigen::Index k) const { return k % 2 == 0 ? wind_x_(k / 2) : wind_y_(k / 2); }
  /// 2 * phi(a_i) for i in 2..n.
  const Integer& arc_winding2(int point) const { return (*arc2_)(point - 2); }

  friend bool operator==(const Framing& a, const Framing& b);

 private:
  SurfaceSpec spec_;
  IntVector wind_x_;
  IntVector wind_y_;
  std::optional<IntVector> arc2_;
};

/// Quadratic refinement q of the mod-2 intersection form, given by its
/// values on the basis (interleaved x_1, y_1, ...). Any assignment is valid.
struct QForm {
  Mod2Vector values;

  static QForm from_xy(const Mod2Vector& qx, const Mod2Vector& qy);
  int genus() const { return static_cast<int>(values.size() / 2); }
  int qx(int handle) const { return values(2 * (handle - 1)); }
  int qy(int handle) const { return values(2 * (handle - 1) + 1); }
  /// q(v) = sum v_b q(b) + sum_i v_{x_i} v_{y_i}  (mod 2).
  int evaluate(const Mod2Vector& v) const;

  friend bool operator==(const QForm& a, const QForm& b) { return a.values == b.values; }
};

struct QVector {
  Mod2Vector bits;
  friend bool operator==(const QVector& a, const QVector& b) { return a.bits == b.bits; }
};

/// Generalized Arf invariant of a relative framing. Needs arc data if n >= 2.
int arf(const Framing& f);
QVector q_vector(const Framing& f);
/// The form with q(b) = phi(b) + 1 on basis curves, for any kappa.
QForm winding_form(const Framing& f);
/// Classical spin structure q(x) = phi(x) + 1; throws SomeKappaOdd.
QForm spin_form(const Framing& f);
/// Parity of phi on a simple representative of v disjoint from arcs and
/// punctures: the quadratic extension of the basis parities, so that
/// P(u + w) = P(u) + P(w) + 1 + <u, w>.
int parity_P(const Framing& f, const AbsVec& v);
int arf_of_form(const QForm& q);

}  // namespace framedhom
