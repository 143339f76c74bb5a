#include <framedhom/framing.hpp>

namespace framedhom {

Framing::Framing(SurfaceSpec spec, IntVector wind_x, IntVector wind_y, std::optional<IntVector> arc2)
    : spec_(std::move(spec)), wind_x_(std::move(wind_x)), wind_y_(std::move(wind_y)), arc2_(std::move(arc2)) {
  if (wind_x_.size() != spec_.genus() || wind_y_.size() != spec_.genus())
    throw ValidationError("winding vectors: wind_x and wind_y must have length g");
  if (arc2_) {
    if (arc2_->size() != spec_.arc_count()) throw ValidationError("arc2: length must be n - 1");
    for (Eigen::Index i = 0; i < arc2_->size(); ++i)
      if (mod2((*arc2_)(i)) == 0) throw ValidationError("arc2: doubled arc windings must be odd");
  }
}

Framing Framing::zero(const SurfaceSpec& spec) {
  return Framing(spec, IntVector::Zero(spec.genus()), IntVector::Zero(spec.genus()));
}

bool operator==(const Framing& a, const Framing& b) {
  if (!(a.spec_ == b.spec_) || a.wind_x_ != b.wind_x_ || a.wind_y_ != b.wind_y_) return false;
  if (a.arc2_.has_value() != b.arc2_.has_value()) return false;
  return !a.arc2_ || *a.arc2_ == *b.arc2_;
}

QForm QForm::from_xy(const Mod2Vector& qx, const Mod2Vector& qy) {
  QForm q{Mod2Vector(2 * qx.size())};
  for (Eigen::Index i = 0; i < qx.size(); ++i) {
    q.values(2 * i) = qx(i) & 1;
    q.values(2 * i + 1) = qy(i) & 1;
  }
  return q;
}

int QForm::evaluate(const Mod2Vector& v) const {
  int s = values.dot(v);
  for (Eigen::Index i = 0; i + 1 < v.size(); i += 2) s += v(i) * v(i + 1);
  return s & 1;
}

int arf(const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  Integer total = 0;
  for (int i = 0; i < spec.genus(); ++i) total += (f.wind_x()(i) + 1) * (f.wind_y()(i) + 1);
  if (spec.points() >= 2) {
    if (!f.has_arcs()) throw MissingArcData("arc2: Arf invariant needs arc windings when n >= 2");
    // (phi(a_i) + 1/2)(phi(Delta_i) + 1) = ((arc2_i + 1) / 2) * (-kappa_i)
    for (int p = 2; p <= spec.points(); ++p)
      total += ((f.arc_winding2(p) + 1) / 2) * Integer(-spec.kappa_at(p));
  }
  return mod2(total);
}

QVector q_vector(const Framing& f) {
  Mod2Vector bits(f.spec().abs_dim());
  for (Eigen::Index k = 0; k < bits.size(); ++k) bits(k) = mod2(f.curve_winding(k));
  return {bits};
}

QForm winding_form(const Framing& f) {
  Mod2Vector values(f.spec().abs_dim());
  for (Eigen::Index k = 0; k < values.size(); ++k) values(k) = mod2(f.curve_winding(k) + 1);
  return {values};
}

QForm spin_form(const Framing& f) {
  if (!f.spec().all_kappa_even())
    throw SomeKappaOdd("some kappa_i is odd: the framing induces no classical spin structure");
  return winding_form(f);
}

int parity_P(const Framing& f, const AbsVec& v) {
  if (v.size() != f.spec().abs_dim()) throw SpecMismatch("dimension mismatch in parity_P");
  return winding_form(f).evaluate(reduce_mod2_vec(v.coords)) ^ 1;
}

int arf_of_form(const QForm& q) {
  int s = 0;
  for (Eigen::Index i = 0; i + 1 < q.values.size(); i += 2) s += q.values(i) * q.values(i + 1);
  return s & 1;
}

}  // namespace framedhom
