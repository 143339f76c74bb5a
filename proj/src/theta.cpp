#include <framedhom/theta.hpp>

namespace framedhom {

Mod2Vector v_kappa_bar(const SurfaceSpec& spec) {
  Mod2Vector v(spec.arc_count());
  for (int p = 2; p <= spec.points(); ++p) v(p - 2) = mod2(spec.kappa_at(p));
  return v;
}

CohomClass v_kappa_star(const IntMatrix& m, const SurfaceSpec& spec) {
  return v_kappa_star_mod2(reduce_mod2(m), spec);
}

CohomClass v_kappa_star_mod2(const Mod2Matrix& m, const SurfaceSpec& spec) {
  if (m.rows() != spec.abs_dim() || m.cols() != spec.arc_count())
    throw SpecMismatch("v_kappa_star: M must be 2g x (n - 1)");
  if (spec.points() == 1) return CohomClass::zero(spec.genus());
  const Mod2Vector image = mod2_apply(m, v_kappa_bar(spec));
  return CohomClass::pairing_with(AbsVec(to_integer(image)));
}

CohomClass q_hat(const QForm& q, const Mod2Matrix& s) {
  if (s.rows() != q.values.size() || !is_symplectic_mod2(s)) throw NotSymplectic("q_hat: matrix is not symplectic mod 2");
  CohomClass out = CohomClass::zero(q.genus());
  for (Eigen::Index k = 0; k < s.cols(); ++k) {
    const Mod2Vector e = Mod2Vector::Unit(s.cols(), k);
    out.bits(k) = q.evaluate(s.col(k)) ^ q.evaluate(e);
  }
  return out;
}

CohomClass transvection_theta(const Framing& f, const AbsVec& v, const Integer& power) {
  if (mod2(power) == 0 || parity_P(f, v) == 0) return CohomClass::zero(f.spec().genus());
  return CohomClass::pairing_with(v);
}

CohomClass theta(const PAutElem& a, const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  if (a.genus() != spec.genus() || a.points() != spec.points())
    throw SpecMismatch("theta: element and framing live on different surfaces");
  const auto factors = factor_sp(a.symplectic());
  CohomClass acc = CohomClass::zero(spec.genus());
  Mod2Matrix right = Mod2Matrix::Identity(spec.abs_dim(), spec.abs_dim());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    acc = acc + pullback_h1(right, transvection_theta(f, it->v, it->power));
    if (mod2(it->power) == 1) right = mod2_product(transvection_mod2(reduce_mod2_vec(it->v.coords)), right);
  }
  // The RelAut factor sits leftmost; right is now S mod 2.
  return acc + pullback_h1(right, v_kappa_star(a.relative(), spec));
}

CohomClass theta_mod2(const Mod2Matrix& s, const Mod2Matrix& m, const Framing& f) {
  return pullback_h1(s, v_kappa_star_mod2(m, f.spec())) + q_hat(winding_form(f), s);
}

}  // namespace framedhom
