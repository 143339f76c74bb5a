#include <framedhom/kernel.hpp>

#include <framedhom/bruteforce.hpp>
#include <framedhom/theta.hpp>

namespace framedhom {

bool kernel_test(const PAutElem& a, const Framing& f) { return theta(a, f).is_zero(); }

PAutElem lift_transvection(const AbsVec& v, const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  if (v.size() != spec.abs_dim()) throw SpecMismatch("lift_transvection: vector has wrong dimension");
  if (!is_primitive(v.coords)) throw ValidationError("lift_transvection: v must be primitive");
  const int g = spec.genus(), n = spec.points();
  const PAutElem twist(g, n, transvection(v, 1), IntMatrix::Zero(2 * g, n - 1));
  if (parity_P(f, v) == 0) return twist;

  // Some kappa_i odd implies an odd one among i >= 2: the odd count is even.
  int odd = 0;
  for (int p = 2; p <= n && odd == 0; ++p)
    if (mod2(spec.kappa_at(p)) == 1) odd = p;
  if (odd == 0) throw NoLiftExists("T_v does not preserve the spin structure and every kappa_i is even");

  IntMatrix m = IntMatrix::Zero(2 * g, n - 1);
  m.col(odd - 2) = v.coords;
  PAutElem lift = compose(PAutElem(g, n, IntMatrix::Identity(2 * g, 2 * g), std::move(m)), twist);
  if (!kernel_test(lift, f)) throw Error("lift_transvection: corrected lift left the kernel");
  return lift;
}

StructureReport structure_report(const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  StructureReport report{OddRegime{v_kappa_bar(spec)}, spec.kappa_gcd(), std::nullopt};
  if (spec.all_kappa_even()) {
    QForm q = spin_form(f);
    const int a = arf_of_form(q);
    report.regime = EvenRegime{std::move(q), a};
  }
  if (spec.genus() <= 3 && spec.points() <= 3) report.mod2_kernel_order = kernel_order_mod2(f);
  return report;
}

}  // namespace framedhom
