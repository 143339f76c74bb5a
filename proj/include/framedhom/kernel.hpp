#pragma once

#include <framedhom/framing.hpp>
#include <framedhom/paut.hpp>

#include <cstdint>
#include <optional>
#include <variant>

namespace framedhom {

bool kernel_test(const PAutElem& a, const Framing& f);

/// A kernel element whose symplectic part is T_v. When P(v) = 1 the
/// correction is a single RelAut column e_i -> v at the lowest i >= 2 with
/// kappa_i odd. Throws NoLiftExists when P(v) = 1 and every kappa_i is even,
/// ValidationError when v is not primitive.
PAutElem lift_transvection(const AbsVec& v, const Framing& f);

struct EvenRegime {
  QForm q;
  int arf;
};

struct OddRegime {
  Mod2Vector v_bar;
};

struct StructureReport {
  std::variant<EvenRegime, OddRegime> regime;
  long r;  // gcd of the kappa_i
  std::optional<std::uint64_t> mod2_kernel_order;
};

/// The mod-2 kernel order is filled in for g <= 3 and n <= 3.
StructureReport structure_report(const Framing& f);

}  // namespace framedhom
