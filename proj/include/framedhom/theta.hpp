#pragma once

#include <framedhom/framing.hpp>
#include <framedhom/paut.hpp>

namespace framedhom {

/// (kappa_2, ..., kappa_n) mod 2, the reduced-basis coordinates of v_kappa.
Mod2Vector v_kappa_bar(const SurfaceSpec& spec);

/// x -> <M v_kappa, x> mod 2. Zero when n = 1 or all kappa_i are even.
CohomClass v_kappa_star(const IntMatrix& m, const SurfaceSpec& spec);
CohomClass v_kappa_star_mod2(const Mod2Matrix& m, const SurfaceSpec& spec);

/// x -> q(S x) - q(x). Throws NotSymplectic unless S preserves the mod-2 form.
CohomClass q_hat(const QForm& q, const Mod2Matrix& s);

/// Theta of the single transvection T_v^k: x -> k <x, v> P(v).
CohomClass transvection_theta(const Framing& f, const AbsVec& v, const Integer& power);

/// Theta_phi(A), assembled along A = (I, M) * T_{v_1}^{k_1} ... T_{v_m}^{k_m}
/// with factors from factor_sp.
CohomClass theta(const PAutElem& a, const Framing& f);

/// Theta on mod-2 data: pullback(S, v_kappa_star(M)) + q_hat(winding form, S).
/// Theta factors through reduction mod 2, so this agrees with theta().
CohomClass theta_mod2(const Mod2Matrix& s, const Mod2Matrix& m, const Framing& f);

}  // namespace framedhom
