#include <framedhom/verify.hpp>

#include <framedhom/basis_moves.hpp>
#include <framedhom/bruteforce.hpp>
#include <framedhom/kernel.hpp>
#include <framedhom/sampling.hpp>
#include <framedhom/serialize.hpp>
#include <framedhom/theta.hpp>
#include <framedhom/word_grammar.hpp>

#include <functional>
#include <map>

namespace framedhom {

namespace {

class Property {
 public:
  explicit Property(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = describe();
    }
  }
  void note(std::string detail) {
    if (result_.passed) result_.detail = std::move(detail);
  }
  PropertyResult done() const { return result_; }

 private:
  PropertyResult result_;
};

std::string show(const Framing& f) { return framing_to_json(f).dump(); }
std::string show(const Word& w) { return "[" + format_word(w) + "]"; }
std::string show(const PAutElem& a) { return paut_to_json(a).dump(); }

int points_for(int trial) { return 1 + trial % 3; }

SuiteReport cocycle_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property cocycle("delta(w1 w2) = w2* delta(w1) + delta(w2)");
  Property geometric("delta(w)(b) = phi(w(b)) - phi(b) mod 2 on basis curves");
  for (int t = 0; t < o.trials; ++t) {
    const Framing f = random_framing(rng, random_spec(rng, o.genus, points_for(t)), false);
    const Word w1 = random_word(rng, f, static_cast<int>(uniform_int(rng, 0, 6)));
    const Word w2 = random_word(rng, f, static_cast<int>(uniform_int(rng, 0, 6)));
    const CohomClass lhs = delta_word(w1 + w2, f);
    const CohomClass rhs = pullback_h1(word_action_mod2(w2), delta_word(w1, f)) + delta_word(w2, f);
    cocycle.check(lhs == rhs, [&] { return show(f) + " w1=" + show(w1) + " w2=" + show(w2); });
    const CohomClass d = delta_word(w1, f);
    for (Eigen::Index k = 0; k < f.spec().abs_dim(); ++k) {
      const TrackedClass start = tracked_curve(f, k);
      const TrackedClass image = push_forward(w1, start);
      geometric.check(mod2((image.wind2 - start.wind2) / 2) == d.bits(k),
                      [&] { return show(f) + " w=" + show(w1) + " basis " + std::to_string(k); });
    }
  }
  return {"cocycle", {cocycle.done(), geometric.done()}};
}

SuiteReport well_defined_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property agree("theta(word_to_paut(w)) = delta(w)");
  Property relators("delta(w . refactor(w)^-1) = 0 for identity-acting words");
  Property crossed("theta(AB) = B* theta(A) + theta(B)");
  Property mod2_only("theta depends only on S, M mod 2 and winding parities");
  for (int t = 0; t < o.trials; ++t) {
    const Framing f = random_framing(rng, random_spec(rng, o.genus, points_for(t)), false);
    const Word w = random_word(rng, f, static_cast<int>(uniform_int(rng, 0, 8)));
    const PAutElem a = word_to_paut(w);
    agree.check(theta(a, f) == delta_word(w, f), [&] { return show(f) + " w=" + show(w); });

    const Word relator = w + inverse(paut_to_word(a, f));
    relators.check(word_to_paut(relator).is_identity() && delta_word(relator, f).is_zero(),
                   [&] { return show(f) + " w=" + show(relator); });

    const PAutElem b = random_paut(rng, f.spec());
    crossed.check(theta(compose(a, b), f) == pullback_h1(b.symplectic_mod2(), theta(a, f)) + theta(b, f),
                  [&] { return show(f) + " A=" + show(a) + " B=" + show(b); });

    // Shift S by 2 (S' = S T_v^2 keeps it symplectic), M by 2, windings by 2.
    const AbsVec v = random_primitive(rng, o.genus, 2);
    const PAutElem shifted(b.genus(), b.points(), b.symplectic() * transvection(v, 2),
                           b.relative() + 2 * random_relative(rng, f.spec(), 2));
    IntVector wx = f.wind_x(), wy = f.wind_y();
    wx(0) += 2;
    wy(wy.size() - 1) -= 2;
    const Framing g(f.spec(), wx, wy);
    mod2_only.check(theta(shifted, g) == theta(b, f) && theta(b, f) == theta_mod2(b.symplectic_mod2(), reduce_mod2(b.relative()), f),
                    [&] { return show(f) + " B=" + show(b); });
  }
  return {"well-defined", {agree.done(), relators.done(), crossed.done(), mod2_only.done()}};
}

SuiteReport stabilizer_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property fixes("stabilizing words fix the framing");
  Property kernel("stabilizing words lie in ker(theta)");
  for (int t = 0; t < o.trials; ++t) {
    const SurfaceSpec spec = random_spec(rng, o.genus, points_for(t));
    const Framing f = random_framing(rng, spec, spec.points() >= 2);
    const Word w = random_stabilizing_word(rng, f, static_cast<int>(uniform_int(rng, 1, 6)));
    fixes.check(act_framing(w, f) == f, [&] { return show(f) + " w=" + show(w); });
    kernel.check(kernel_test(word_to_paut(w), f), [&] { return show(f) + " w=" + show(w); });
  }
  return {"stabilizer", {fixes.done(), kernel.done()}};
}

SuiteReport surjectivity_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property odd("odd regime: every primitive v lifts into the kernel");
  Property even("even regime: v lifts iff q_hat(T_v) = 0");
  Property subgroup("kernel is closed under compose and invert");
  for (int t = 0; t < o.trials; ++t) {
    const int n = 2 + t % 2;
    SurfaceSpec odd_spec = random_spec(rng, o.genus, n);
    while (odd_spec.all_kappa_even()) odd_spec = random_spec(rng, o.genus, n);
    const Framing fo = random_framing(rng, odd_spec, false);
    const AbsVec v = random_primitive(rng, o.genus);
    const AbsVec u = random_primitive(rng, o.genus);
    const PAutElem lv = lift_transvection(v, fo);
    const PAutElem lu = lift_transvection(u, fo);
    odd.check(lv.symplectic() == transvection(v, 1) && kernel_test(lv, fo),
              [&] { return show(fo) + " v=" + format_vector(odd_spec, v.coords, 'd'); });
    subgroup.check(kernel_test(compose(lv, lu), fo) && kernel_test(invert(lv), fo),
                   [&] { return show(fo) + " lifts " + show(lv) + " " + show(lu); });

    const Framing fe = random_framing(rng, random_even_spec(rng, o.genus, points_for(t)), false);
    const bool preserves = q_hat(spin_form(fe), reduce_mod2(transvection(v, 1))).is_zero();
    bool lifted = false, sound = true;
    try {
      const PAutElem l = lift_transvection(v, fe);
      lifted = true;
      sound = kernel_test(l, fe) && l.symplectic() == transvection(v, 1);
    } catch (const NoLiftExists&) {
    }
    even.check(lifted == preserves && sound, [&] { return show(fe) + " v=" + format_vector(fe.spec(), v.coords, 'd'); });
  }
  return {"surjectivity", {odd.done(), even.done(), subgroup.done()}};
}

SuiteReport census_suite(const VerifyOptions& o) {
  Property order("|Sp(2g, Z/2)| matches the order formula");
  Property counts("form counts are 2^(g-1)(2^g + 1) even, 2^(g-1)(2^g - 1) odd");
  Property stabilizers("stabilizer order = |Sp| / |Arf class| for every form");
  Property crossed("q_hat is a crossed homomorphism on all pairs");
  const Mod2Group& group = sp2_group(o.genus);
  order.check(group.size() == sp2_order_formula(o.genus), [&] { return "enumerated " + std::to_string(group.size()); });
  order.note("|Sp| = " + std::to_string(group.size()));
  const FormCensus census = qform_census(o.genus);
  const std::uint64_t half = std::uint64_t{1} << (o.genus - 1);
  const std::uint64_t even_expected = half * ((std::uint64_t{1} << o.genus) + 1);
  const std::uint64_t odd_expected = half * ((std::uint64_t{1} << o.genus) - 1);
  counts.check(census.even_count == even_expected && census.odd_count == odd_expected, [&] {
    return "counted (" + std::to_string(census.even_count) + ", " + std::to_string(census.odd_count) + ")";
  });
  counts.note("(" + std::to_string(census.even_count) + ", " + std::to_string(census.odd_count) + ")");
  std::map<int, std::uint64_t> by_arf;
  for (std::size_t q = 0; q < census.stabilizer_orders.size(); ++q) {
    const int a = arf_of_form(QForm{unpack_vector(static_cast<PackedVector>(q), o.genus)});
    const std::uint64_t cls = a == 0 ? census.even_count : census.odd_count;
    stabilizers.check(census.stabilizer_orders[q] * cls == group.size(),
                      [&] { return "form " + std::to_string(q) + ": " + std::to_string(census.stabilizer_orders[q]); });
    by_arf[a] = census.stabilizer_orders[q];
  }
  stabilizers.note("(" + std::to_string(by_arf[0]) + ", " + std::to_string(by_arf[1]) + ")");
  if (o.genus == 2) {
    crossed.check(verify_qhat_crossed(2), [] { return "identity fails for some pair"; });
    crossed.note("720^2 pairs x 16 forms");
  } else {
    crossed.note("skipped: exhaustive pair sweep runs for g = 2 only");
  }
  return {"census", {order.done(), counts.done(), stabilizers.done(), crossed.done()}};
}

SuiteReport kernel_order_suite(const VerifyOptions& o) {
  Property agree("enumerated kernel order = structure formula");
  std::vector<std::pair<std::vector<long>, long>> cases;  // (kappa, wind_x(1))
  if (o.genus == 2) {
    cases = {{{2}, 0}, {{2}, 1}, {{1, 1}, 0}, {{1, 1}, 1}, {{0, 2}, 0}, {{2, 0, 0}, 1}, {{1, 1, 0}, 0}, {{3, -1}, 0}};
  } else {
    cases = {{{4}, 0}, {{4}, 1}, {{2, 2}, 0}, {{3, 1}, 0}, {{1, 1, 2}, 0}};
  }
  std::string summary;
  for (const auto& [kappa, wx1] : cases) {
    IntVector wx = IntVector::Zero(o.genus);
    wx(0) = wx1;
    const Framing f(SurfaceSpec(o.genus, kappa), wx, IntVector::Zero(o.genus));
    const std::uint64_t direct = kernel_order_mod2(f), formula = kernel_order_formula(f);
    agree.check(direct == formula, [&] {
      return show(f) + ": enumerated " + std::to_string(direct) + ", formula " + std::to_string(formula);
    });
    std::string k;
    for (long e : kappa) k += (k.empty() ? "" : ",") + std::to_string(e);
    summary += (summary.empty() ? "" : " ") + std::string("(") + k + ")/" + std::to_string(wx1) + "->" + std::to_string(direct);
  }
  agree.note(summary);
  return {"kernel-order", {agree.done()}};
}

SuiteReport even_closed_form_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property closed("all kappa even: theta(A) = q_hat(spin form, S mod 2)");
  for (int t = 0; t < o.trials; ++t) {
    const Framing f = random_framing(rng, random_even_spec(rng, o.genus, points_for(t)), false);
    const PAutElem a = random_paut(rng, f.spec());
    closed.check(theta(a, f) == q_hat(spin_form(f), a.symplectic_mod2()), [&] { return show(f) + " A=" + show(a); });
  }
  return {"even-closed-form", {closed.done()}};
}

SuiteReport relaut_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property restriction("theta((I, M)) = v_kappa_star(M)");
  Property point_push("point-push words: delta = v_kappa_star of their M");
  for (int t = 0; t < o.trials; ++t) {
    const SurfaceSpec spec = random_spec(rng, o.genus, 1 + t % 4);
    const Framing f = random_framing(rng, spec, false);
    const IntMatrix m = random_relative(rng, spec);
    const PAutElem a(spec.genus(), spec.points(), IntMatrix::Identity(spec.abs_dim(), spec.abs_dim()), m);
    restriction.check(theta(a, f) == v_kappa_star(m, spec), [&] { return show(f) + " A=" + show(a); });
    std::vector<Generator> letters;
    for (int i = 0; i < 3; ++i)
      letters.push_back(PointPush{static_cast<int>(uniform_int(rng, 1, spec.points())), random_primitive(rng, spec.genus(), 2)});
    const Word w(spec, letters);
    point_push.check(delta_word(w, f) == v_kappa_star(word_to_paut(w).relative(), spec),
                     [&] { return show(f) + " w=" + show(w); });
  }
  return {"relaut", {restriction.done(), point_push.done()}};
}

SuiteReport moves_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property arf_fixed("every move preserves arf and the q-vector");
  Property roundtrip("match_framings reproduces the target");
  Property bound("move count <= sum |winding gap| / 2 + 2n");
  Property twists("arc twists agree with act_framing by the twist letter");
  for (int t = 0; t < o.trials; ++t) {
    const SurfaceSpec spec = random_spec(rng, o.genus, 1 + t % 4);
    const Framing f = random_framing(rng, spec, spec.points() >= 2);
    Framing h = f;
    const int count = static_cast<int>(uniform_int(rng, 0, 8));
    for (int i = 0; i < count; ++i) {
      const Move m = random_move(rng, h);
      const Framing next = apply_move(h, m);
      arf_fixed.check(arf(next) == arf(h) && q_vector(next) == q_vector(h),
                      [&] { return show(h) + " move " + move_to_json(m).dump(); });

      if (const auto* ap = std::get_if<ArcParityTwist>(&m)) {
        const PunctVec c = -(puncture_class(spec, ap->j1) + puncture_class(spec, ap->j2));
        const Word w(spec, {Twist{c, 1, spec.kappa_at(ap->j1) + spec.kappa_at(ap->j2) + 1}});
        twists.check(act_framing(w, h) == next && word_to_paut(w).is_identity(),
                     [&] { return show(h) + " move " + move_to_json(m).dump(); });
      } else if (const auto* bt = std::get_if<BoundaryTwist>(&m)) {
        const Word w(spec, {puncture_twist(spec, bt->j, -1)});
        twists.check(act_framing(w, h) == next && word_to_paut(w).is_identity(),
                     [&] { return show(h) + " move " + move_to_json(m).dump(); });
      }
      h = next;
    }
    const std::vector<Move> plan = match_framings(f, h);
    roundtrip.check(apply_moves(f, plan) == h, [&] { return show(f) + " -> " + show(h); });

    // The gap is measured after the parity repairs, which shift arc windings.
    Framing repaired = f;
    std::size_t repairs = 0;
    for (const auto& m : plan)
      if (!std::holds_alternative<ConnectSum>(m)) {
        repaired = apply_move(repaired, m);
        ++repairs;
      }
    Integer gap = 0;
    for (Eigen::Index k = 0; k < spec.abs_dim(); ++k) gap += abs(h.curve_winding(k) - repaired.curve_winding(k));
    for (int p = 2; p <= spec.points(); ++p) gap += abs(h.arc_winding2(p) - repaired.arc_winding2(p)) / 2;
    bound.check(plan.size() <= gap / 2 + 2 * spec.points() && repairs <= static_cast<std::size_t>(spec.points()),
                [&] { return show(f) + " -> " + show(h) + ": " + std::to_string(plan.size()) + " moves"; });
  }
  return {"moves", {arf_fixed.done(), roundtrip.done(), bound.done(), twists.done()}};
}

SuiteReport parity_oracle_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property oracle("winding of w(b) mod 2 = P(class of w(b))");
  Property quadratic("P(u + w) = P(u) + P(w) + 1 + <u, w>");
  Property spin("all kappa even: P(v) + 1 = q(v)");
  for (int t = 0; t < o.trials; ++t) {
    const Framing f = random_framing(rng, random_spec(rng, o.genus, points_for(t)), false);
    const Word w = random_basis_word(rng, f, static_cast<int>(uniform_int(rng, 1, 10)));
    const TrackedClass image = push_forward(w, tracked_curve(f, uniform_int(rng, 0, f.spec().abs_dim() - 1)));
    oracle.check(mod2(image.wind2 / 2) == parity_P(f, absolute_part(f.spec(), image.cls)),
                 [&] { return show(f) + " w=" + show(w); });
    const AbsVec u = random_primitive(rng, o.genus, 4), v = random_primitive(rng, o.genus, 4);
    quadratic.check(parity_P(f, u + v) == (parity_P(f, u) ^ parity_P(f, v) ^ 1 ^ mod2(symplectic_pairing(u, v))),
                    [&] { return show(f); });
    const Framing fe = random_framing(rng, random_even_spec(rng, o.genus, points_for(t)), false);
    spin.check((parity_P(fe, u) ^ 1) == spin_form(fe).evaluate(reduce_mod2_vec(u.coords)), [&] { return show(fe); });
  }
  return {"parity-oracle", {oracle.done(), quadratic.done(), spin.done()}};
}

SuiteReport factor_sp_suite(const VerifyOptions& o) {
  Rng rng(o.seed);
  Property roundtrip("product of factor_sp factors = S");
  Property primitive("every factor vector is primitive");
  for (int t = 0; t < o.trials; ++t) {
    const IntMatrix s = random_symplectic(rng, o.genus, static_cast<int>(uniform_int(rng, 0, 20)));
    const auto factors = factor_sp(s);
    roundtrip.check(product_of(factors, o.genus) == s, [&] { return paut_to_json(PAutElem(o.genus, 1, s, IntMatrix(2 * o.genus, 0))).dump(); });
    bool ok = true;
    for (const auto& f : factors) ok = ok && is_primitive(f.v.coords);
    primitive.check(ok, [&] { return paut_to_json(PAutElem(o.genus, 1, s, IntMatrix(2 * o.genus, 0))).dump(); });
  }
  return {"factor-sp", {roundtrip.done(), primitive.done()}};
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"cocycle", cocycle_suite},
      {"well-defined", well_defined_suite},
      {"stabilizer", stabilizer_suite},
      {"surjectivity", surjectivity_suite},
      {"census", census_suite},
      {"kernel-order", kernel_order_suite},
      {"even-closed-form", even_closed_form_suite},
      {"relaut", relaut_suite},
      {"moves", moves_suite},
      {"parity-oracle", parity_oracle_suite},
      {"factor-sp", factor_sp_suite},
  };
  return suites;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& p : properties)
    if (!p.passed) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& options) {
  if (!is_suite(name)) throw ValidationError("verify: unknown suite \"" + name + "\"");
  if (options.genus < 2) throw ValidationError("verify: --g must be at least 2");
  const bool exhaustive = name == "census" || name == "kernel-order";
  if (exhaustive && options.genus > 3) throw ValidationError("verify: exhaustive suites support g = 2 and g = 3");
  std::vector<SuiteReport> out;
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && suite != name) continue;
    if (name == "all" && options.genus > 3 && (suite == "census" || suite == "kernel-order")) continue;
    out.push_back(fn(options));
  }
  return out;
}

}  // namespace framedhom
