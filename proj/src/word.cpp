#include <framedhom/word.hpp>

namespace framedhom {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate_letter(const SurfaceSpec& spec, const Generator& letter) {
  std::visit(overloaded{
                 [&](const Twist& t) {
                   if (t.c.size() != spec.rel_dim()) throw SpecMismatch("twist class has wrong dimension");
                   if (t.power == 0) throw ValidationError("twist: power must be nonzero");
                   if (!is_primitive(t.c.coords)) throw ValidationError("twist: curve class must be primitive");
                 },
                 [&](const PointPush& p) {
                   if (p.u.size() != spec.abs_dim()) throw SpecMismatch("point-push loop has wrong dimension");
                   if (p.point < 1 || p.point > spec.points())
                     throw ValidationError("point-push: point index must lie in 1..n");
                   if (!is_primitive(p.u.coords)) throw ValidationError("point-push: loop class must be primitive");
                 },
             },
             letter);
}

}  // namespace

Word::Word(SurfaceSpec spec, std::vector<Generator> letters) : spec_(std::move(spec)), letters_(std::move(letters)) {
  for (const auto& l : letters_) validate_letter(spec_, l);
}

bool Word::has_point_push() const {
  for (const auto& l : letters_)
    if (std::holds_alternative<PointPush>(l)) return true;
  return false;
}

Word operator+(const Word& a, const Word& b) {
  if (!(a.spec_ == b.spec_)) throw SpecMismatch("concatenating words on different surfaces");
  Word out = a;
  out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
  return out;
}

Generator inverse(const Generator& letter) {
  return std::visit(overloaded{
                        [](const Twist& t) -> Generator { return Twist{t.c, -t.power, t.w}; },
                        [](const PointPush& p) -> Generator { return PointPush{p.point, -p.u}; },
                    },
                    letter);
}

Word inverse(const Word& word) {
  std::vector<Generator> letters;
  letters.reserve(word.size());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) letters.push_back(inverse(*it));
  return Word(word.spec(), std::move(letters));
}

Twist curve_twist(const Framing& f, Eigen::Index k, const Integer& power) {
  const SurfaceSpec& spec = f.spec();
  return Twist{embed_punct(spec, abs_basis(spec, k)), power, f.curve_winding(k)};
}

Twist puncture_twist(const SurfaceSpec& spec, int point, const Integer& power) {
  return Twist{puncture_class(spec, point), power, Integer(spec.signature(point))};
}

int expected_twist_parity(const Framing& f, const PunctVec& c) {
  const SurfaceSpec& spec = f.spec();
  int parity = parity_P(f, project_punct(spec, c));
  for (int j = 2; j <= spec.points(); ++j) parity ^= mod2(c[spec.arc_index(j)]) & mod2(spec.kappa_at(j));
  return parity;
}

namespace {

// Every letter acts as I + a b^T on relative coordinates.
struct RankOne {
  IntVector a;
  IntVector b;
};

// b with <x, c> = b . x for the relative-punctured pairing.
IntVector pairing_row(const SurfaceSpec& spec, const PunctVec& c) {
  IntVector b(spec.rel_dim());
  for (Eigen::Index i = 0; i + 1 < spec.abs_dim(); i += 2) {
    b(i) = c[i + 1];
    b(i + 1) = -c[i];
  }
  b.tail(spec.arc_count()) = c.coords.tail(spec.arc_count());
  return b;
}

RankOne rank_one(const SurfaceSpec& spec, const Generator& letter) {
  return std::visit(overloaded{
                        [&](const Twist& t) {
                          // x -> x + k <x, c> pi(c)
                          return RankOne{IntVector(t.power * embed_rel(spec, project_punct(spec, t.c)).coords),
                                         pairing_row(spec, t.c)};
                        },
                        [&](const PointPush& p) {
                          return RankOne{embed_rel(spec, p.u).coords, pairing_row(spec, puncture_class(spec, p.point))};
                        },
                    },
                    letter);
}

}  // namespace

IntMatrix letter_matrix(const SurfaceSpec& spec, const Generator& letter) {
  const RankOne r = rank_one(spec, letter);
  return IntMatrix(IntMatrix::Identity(spec.rel_dim(), spec.rel_dim()) + r.a * r.b.transpose());
}

Mod2Matrix letter_action_mod2(const SurfaceSpec& spec, const Generator& letter) {
  if (const auto* t = std::get_if<Twist>(&letter)) {
    if (mod2(t->power) == 0) return Mod2Matrix::Identity(spec.abs_dim(), spec.abs_dim());
    return transvection_mod2(reduce_mod2_vec(project_punct(spec, t->c).coords));
  }
  return Mod2Matrix::Identity(spec.abs_dim(), spec.abs_dim());
}

CohomClass letter_delta(const SurfaceSpec& spec, const Generator& letter) {
  return std::visit(overloaded{
                        [&](const Twist& t) {
                          if (mod2(t.power * t.w) == 0) return CohomClass::zero(spec.genus());
                          return CohomClass::pairing_with(project_punct(spec, t.c));
                        },
                        [&](const PointPush& p) {
                          if (mod2(spec.kappa_at(p.point)) == 0) return CohomClass::zero(spec.genus());
                          return CohomClass::pairing_with(p.u);
                        },
                    },
                    letter);
}

RelVec act_rel(const Word& word, const RelVec& x) {
  if (x.size() != word.spec().rel_dim()) throw SpecMismatch("act_rel: vector has wrong dimension");
  IntVector y = x.coords;
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    const RankOne r = rank_one(word.spec(), *it);
    const Integer p = r.b.dot(y);
    if (p != 0) y += p * r.a;
  }
  return RelVec(std::move(y));
}

PAutElem word_to_paut(const Word& word) {
  const SurfaceSpec& spec = word.spec();
  IntMatrix m = IntMatrix::Identity(spec.rel_dim(), spec.rel_dim());
  for (const auto& l : word.letters()) {
    const RankOne r = rank_one(spec, l);
    m += (m * r.a) * r.b.transpose();
  }
  return PAutElem::from_block(spec.genus(), spec.points(), m);
}

Mod2Matrix word_action_mod2(const Word& word) {
  const SurfaceSpec& spec = word.spec();
  Mod2Matrix m = Mod2Matrix::Identity(spec.abs_dim(), spec.abs_dim());
  for (const auto& l : word.letters()) m = mod2_product(m, letter_action_mod2(spec, l));
  return m;
}

TrackedClass apply_letter(const SurfaceSpec& spec, const Generator& letter, const TrackedClass& t) {
  return std::visit(
      overloaded{
          [&](const Twist& tw) {
            // phi(T_c^k(a)) = phi(a) + k <a, c> phi(c)
            const Integer p = rel_punct_pairing(spec, t.cls, tw.c);
            if (p == 0) return t;
            const Integer kp = tw.power * p;
            return TrackedClass{t.cls + kp * embed_rel(spec, project_punct(spec, tw.c)), t.wind2 + 2 * kp * tw.w};
          },
          [&](const PointPush& pp) {
            if (!boundary(spec, t.cls).coords.isZero())
              throw PointPushOnArcs("point-push action on arc windings is not defined");
            const Integer p = symplectic_form(t.cls.coords, pp.u.coords, spec.abs_dim());
            return TrackedClass{t.cls, t.wind2 - 2 * Integer(spec.kappa_at(pp.point)) * p};
          },
      },
      letter);
}

TrackedClass push_forward(const Word& word, TrackedClass t) {
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it)
    t = apply_letter(word.spec(), *it, t);
  return t;
}

TrackedClass pull_back(const Word& word, TrackedClass t) {
  for (const auto& l : word.letters()) t = apply_letter(word.spec(), inverse(l), t);
  return t;
}

TrackedClass tracked_curve(const Framing& f, Eigen::Index k) {
  return {embed_rel(f.spec(), abs_basis(f.spec(), k)), 2 * f.curve_winding(k)};
}

TrackedClass tracked_arc(const Framing& f, int point) {
  if (!f.has_arcs()) throw MissingArcData("arc2: framing carries no arc windings");
  return {arc_class(f.spec(), point), f.arc_winding2(point)};
}

Framing act_framing(const Word& word, const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  if (!(spec == word.spec())) throw SpecMismatch("act_framing: word and framing live on different surfaces");
  if (f.has_arcs() && word.has_point_push())
    throw PointPushOnArcs("act_framing: point-pushes cannot act on a framing with arc windings");
  IntVector wx(spec.genus()), wy(spec.genus());
  for (Eigen::Index k = 0; k < spec.abs_dim(); ++k) {
    const Integer w = pull_back(word, tracked_curve(f, k)).wind2 / 2;
    (k % 2 == 0 ? wx(k / 2) : wy(k / 2)) = w;
  }
  std::optional<IntVector> arc2;
  if (f.has_arcs()) {
    arc2 = IntVector(spec.arc_count());
    for (int p = 2; p <= spec.points(); ++p) (*arc2)(p - 2) = pull_back(word, tracked_arc(f, p)).wind2;
  }
  return Framing(spec, std::move(wx), std::move(wy), std::move(arc2));
}

CohomClass delta_word(const Word& word, const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  if (!(spec == word.spec())) throw SpecMismatch("delta_word: word and framing live on different surfaces");
  CohomClass acc = CohomClass::zero(spec.genus());
  // right: mod-2 action of the letters to the right of the current one.
  Mod2Matrix right = Mod2Matrix::Identity(spec.abs_dim(), spec.abs_dim());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    acc = acc + pullback_h1(right, letter_delta(spec, *it));
    right = mod2_product(letter_action_mod2(spec, *it), right);
  }
  return acc;
}

Word paut_to_word(const PAutElem& a, const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  if (a.genus() != spec.genus() || a.points() != spec.points())
    throw SpecMismatch("paut_to_word: element and framing live on different surfaces");
  std::vector<Generator> letters;
  for (int p = 2; p <= spec.points(); ++p) {
    for (Eigen::Index k = 0; k < spec.abs_dim(); ++k) {
      const Integer& c = a.relative()(k, p - 2);
      const AbsVec u = Integer(sgn(c)) * abs_basis(spec, k);
      for (Integer r = abs(c); r > 0; --r) letters.push_back(PointPush{p, u});
    }
  }
  for (const auto& t : factor_sp(a.symplectic()))
    letters.push_back(Twist{embed_punct(spec, t.v), t.power, Integer(parity_P(f, t.v))});
  return Word(spec, std::move(letters));
}

}  // namespace framedhom
