#include <framedhom/sampling.hpp>

namespace framedhom {

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

namespace {

std::vector<long> random_kappa(Rng& rng, int genus, int points, bool even) {
  const long total = 2L * genus - 2;
  for (;;) {
    std::vector<long> kappa(points);
    long sum = 0;
    for (int i = 1; i < points; ++i) {
      kappa[i] = uniform_int(rng, -2, 2L * genus);
      if (even) kappa[i] &= ~1L;
      sum += kappa[i];
    }
    kappa[0] = total - sum;
    if (kappa[0] >= -2 && kappa[0] <= 2L * genus) return kappa;
  }
}

}  // namespace

SurfaceSpec random_spec(Rng& rng, int genus, int points) { return SurfaceSpec(genus, random_kappa(rng, genus, points, false)); }

SurfaceSpec random_even_spec(Rng& rng, int genus, int points) {
  return SurfaceSpec(genus, random_kappa(rng, genus, points, true));
}

Framing random_framing(Rng& rng, const SurfaceSpec& spec, bool with_arcs, long bound) {
  IntVector wx(spec.genus()), wy(spec.genus());
  for (int i = 0; i < spec.genus(); ++i) {
    wx(i) = uniform_int(rng, -bound, bound);
    wy(i) = uniform_int(rng, -bound, bound);
  }
  std::optional<IntVector> arc2;
  if (with_arcs) {
    arc2 = IntVector(spec.arc_count());
    for (Eigen::Index j = 0; j < spec.arc_count(); ++j) (*arc2)(j) = 2 * uniform_int(rng, -bound, bound) + 1;
  }
  return Framing(spec, std::move(wx), std::move(wy), std::move(arc2));
}

AbsVec random_primitive(Rng& rng, int genus, long bound) {
  for (;;) {
    AbsVec v = AbsVec::zero(2 * genus);
    for (int k = 0; k < 2 * genus; ++k) v[k] = uniform_int(rng, -bound, bound);
    if (is_primitive(v.coords)) return v;
  }
}

IntMatrix random_relative(Rng& rng, const SurfaceSpec& spec, long bound) {
  IntMatrix m(spec.abs_dim(), spec.arc_count());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = uniform_int(rng, -bound, bound);
  return m;
}

IntMatrix random_symplectic(Rng& rng, int genus, int length) {
  IntMatrix s = IntMatrix::Identity(2 * genus, 2 * genus);
  for (int i = 0; i < length; ++i) {
    const long k = uniform_int(rng, 0, 1) ? uniform_int(rng, 1, 2) : -uniform_int(rng, 1, 2);
    s = s * transvection(random_primitive(rng, genus, 1), k);
  }
  return s;
}

PAutElem random_paut(Rng& rng, const SurfaceSpec& spec, int length) {
  return PAutElem(spec.genus(), spec.points(), random_symplectic(rng, spec.genus(), length),
                  random_relative(rng, spec));
}

Twist random_twist(Rng& rng, const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  for (;;) {
    PunctVec c = PunctVec::zero(spec.rel_dim());
    for (Eigen::Index k = 0; k < spec.abs_dim(); ++k) c[k] = uniform_int(rng, -2, 2);
    for (Eigen::Index k = spec.abs_dim(); k < spec.rel_dim(); ++k) c[k] = uniform_int(rng, -1, 1);
    if (!is_primitive(c.coords)) continue;
    const long w = 2 * uniform_int(rng, -3, 3) + expected_twist_parity(f, c);
    const long k = uniform_int(rng, 0, 1) ? uniform_int(rng, 1, 2) : -uniform_int(rng, 1, 2);
    return Twist{std::move(c), k, w};
  }
}

Word random_word(Rng& rng, const Framing& f, int length, bool allow_point_push) {
  const SurfaceSpec& spec = f.spec();
  std::vector<Generator> letters;
  for (int i = 0; i < length; ++i) {
    long kind = uniform_int(rng, 0, allow_point_push ? 3 : 2);
    // With one marked point the loop around it is null-homologous.
    if (kind == 1 && spec.points() == 1) kind = 0;
    const long k = uniform_int(rng, 0, 1) ? uniform_int(rng, 1, 3) : -uniform_int(rng, 1, 3);
    if (kind == 0) {
      letters.push_back(curve_twist(f, uniform_int(rng, 0, spec.abs_dim() - 1), k));
    } else if (kind == 1) {
      letters.push_back(puncture_twist(spec, static_cast<int>(uniform_int(rng, 1, spec.points())), k));
    } else if (kind == 2) {
      letters.push_back(random_twist(rng, f));
    } else {
      letters.push_back(PointPush{static_cast<int>(uniform_int(rng, 1, spec.points())),
                                  random_primitive(rng, spec.genus(), 2)});
    }
  }
  return Word(spec, std::move(letters));
}

Word random_basis_word(Rng& rng, const Framing& f, int length) {
  std::vector<Generator> letters;
  for (int i = 0; i < length; ++i) {
    const long k = uniform_int(rng, 0, 1) ? uniform_int(rng, 1, 3) : -uniform_int(rng, 1, 3);
    letters.push_back(curve_twist(f, uniform_int(rng, 0, f.spec().abs_dim() - 1), k));
  }
  return Word(f.spec(), std::move(letters));
}

Word random_stabilizing_word(Rng& rng, const Framing& f, int length) {
  std::vector<Generator> letters;
  while (static_cast<int>(letters.size()) < length) {
    Twist t = random_twist(rng, f);
    if (mod2(t.w) != 0) continue;
    t.w = 0;
    letters.push_back(std::move(t));
  }
  return Word(f.spec(), std::move(letters));
}

Move random_move(Rng& rng, const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  const int sign = uniform_int(rng, 0, 1) ? 1 : -1;
  std::vector<int> odd, even;
  for (int p = 2; p <= spec.points(); ++p) (mod2(spec.kappa_at(p)) ? odd : even).push_back(p);
  for (;;) {
    const long kind = f.has_arcs() ? uniform_int(rng, 0, 3) : 0;
    if (kind == 0) {
      const int handle = static_cast<int>(uniform_int(rng, 1, spec.genus()));
      int helper = static_cast<int>(uniform_int(rng, 1, spec.genus() - 1));
      if (helper >= handle) ++helper;
      return ConnectSum{{uniform_int(rng, 0, 1) ? BasisKind::X : BasisKind::Y, handle}, helper, sign};
    }
    if (kind == 1 && spec.points() >= 2)
      return ConnectSum{{BasisKind::Arc, static_cast<int>(uniform_int(rng, 2, spec.points()))},
                        static_cast<int>(uniform_int(rng, 1, spec.genus())), sign};
    if (kind == 2 && odd.size() >= 2) {
      const std::size_t a = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(odd.size()) - 1));
      std::size_t b = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(odd.size()) - 2));
      if (b >= a) ++b;
      return ArcParityTwist{odd[a], odd[b]};
    }
    if (kind == 3 && !even.empty())
      return BoundaryTwist{even[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(even.size()) - 1))]};
  }
}

}  // namespace framedhom
