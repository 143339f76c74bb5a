#include <framedhom/basis_moves.hpp>

#include <string>

namespace framedhom {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_arc(const Framing& f, int j) {
  if (!f.has_arcs()) throw MissingArcData("arc move on a framing without arc windings");
  if (j < 2 || j > f.spec().points()) throw ValidationError("arc move: arc index must lie in 2..n");
}

}  // namespace

Framing apply_move(const Framing& f, const Move& m) {
  const SurfaceSpec& spec = f.spec();
  IntVector wx = f.wind_x(), wy = f.wind_y();
  std::optional<IntVector> arc2 = f.arc2();
  std::visit(overloaded{
                 [&](const ConnectSum& c) {
                   if (c.sign != 1 && c.sign != -1) throw ValidationError("connect-sum: sign must be +1 or -1");
                   if (c.helper < 1 || c.helper > spec.genus())
                     throw ValidationError("connect-sum: helper handle out of range");
                   if (c.target.kind == BasisKind::Arc) {
                     require_arc(f, c.target.index);
                     (*arc2)(c.target.index - 2) += 4 * c.sign;
                     return;
                   }
                   if (c.target.index < 1 || c.target.index > spec.genus())
                     throw ValidationError("connect-sum: target handle out of range");
                   if (c.helper == c.target.index)
                     throw ValidationError("connect-sum: helper handle must differ from the target's handle");
                   IntVector& w = c.target.kind == BasisKind::X ? wx : wy;
                   w(c.target.index - 1) += 2 * c.sign;
                 },
                 [&](const ArcParityTwist& t) {
                   require_arc(f, t.j1);
                   require_arc(f, t.j2);
                   if (t.j1 == t.j2) throw ValidationError("arc parity twist: arcs must be distinct");
                   if (mod2(spec.kappa_at(t.j1)) == 0 || mod2(spec.kappa_at(t.j2)) == 0)
                     throw ValidationError("arc parity twist: both kappa must be odd");
                   const long wd = spec.kappa_at(t.j1) + spec.kappa_at(t.j2) + 1;
                   (*arc2)(t.j1 - 2) += 2 * wd;
                   (*arc2)(t.j2 - 2) += 2 * wd;
                 },
                 [&](const BoundaryTwist& t) {
                   require_arc(f, t.j);
                   if (mod2(spec.kappa_at(t.j)) == 1) throw ValidationError("boundary twist: kappa_j must be even");
                   (*arc2)(t.j - 2) += 2 * spec.signature(t.j);
                 },
             },
             m);
  return Framing(spec, std::move(wx), std::move(wy), std::move(arc2));
}

Framing apply_moves(Framing f, const std::vector<Move>& moves) {
  for (const auto& m : moves) f = apply_move(f, m);
  return f;
}

std::vector<Move> match_framings(const Framing& f, const Framing& h) {
  const SurfaceSpec& spec = f.spec();
  if (!(spec == h.spec())) throw SpecMismatch("match: framings live on different surfaces");
  if (spec.points() >= 2 && (!f.has_arcs() || !h.has_arcs()))
    throw MissingArcData("match: both framings need arc windings when n >= 2");
  if (!(q_vector(f) == q_vector(h))) throw QVectorMismatch("match: basis winding parities differ");
  if (arf(f) != arf(h)) throw ArfMismatch("match: Arf invariants differ");

  std::vector<Move> moves;
  Framing cur = f;
  auto push = [&](Move m) {
    cur = apply_move(cur, m);
    moves.push_back(std::move(m));
  };

  if (spec.points() >= 2) {
    // An arc is mismatched when its winding differs by an odd integer.
    std::vector<int> pending;
    for (int p = 2; p <= spec.points(); ++p) {
      if (mod2((h.arc_winding2(p) - cur.arc_winding2(p)) / 2) == 0) continue;
      if (mod2(spec.kappa_at(p)) == 0)
        push(BoundaryTwist{p});
      else
        pending.push_back(p);
    }
    // Equal Arf forces an even number of these.
    if (pending.size() % 2 != 0) throw Error("match: odd number of mismatched arcs despite equal Arf");
    for (std::size_t i = 0; i < pending.size(); i += 2) push(ArcParityTwist{pending[i], pending[i + 1]});
  }

  auto repeat = [&](BasisRef target, int helper, Integer steps) {
    const int sign = steps > 0 ? 1 : -1;
    for (Integer r = abs(steps); r > 0; --r) push(ConnectSum{target, helper, sign});
  };
  for (int i = 1; i <= spec.genus(); ++i) {
    const int helper = i == 1 ? 2 : 1;
    repeat({BasisKind::X, i}, helper, (h.wind_x()(i - 1) - cur.wind_x()(i - 1)) / 2);
    repeat({BasisKind::Y, i}, helper, (h.wind_y()(i - 1) - cur.wind_y()(i - 1)) / 2);
  }
  for (int p = 2; p <= spec.points(); ++p) repeat({BasisKind::Arc, p}, 1, (h.arc_winding2(p) - cur.arc_winding2(p)) / 4);

  if (!(cur == h)) throw Error("match: planned moves do not reach the target");
  return moves;
}

}  // namespace framedhom
