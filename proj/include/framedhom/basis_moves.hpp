#pragma once

// Moves that change winding numbers on the distinguished basis while acting
// trivially on relative homology, and a planner that chains them to carry
// one framing to another with the same Arf invariant and q-vector.

#include <framedhom/framing.hpp>

#include <variant>
#include <vector>

namespace framedhom {

enum class BasisKind { X, Y, Arc };

/// x_index / y_index for handles 1..g, or the arc a_index for 2..n.
struct BasisRef {
  BasisKind kind;
  int index;
  friend bool operator==(const BasisRef&, const BasisRef&) = default;
};

/// Band-sum the target with a separating curve around the helper handle:
/// curve windings change by 2 sign, arc windings by 2 sign (arc2 by 4 sign).
struct ConnectSum {
  BasisRef target;
  int helper;
  int sign;
  friend bool operator==(const ConnectSum&, const ConnectSum&) = default;
};

/// Twist about the pants curve enclosing p_{j1} and p_{j2}; needs both kappa
/// odd. Both doubled arc windings move by 2 (kappa_{j1} + kappa_{j2} + 1).
struct ArcParityTwist {
  int j1;
  int j2;
  friend bool operator==(const ArcParityTwist&, const ArcParityTwist&) = default;
};

/// Twist about Delta_j; needs kappa_j even. arc2_j moves by 2 (-1 - kappa_j).
struct BoundaryTwist {
  int j;
  friend bool operator==(const BoundaryTwist&, const BoundaryTwist&) = default;
};

using Move = std::variant<ConnectSum, ArcParityTwist, BoundaryTwist>;

/// Throws ValidationError (MissingArcData for arc moves without arcs) when
/// the move does not fit f.
Framing apply_move(const Framing& f, const Move& m);
Framing apply_moves(Framing f, const std::vector<Move>& moves);

/// Moves carrying f to h: parity repairs on arcs first, then connect-sums.
/// Throws SpecMismatch, MissingArcData, QVectorMismatch or ArfMismatch.
std::vector<Move> match_framings(const Framing& f, const Framing& h);

}  // namespace framedhom
