#pragma once

// Seeded random inputs for property checks. Every generator draws from a
// caller-owned std::mt19937_64, so runs are reproducible from the seed.

#include <framedhom/basis_moves.hpp>
#include <framedhom/paut.hpp>
#include <framedhom/word.hpp>

#include <random>

namespace framedhom {

using Rng = std::mt19937_64;

long uniform_int(Rng& rng, long lo, long hi);

/// A random kappa vector of length n summing to 2g - 2, entries in [-2, 2g].
SurfaceSpec random_spec(Rng& rng, int genus, int points);
/// Same, with every entry even.
SurfaceSpec random_even_spec(Rng& rng, int genus, int points);

Framing random_framing(Rng& rng, const SurfaceSpec& spec, bool with_arcs, long bound = 5);

/// Primitive vector with entries in [-bound, bound].
AbsVec random_primitive(Rng& rng, int genus, long bound = 3);
IntMatrix random_relative(Rng& rng, const SurfaceSpec& spec, long bound = 4);
/// Product of `length` random transvections about small primitive vectors.
IntMatrix random_symplectic(Rng& rng, int genus, int length = 6);
PAutElem random_paut(Rng& rng, const SurfaceSpec& spec, int length = 6);

/// A twist letter about a random primitive punctured class, with a winding of
/// the parity a simple representative must have.
Twist random_twist(Rng& rng, const Framing& f);
/// Random letters mixing basis twists, puncture twists, general twists and
/// (if allowed) point-pushes.
Word random_word(Rng& rng, const Framing& f, int length, bool allow_point_push = true);
/// Random powers of basis-curve twists only.
Word random_basis_word(Rng& rng, const Framing& f, int length);
/// Twists about classes whose declared winding is 0; such words fix f.
Word random_stabilizing_word(Rng& rng, const Framing& f, int length);

Move random_move(Rng& rng, const Framing& f);

}  // namespace framedhom
