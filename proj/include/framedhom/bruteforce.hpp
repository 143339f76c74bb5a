#pragma once

// Exhaustive mod-2 computations for genus 2 and 3. A 2g x 2g matrix over
// Z/2 is packed into one 64-bit word, row r occupying bits [2g r, 2g r + 2g)
// with column c at bit 2g r + c. Vectors over Z/2 are packed the same way,
// coordinate k at bit k.

#include <framedhom/framing.hpp>

#include <cstdint>
#include <vector>

namespace framedhom {

using PackedMatrix = std::uint64_t;
using PackedVector = std::uint32_t;

PackedMatrix pack(const Mod2Matrix& m);
Mod2Matrix unpack(PackedMatrix m, int genus);
PackedVector pack_vector(const Mod2Vector& v);
Mod2Vector unpack_vector(PackedVector v, int genus);

PackedMatrix packed_identity(int genus);
PackedMatrix packed_multiply(PackedMatrix a, PackedMatrix b, int genus);
PackedVector packed_apply(PackedMatrix a, PackedVector x, int genus);
/// Mod-2 symplectic pairing of packed vectors.
int packed_pairing(PackedVector u, PackedVector v);
/// q(x) for the form with basis values q_values (packed).
int packed_qform(PackedVector q_values, PackedVector x);
/// q_hat(S) as a packed functional: bit k is q(S e_k) + q(e_k).
PackedVector packed_q_hat(PackedVector q_values, PackedMatrix s, int genus);
/// (pullback theta)(x) = theta(S x), packed.
PackedVector packed_pullback(PackedMatrix s, PackedVector theta, int genus);

/// Sp(2g, Z/2) as a sorted list of packed matrices.
class Mod2Group {
 public:
  Mod2Group(int genus, std::vector<PackedMatrix> sorted_elements);

  int genus() const { return genus_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<PackedMatrix>& elements() const { return elements_; }
  bool contains(PackedMatrix m) const;
  /// Position of m; throws ValidationError if m is not in the group.
  std::size_t index_of(PackedMatrix m) const;

 private:
  int genus_;
  std::vector<PackedMatrix> elements_;
};

/// Breadth-first closure of the 2^{2g} - 1 mod-2 transvections.
/// Throws GenusTooLarge outside g in {2, 3}.
Mod2Group enumerate_sp2(int genus);
/// Shared, lazily built copy of enumerate_sp2(genus).
const Mod2Group& sp2_group(int genus);

/// |Sp(2g, Z/2)| = 2^{g^2} prod_{i=1}^{g} (2^{2i} - 1).
std::uint64_t sp2_order_formula(int genus);

struct FormCensus {
  int genus = 0;
  std::uint64_t even_count = 0;
  std::uint64_t odd_count = 0;
  /// Stabilizer order of each form, indexed by its packed basis values.
  std::vector<std::uint64_t> stabilizer_orders;
};

/// All 2^{2g} quadratic refinements, their Arf invariants, and stabilizers
/// {S : q o S = q}. Throws GenusTooLarge outside g in {2, 3}.
FormCensus qform_census(int genus);

/// Checks q_hat(AB) = pullback(B, q_hat(A)) + q_hat(B) for every pair in
/// Sp(2g, Z/2) and every form. g = 2 only.
bool verify_qhat_crossed(int genus = 2);

/// Number of mod-2 pairs (S, M) in Sp(2g, Z/2) x Hom((Z/2)^{n-1}, (Z/2)^{2g})
/// with theta_mod2 = 0. Throws GenusTooLarge for g > 3, TooLarge for n > 3.
std::uint64_t kernel_order_mod2(const Framing& f);

/// The same count from the kernel structure: |Sp[q]| 2^{2g(n-1)} when all
/// kappa_i are even, |Sp(2g, Z/2)| 2^{2g(n-2)} otherwise.
std::uint64_t kernel_order_formula(const Framing& f);

}  // namespace framedhom
