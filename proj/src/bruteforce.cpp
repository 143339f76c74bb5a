#include <framedhom/bruteforce.hpp>

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace framedhom {

namespace {

constexpr PackedVector kLowBits = 0x55555555u;

PackedMatrix row_mask(int genus) { return (PackedMatrix{1} << (2 * genus)) - 1; }

PackedVector row(PackedMatrix m, int r, int genus) {
  return static_cast<PackedVector>((m >> (2 * genus * r)) & row_mask(genus));
}

PackedVector column(PackedMatrix m, int c, int genus) {
  PackedVector out = 0;
  for (int r = 0; r < 2 * genus; ++r) out |= static_cast<PackedVector>((m >> (2 * genus * r + c)) & 1u) << r;
  return out;
}

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

// The functional x -> <u, x>, packed.
PackedVector pairing_functional(PackedVector u) { return ((u & kLowBits) << 1) | ((u >> 1) & kLowBits); }

PackedMatrix from_columns(const std::vector<PackedVector>& cols, int genus) {
  PackedMatrix out = 0;
  for (int c = 0; c < 2 * genus; ++c)
    for (int r = 0; r < 2 * genus; ++r)
      if ((cols[c] >> r) & 1u) out |= PackedMatrix{1} << (2 * genus * r + c);
  return out;
}

PackedMatrix packed_transvection(PackedVector v, int genus) {
  std::vector<PackedVector> cols(2 * genus);
  for (int k = 0; k < 2 * genus; ++k) {
    const PackedVector e = PackedVector{1} << k;
    cols[k] = packed_pairing(e, v) ? (e ^ v) : e;
  }
  return from_columns(cols, genus);
}

void require_small_genus(int genus) {
  if (genus < 2 || genus > 3) throw GenusTooLarge("exhaustive mod-2 routines support g = 2 and g = 3 only");
}

}  // namespace

PackedMatrix pack(const Mod2Matrix& m) {
  const int d = static_cast<int>(m.rows());
  if (m.cols() != d || d > 8) throw ValidationError("pack: need a square matrix of size at most 8");
  PackedMatrix out = 0;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (m(r, c) & 1) out |= PackedMatrix{1} << (d * r + c);
  return out;
}

Mod2Matrix unpack(PackedMatrix m, int genus) {
  const int d = 2 * genus;
  Mod2Matrix out(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out(r, c) = static_cast<int>((m >> (d * r + c)) & 1u);
  return out;
}

PackedVector pack_vector(const Mod2Vector& v) {
  PackedVector out = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (v(k) & 1) out |= PackedVector{1} << k;
  return out;
}

Mod2Vector unpack_vector(PackedVector v, int genus) {
  Mod2Vector out(2 * genus);
  for (int k = 0; k < 2 * genus; ++k) out(k) = static_cast<int>((v >> k) & 1u);
  return out;
}

PackedMatrix packed_identity(int genus) {
  PackedMatrix out = 0;
  for (int r = 0; r < 2 * genus; ++r) out |= PackedMatrix{1} << (2 * genus * r + r);
  return out;
}

PackedMatrix packed_multiply(PackedMatrix a, PackedMatrix b, int genus) {
  const int d = 2 * genus;
  PackedMatrix out = 0;
  for (int r = 0; r < d; ++r) {
    PackedVector a_row = row(a, r, genus);
    PackedMatrix acc = 0;
    while (a_row) {
      const int c = std::countr_zero(a_row);
      acc ^= row(b, c, genus);
      a_row &= a_row - 1;
    }
    out |= acc << (d * r);
  }
  return out;
}

PackedVector packed_apply(PackedMatrix a, PackedVector x, int genus) {
  PackedVector out = 0;
  for (int r = 0; r < 2 * genus; ++r) out |= static_cast<PackedVector>(parity(row(a, r, genus) & x)) << r;
  return out;
}

int packed_pairing(PackedVector u, PackedVector v) { return parity(u & pairing_functional(v)); }

int packed_qform(PackedVector q_values, PackedVector x) { return parity(q_values & x) ^ parity(x & (x >> 1) & kLowBits); }

PackedVector packed_q_hat(PackedVector q_values, PackedMatrix s, int genus) {
  PackedVector out = 0;
  for (int k = 0; k < 2 * genus; ++k) {
    const int bit = packed_qform(q_values, column(s, k, genus)) ^ static_cast<int>((q_values >> k) & 1u);
    out |= static_cast<PackedVector>(bit) << k;
  }
  return out;
}

PackedVector packed_pullback(PackedMatrix s, PackedVector theta, int genus) {
  // (S^T theta)_k = sum_r S_rk theta_r
  PackedVector out = 0;
  while (theta) {
    const int r = std::countr_zero(theta);
    out ^= row(s, r, genus);
    theta &= theta - 1;
  }
  return out;
}

Mod2Group::Mod2Group(int genus, std::vector<PackedMatrix> sorted_elements)
    : genus_(genus), elements_(std::move(sorted_elements)) {}

bool Mod2Group::contains(PackedMatrix m) const { return std::binary_search(elements_.begin(), elements_.end(), m); }

std::size_t Mod2Group::index_of(PackedMatrix m) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
  if (it == elements_.end() || *it != m) throw ValidationError("index_of: matrix is not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

Mod2Group enumerate_sp2(int genus) {
  require_small_genus(genus);
  std::vector<PackedMatrix> generators;
  for (PackedVector v = 1; v < (PackedVector{1} << (2 * genus)); ++v) generators.push_back(packed_transvection(v, genus));

  std::unordered_set<PackedMatrix> seen;
  seen.reserve(2 * sp2_order_formula(genus));
  std::vector<PackedMatrix> frontier{packed_identity(genus)};
  seen.insert(frontier.front());
  std::vector<PackedMatrix> next;
  while (!frontier.empty()) {
    next.clear();
    for (PackedMatrix e : frontier)
      for (PackedMatrix t : generators) {
        const PackedMatrix p = packed_multiply(t, e, genus);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier.swap(next);
  }
  std::vector<PackedMatrix> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  return Mod2Group(genus, std::move(elements));
}

const Mod2Group& sp2_group(int genus) {
  require_small_genus(genus);
  if (genus == 2) {
    static const Mod2Group g2 = enumerate_sp2(2);
    return g2;
  }
  static const Mod2Group g3 = enumerate_sp2(3);
  return g3;
}

std::uint64_t sp2_order_formula(int genus) {
  std::uint64_t order = std::uint64_t{1} << (genus * genus);
  for (int i = 1; i <= genus; ++i) order *= (std::uint64_t{1} << (2 * i)) - 1;
  return order;
}

FormCensus qform_census(int genus) {
  const Mod2Group& group = sp2_group(genus);
  const int d = 2 * genus;
  const PackedVector forms = PackedVector{1} << d;
  FormCensus census;
  census.genus = genus;
  census.stabilizer_orders.assign(forms, 0);
  for (PackedVector q = 0; q < forms; ++q) {
    int a = 0;
    for (int i = 0; i < genus; ++i) a ^= ((q >> (2 * i)) & 1u) & ((q >> (2 * i + 1)) & 1u);
    (a == 0 ? census.even_count : census.odd_count) += 1;
  }
  std::vector<PackedVector> cols(d);
  for (PackedMatrix s : group.elements()) {
    for (int k = 0; k < d; ++k) cols[k] = column(s, k, genus);
    for (PackedVector q = 0; q < forms; ++q) {
      bool fixed = true;
      for (int k = 0; k < d && fixed; ++k) fixed = packed_qform(q, cols[k]) == static_cast<int>((q >> k) & 1u);
      if (fixed) ++census.stabilizer_orders[q];
    }
  }
  return census;
}

bool verify_qhat_crossed(int genus) {
  if (genus != 2) throw GenusTooLarge("verify_qhat_crossed: the exhaustive pair sweep runs for g = 2 only");
  const Mod2Group& group = sp2_group(genus);
  const std::size_t size = group.size();
  const PackedVector forms = PackedVector{1} << (2 * genus);
  std::vector<std::vector<PackedVector>> qh(forms, std::vector<PackedVector>(size));
  for (PackedVector q = 0; q < forms; ++q)
    for (std::size_t i = 0; i < size; ++i) qh[q][i] = packed_q_hat(q, group.elements()[i], genus);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      const PackedMatrix mb = group.elements()[b];
      const std::size_t ab = group.index_of(packed_multiply(group.elements()[a], mb, genus));
      for (PackedVector q = 0; q < forms; ++q)
        if (qh[q][ab] != (packed_pullback(mb, qh[q][a], genus) ^ qh[q][b])) return false;
    }
  return true;
}

std::uint64_t kernel_order_mod2(const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  const int genus = spec.genus();
  if (genus > 3) throw GenusTooLarge("kernel_order_mod2: g must be at most 3");
  if (spec.points() > 3) throw TooLarge("kernel_order_mod2: n must be at most 3");
  const Mod2Group& group = sp2_group(genus);
  const int d = 2 * genus;
  const int columns = spec.points() - 1;

  // Tally M v_kappa over every mod-2 M (columns packed side by side).
  std::vector<PackedVector> vbar;
  for (int p = 2; p <= spec.points(); ++p) vbar.push_back(static_cast<PackedVector>(mod2(spec.kappa_at(p))));
  std::vector<std::uint64_t> tally(PackedVector{1} << d, 0);
  const std::uint64_t m_count = std::uint64_t{1} << (d * columns);
  for (std::uint64_t m = 0; m < m_count; ++m) {
    PackedVector image = 0;
    for (int j = 0; j < columns; ++j)
      if (vbar[j]) image ^= static_cast<PackedVector>((m >> (d * j)) & ((std::uint64_t{1} << d) - 1));
    ++tally[image];
  }

  const PackedVector q = pack_vector(winding_form(f).values);
  std::uint64_t count = 0;
  for (PackedMatrix s : group.elements()) {
    const PackedVector qh = packed_q_hat(q, s, genus);
    for (PackedVector u = 0; u < tally.size(); ++u)
      if (tally[u] != 0 && packed_pullback(s, pairing_functional(u), genus) == qh) count += tally[u];
  }
  return count;
}

std::uint64_t kernel_order_formula(const Framing& f) {
  const SurfaceSpec& spec = f.spec();
  const int genus = spec.genus();
  if (genus > 3) throw GenusTooLarge("kernel_order_formula: g must be at most 3");
  if (spec.points() > 3) throw TooLarge("kernel_order_formula: n must be at most 3");
  const int d = 2 * genus;
  if (spec.all_kappa_even()) {
    const FormCensus census = qform_census(genus);
    const std::uint64_t stab = census.stabilizer_orders[pack_vector(spin_form(f).values)];
    return stab << (d * (spec.points() - 1));
  }
  return sp2_group(genus).size() << (d * (spec.points() - 2));
}

}  // namespace framedhom
