#include <framedhom/lattice.hpp>

#include <numeric>
#include <sstream>

namespace framedhom {

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

bool is_primitive(const IntVector& v) { return gcd_of(v) == 1; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(); }

SurfaceSpec::SurfaceSpec(int genus, std::vector<long> kappa) : genus_(genus), kappa_(std::move(kappa)) {
  if (genus_ < 2) throw ValidationError("genus: g must be at least 2, got " + std::to_string(genus_));
  if (kappa_.empty()) throw ValidationError("points: at least one marked point is required");
  long sum = std::accumulate(kappa_.begin(), kappa_.end(), 0L);
  if (sum != 2L * genus_ - 2) {
    std::ostringstream os;
    os << "kappa sum: entries sum to " << sum << " but 2g - 2 = " << 2 * genus_ - 2;
    throw ValidationError(os.str());
  }
}

bool SurfaceSpec::all_kappa_even() const {
  for (long k : kappa_)
    if (k % 2 != 0) return false;
  return true;
}

long SurfaceSpec::kappa_gcd() const {
  long g = 0;
  for (long k : kappa_) g = std::gcd(g, k);
  return g;
}

AbsVec x_class(const SurfaceSpec& spec, int handle) { return abs_basis(spec, spec.x_index(handle)); }
AbsVec y_class(const SurfaceSpec& spec, int handle) { return abs_basis(spec, spec.y_index(handle)); }

AbsVec abs_basis(const SurfaceSpec& spec, Eigen::Index k) {
  AbsVec v = AbsVec::zero(spec.abs_dim());
  v[k] = 1;
  return v;
}

RelVec arc_class(const SurfaceSpec& spec, int point) {
  if (point < 2 || point > spec.points()) throw ValidationError("arc index out of range");
  RelVec v = RelVec::zero(spec.rel_dim());
  v[spec.arc_index(point)] = 1;
  return v;
}

PunctVec puncture_class(const SurfaceSpec& spec, int point) {
  if (point < 1 || point > spec.points()) throw ValidationError("puncture index out of range");
  PunctVec v = PunctVec::zero(spec.rel_dim());
  if (point >= 2) {
    v[spec.arc_index(point)] = 1;
  } else {
    for (int j = 2; j <= spec.points(); ++j) v[spec.arc_index(j)] = -1;
  }
  return v;
}

RelVec embed_rel(const SurfaceSpec& spec, const AbsVec& v) {
  RelVec out = RelVec::zero(spec.rel_dim());
  out.coords.head(spec.abs_dim()) = v.coords;
  return out;
}

PunctVec embed_punct(const SurfaceSpec& spec, const AbsVec& v) {
  PunctVec out = PunctVec::zero(spec.rel_dim());
  out.coords.head(spec.abs_dim()) = v.coords;
  return out;
}

AbsVec absolute_part(const SurfaceSpec& spec, const RelVec& x) {
  return AbsVec(IntVector(x.coords.head(spec.abs_dim())));
}

IntMatrix symplectic_gram(int genus) {
  IntMatrix j = IntMatrix::Zero(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

IntMatrix rel_punct_gram(const SurfaceSpec& spec) {
  IntMatrix b = IntMatrix::Zero(spec.rel_dim(), spec.rel_dim());
  b.topLeftCorner(spec.abs_dim(), spec.abs_dim()) = symplectic_gram(spec.genus());
  for (Eigen::Index j = spec.abs_dim(); j < spec.rel_dim(); ++j) b(j, j) = 1;
  return b;
}

Integer symplectic_pairing(const AbsVec& u, const AbsVec& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) throw SpecMismatch("dimension mismatch in symplectic pairing");
  return symplectic_form(u.coords, v.coords, u.size());
}

Integer rel_punct_pairing(const SurfaceSpec& spec, const RelVec& x, const PunctVec& c) {
  if (x.size() != spec.rel_dim() || c.size() != spec.rel_dim())
    throw SpecMismatch("dimension mismatch in relative-punctured pairing");
  Integer s = symplectic_form(x.coords, c.coords, spec.abs_dim());
  for (Eigen::Index j = spec.abs_dim(); j < spec.rel_dim(); ++j) s += x[j] * c[j];
  return s;
}

ZeroChain boundary(const SurfaceSpec& spec, const RelVec& x) {
  if (x.size() != spec.rel_dim()) throw SpecMismatch("dimension mismatch in boundary");
  return ZeroChain(IntVector(x.coords.tail(spec.arc_count())));
}

AbsVec project_punct(const SurfaceSpec& spec, const PunctVec& c) {
  if (c.size() != spec.rel_dim()) throw SpecMismatch("dimension mismatch in projection");
  return AbsVec(IntVector(c.coords.head(spec.abs_dim())));
}

Integer point_coefficient(const SurfaceSpec& spec, const RelVec& x, int point) {
  return rel_punct_pairing(spec, x, puncture_class(spec, point));
}

}  // namespace framedhom
