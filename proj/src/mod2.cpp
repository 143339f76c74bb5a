#include <framedhom/mod2.hpp>

namespace framedhom {

namespace {
Eigen::VectorXi reduce(const Eigen::VectorXi& v) { return v.unaryExpr([](int e) { return e & 1; }); }
Eigen::MatrixXi reduce(const Eigen::MatrixXi& m) { return m.unaryExpr([](int e) { return e & 1; }); }
}  // namespace

CohomClass CohomClass::pairing_with(const AbsVec& u) {
  // <u, x> = u^T J x, so the coefficient vector is J^T u = J u mod 2.
  const Eigen::Index n = u.size();
  Mod2Vector bits(n);
  for (Eigen::Index i = 0; i + 1 < n; i += 2) {
    bits(i) = mod2(u[i + 1]);
    bits(i + 1) = mod2(u[i]);
  }
  return {bits};
}

int CohomClass::evaluate(const Mod2Vector& x) const { return bits.dot(x) & 1; }

int CohomClass::evaluate(const AbsVec& x) const { return evaluate(reduce_mod2_vec(x.coords)); }

CohomClass operator+(const CohomClass& a, const CohomClass& b) {
  if (a.bits.size() != b.bits.size()) throw SpecMismatch("cohomology classes of different genus");
  return {reduce(Eigen::VectorXi(a.bits + b.bits))};
}

Mod2Matrix mod2_gram(int genus) {
  Mod2Matrix j = Mod2Matrix::Zero(2 * genus, 2 * genus);
  for (int i = 0; i < genus; ++i) j(2 * i, 2 * i + 1) = j(2 * i + 1, 2 * i) = 1;
  return j;
}

int mod2_pairing(const Mod2Vector& u, const Mod2Vector& v) {
  int s = 0;
  for (Eigen::Index i = 0; i + 1 < u.size(); i += 2) s += u(i) * v(i + 1) + u(i + 1) * v(i);
  return s & 1;
}

Mod2Matrix mod2_product(const Mod2Matrix& a, const Mod2Matrix& b) { return reduce(Eigen::MatrixXi(a * b)); }

Mod2Vector mod2_apply(const Mod2Matrix& a, const Mod2Vector& x) { return reduce(Eigen::VectorXi(a * x)); }

bool is_symplectic_mod2(const Mod2Matrix& s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) return false;
  const int g = static_cast<int>(s.rows() / 2);
  return reduce(Eigen::MatrixXi(s.transpose() * mod2_gram(g) * s)) == mod2_gram(g);
}

}  // namespace framedhom
