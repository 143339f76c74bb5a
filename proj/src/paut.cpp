#include <framedhom/paut.hpp>

namespace framedhom {

bool is_symplectic(const IntMatrix& s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) return false;
  const Eigen::Index n = s.rows();
  // Column pairings must reproduce the standard form.
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b) {
      const Integer p = symplectic_form(s.col(a), s.col(b), n);
      const int expected = (a % 2 == 0 && b == a + 1) ? 1 : 0;
      if (p != expected) return false;
    }
  return true;
}

IntMatrix symplectic_inverse(const IntMatrix& s) {
  // S^{-1} = -J S^T J, entrywise: (S^{-1})_{ij} = -J_i J_j S_{j' i'} with
  // i' the handle partner of i and J_i = +1 on x rows, -1 on y rows.
  const Eigen::Index n = s.rows();
  IntMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const int sign = ((i % 2 == 0) == (j % 2 == 0)) ? 1 : -1;
      inv(i, j) = sign * s(j ^ 1, i ^ 1);
    }
  return inv;
}

PAutElem::PAutElem(int genus, int points, IntMatrix s, IntMatrix m)
    : genus_(genus), points_(points), s_(std::move(s)), m_(std::move(m)) {
  if (genus_ < 1 || points_ < 1) throw ValidationError("paut: genus and point count must be positive");
  if (s_.rows() != 2 * genus_ || s_.cols() != 2 * genus_) throw ValidationError("paut: S must be 2g x 2g");
  if (m_.rows() != 2 * genus_ || m_.cols() != points_ - 1) throw ValidationError("paut: M must be 2g x (n - 1)");
  if (!is_symplectic(s_)) throw NotSymplectic("paut: S^T J S != J");
}

PAutElem PAutElem::identity(int genus, int points) {
  return PAutElem(genus, points, IntMatrix::Identity(2 * genus, 2 * genus), IntMatrix::Zero(2 * genus, points - 1));
}

PAutElem PAutElem::from_block(int genus, int points, const IntMatrix& full) {
  const Eigen::Index a = 2 * genus, r = points - 1;
  if (full.rows() != a + r || full.cols() != a + r) throw ValidationError("paut: block matrix has wrong size");
  if (!(IntMatrix(full.bottomLeftCorner(r, a)) == IntMatrix::Zero(r, a)) ||
      !(IntMatrix(full.bottomRightCorner(r, r)) == IntMatrix::Identity(r, r)))
    throw ValidationError("paut: induced action on reduced zero-homology is not the identity");
  return PAutElem(genus, points, full.topLeftCorner(a, a), full.topRightCorner(a, r));
}

IntMatrix PAutElem::block() const {
  const Eigen::Index a = 2 * genus_, r = points_ - 1;
  IntMatrix full = IntMatrix::Zero(a + r, a + r);
  full.topLeftCorner(a, a) = s_;
  full.topRightCorner(a, r) = m_;
  full.bottomRightCorner(r, r) = IntMatrix::Identity(r, r);
  return full;
}

RelVec PAutElem::apply(const RelVec& x) const {
  if (x.size() != 2 * genus_ + points_ - 1) throw SpecMismatch("paut: relative vector has wrong dimension");
  return RelVec(IntVector(block() * x.coords));
}

bool PAutElem::is_identity() const { return *this == identity(genus_, points_); }

bool operator==(const PAutElem& a, const PAutElem& b) {
  return a.genus_ == b.genus_ && a.points_ == b.points_ && a.s_ == b.s_ && a.m_ == b.m_;
}

PAutElem compose(const PAutElem& a, const PAutElem& b) {
  if (a.genus() != b.genus() || a.points() != b.points()) throw SpecMismatch("compose: different surfaces");
  return PAutElem(a.genus(), a.points(), a.symplectic() * b.symplectic(),
                  a.symplectic() * b.relative() + a.relative());
}

PAutElem invert(const PAutElem& a) {
  IntMatrix s_inv = symplectic_inverse(a.symplectic());
  IntMatrix m_inv = -(s_inv * a.relative());
  return PAutElem(a.genus(), a.points(), std::move(s_inv), std::move(m_inv));
}

Decomposition decompose(const PAutElem& a) {
  const int g = a.genus(), n = a.points();
  return {PAutElem(g, n, IntMatrix::Identity(2 * g, 2 * g), a.relative()),
          PAutElem(g, n, a.symplectic(), IntMatrix::Zero(2 * g, n - 1))};
}

IntMatrix transvection(const AbsVec& v, const Integer& power) {
  const Eigen::Index n = v.size();
  // <x, v> = x . w with w = J v.
  IntVector w(n);
  for (Eigen::Index i = 0; i + 1 < n; i += 2) {
    w(i) = v[i + 1];
    w(i + 1) = -v[i];
  }
  return IntMatrix(IntMatrix::Identity(n, n) + Integer(power) * v.coords * w.transpose());
}

Mod2Matrix transvection_mod2(const Mod2Vector& v) {
  const Eigen::Index n = v.size();
  Mod2Matrix t = Mod2Matrix::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    // column c is e_c + <e_c, v> v
    if (v(c ^ 1) & 1)
      for (Eigen::Index r = 0; r < n; ++r) t(r, c) ^= v(r) & 1;
  }
  return t;
}

namespace {

class SymplecticReducer {
 public:
  explicit SymplecticReducer(IntMatrix w) : w_(std::move(w)), g_(static_cast<int>(w_.rows() / 2)) {}

  std::vector<TransvectionFactor> run() {
    for (int h = 0; h < g_; ++h) {
      clear_first_column(h);
      clear_second_column(h);
    }
    if (!(w_ == IntMatrix::Identity(2 * g_, 2 * g_))) throw NotSymplectic("factor_sp: elimination did not terminate at I");
    // applied ops satisfy L_m ... L_1 S = I, so S = L_1^{-1} ... L_m^{-1}.
    std::vector<TransvectionFactor> out;
    out.reserve(applied_.size());
    for (auto& [v, k] : applied_) out.push_back({v, -k});
    return out;
  }

 private:
  AbsVec e(Eigen::Index k) const {
    AbsVec v = AbsVec::zero(2 * g_);
    v[k] = 1;
    return v;
  }
  Eigen::Index x(int h) const { return 2 * h; }
  Eigen::Index y(int h) const { return 2 * h + 1; }

  // W <- T_v^k W, applied column by column.
  void left(const AbsVec& v, const Integer& k) {
    if (k == 0) return;
    for (Eigen::Index c = 0; c < w_.cols(); ++c) {
      Integer p = symplectic_form(w_.col(c), v.coords, 2 * g_);
      if (p != 0) w_.col(c) += Integer(k * p) * v.coords;
    }
    applied_.push_back({v, k});
  }

  // E(u, v)^k = T_{u+v}^k T_u^{-k} T_v^{-k} for an isotropic pair of basis
  // vectors: w -> w + k <w,u> v + k <w,v> u.
  void elementary(Eigen::Index u, Eigen::Index v, const Integer& k) {
    if (k == 0) return;
    left(e(v), -k);
    left(e(u), -k);
    left(e(u) + e(v), k);
  }

  Integer& at(Eigen::Index row, Eigen::Index col) { return w_(row, col); }

  void clear_first_column(int h) {
    const Eigen::Index c = x(h);
    for (int j = h; j < g_; ++j) {
      while (at(y(j), c) != 0) {
        // T_{x_j}^q : a <- a - q b ;  T_{y_j}^q : b <- b + q a
        left(e(x(j)), floor_div(at(x(j), c), at(y(j), c)));
        if (at(x(j), c) == 0) {
          left(e(x(j)), -1);
          left(e(y(j)), -1);
          break;
        }
        left(e(y(j)), -floor_div(at(y(j), c), at(x(j), c)));
      }
    }
    for (;;) {
      int pivot = -1;
      for (int j = h; j < g_; ++j) {
        if (at(x(j), c) == 0) continue;
        if (pivot < 0 || abs(at(x(j), c)) < abs(at(x(pivot), c))) pivot = j;
      }
      if (pivot < 0) throw NotSymplectic("factor_sp: zero column");
      bool reduced = false;
      for (int j = h; j < g_; ++j) {
        if (j == pivot || at(x(j), c) == 0) continue;
        elementary(y(pivot), x(j), -floor_div(at(x(j), c), at(x(pivot), c)));
        reduced = true;
      }
      if (!reduced) {
        if (pivot != h) {
          elementary(y(pivot), x(h), 1);
          elementary(y(h), x(pivot), -1);
        }
        break;
      }
    }
    if (at(x(h), c) == -1) {
      left(e(y(h)), -1);
      left(e(x(h)), -2);
      left(e(y(h)), -1);
    }
    if (at(x(h), c) != 1) throw NotSymplectic("factor_sp: column is not primitive");
  }

  void clear_second_column(int h) {
    const Eigen::Index c = y(h);
    if (at(y(h), c) != 1) throw NotSymplectic("factor_sp: <S x_h, S y_h> != 1");
    for (int j = h + 1; j < g_; ++j) {
      elementary(x(h), x(j), Integer(at(x(j), c)));
      elementary(x(h), y(j), Integer(at(y(j), c)));
    }
    left(e(x(h)), Integer(at(x(h), c)));
  }

  IntMatrix w_;
  int g_;
  std::vector<std::pair<AbsVec, Integer>> applied_;
};

}  // namespace

std::vector<TransvectionFactor> factor_sp(const IntMatrix& s) {
  if (!is_symplectic(s)) throw NotSymplectic("factor_sp: S^T J S != J");
  return SymplecticReducer(s).run();
}

IntMatrix product_of(const std::vector<TransvectionFactor>& factors, int genus) {
  IntMatrix p = IntMatrix::Identity(2 * genus, 2 * genus);
  for (const auto& f : factors) p = p * transvection(f.v, f.power);
  return p;
}

CohomClass pullback_h1(const Mod2Matrix& s, const CohomClass& theta) {
  return {Eigen::VectorXi(s.transpose() * theta.bits).unaryExpr([](int e) { return e & 1; })};
}

}  // namespace framedhom
