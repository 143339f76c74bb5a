#include <framedhom/serialize.hpp>

#include <fstream>
#include <set>

namespace framedhom {

namespace {

void reject_unknown_keys(const Json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ValidationError(std::string(what) + ": unknown key \"" + key + "\"");
}

const Json& required(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw ValidationError(std::string(what) + ": missing key \"" + key + "\"");
  return j.at(key);
}

IntVector vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array of integers");
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = integer_from_json(j[i], what);
  return v;
}

IntMatrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw ValidationError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const IntVector row = vector_from_json(j[static_cast<std::size_t>(r)], what);
    if (row.size() != cols) throw ValidationError(std::string(what) + ": expected " + std::to_string(cols) + " columns");
    m.row(r) = row.transpose();
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r).transpose()));
  return rows;
}

int small_int(const Json& j, const char* what) {
  const Integer v = integer_from_json(j, what);
  if (!v.fits_sint_p()) throw ValidationError(std::string(what) + ": value out of range");
  return static_cast<int>(v.get_si());
}

std::string basis_name(const BasisRef& b) {
  switch (b.kind) {
    case BasisKind::X: return "x" + std::to_string(b.index);
    case BasisKind::Y: return "y" + std::to_string(b.index);
    case BasisKind::Arc: return "a" + std::to_string(b.index);
  }
  return "?";
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  throw ValidationError(std::string(what) + ": expected an integer");
}

Json framing_to_json(const Framing& f) {
  Json j;
  j["g"] = f.spec().genus();
  j["kappa"] = f.spec().kappa();
  j["wind_x"] = vector_to_json(f.wind_x());
  j["wind_y"] = vector_to_json(f.wind_y());
  if (f.has_arcs()) j["arc2"] = vector_to_json(*f.arc2());
  return j;
}

Framing framing_from_json(const Json& j) {
  constexpr const char* what = "framing";
  reject_unknown_keys(j, {"g", "kappa", "wind_x", "wind_y", "arc2"}, what);
  const int g = small_int(required(j, "g", what), "g");
  std::vector<long> kappa;
  const IntVector kv = vector_from_json(required(j, "kappa", what), "kappa");
  for (Eigen::Index i = 0; i < kv.size(); ++i) {
    if (!kv(i).fits_slong_p()) throw ValidationError("kappa: value out of range");
    kappa.push_back(kv(i).get_si());
  }
  SurfaceSpec spec(g, std::move(kappa));
  std::optional<IntVector> arc2;
  if (j.contains("arc2")) arc2 = vector_from_json(j.at("arc2"), "arc2");
  return Framing(std::move(spec), vector_from_json(required(j, "wind_x", what), "wind_x"),
                 vector_from_json(required(j, "wind_y", what), "wind_y"), std::move(arc2));
}

Json paut_to_json(const PAutElem& a) {
  Json j;
  j["g"] = a.genus();
  j["n"] = a.points();
  j["S"] = matrix_to_json(a.symplectic());
  j["M"] = matrix_to_json(a.relative());
  return j;
}

PAutElem paut_from_json(const Json& j) {
  constexpr const char* what = "paut";
  reject_unknown_keys(j, {"g", "n", "S", "M"}, what);
  const int g = small_int(required(j, "g", what), "g");
  const int n = small_int(required(j, "n", what), "n");
  if (g < 1 || n < 1) throw ValidationError("paut: genus and point count must be positive");
  IntMatrix s = matrix_from_json(required(j, "S", what), 2 * g, 2 * g, "S");
  // With n = 1 an empty M may be written as [] or as 2g empty rows.
  const Json& mj = required(j, "M", what);
  IntMatrix m = (n == 1 && mj.is_array() && mj.empty()) ? IntMatrix(2 * g, 0) : matrix_from_json(mj, 2 * g, n - 1, "M");
  return PAutElem(g, n, std::move(s), std::move(m));
}

Json cohom_to_json(const CohomClass& c) {
  Json bits = Json::array();
  for (Eigen::Index k = 0; k < c.bits.size(); ++k) bits.push_back(c.bits(k));
  return bits;
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(integer_to_json(v(k)));
  return out;
}

Json factors_to_json(const std::vector<TransvectionFactor>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back({{"v", vector_to_json(f.v.coords)}, {"k", integer_to_json(f.power)}});
  return out;
}

Json move_to_json(const Move& m) {
  if (const auto* c = std::get_if<ConnectSum>(&m))
    return {{"move", "connect_sum"}, {"target", basis_name(c->target)}, {"helper", c->helper}, {"sign", c->sign}};
  if (const auto* t = std::get_if<ArcParityTwist>(&m)) return {{"move", "arc_parity_twist"}, {"j1", t->j1}, {"j2", t->j2}};
  return {{"move", "boundary_twist"}, {"j", std::get<BoundaryTwist>(m).j}};
}

Json report_to_json(const StructureReport& r) {
  Json j;
  if (const auto* even = std::get_if<EvenRegime>(&r.regime)) {
    Json q = Json::array();
    for (Eigen::Index k = 0; k < even->q.values.size(); ++k) q.push_back(even->q.values(k));
    j["regime"] = "even";
    j["q"] = q;
    j["arf"] = even->arf;
  } else {
    const auto& odd = std::get<OddRegime>(r.regime);
    Json v = Json::array();
    for (Eigen::Index k = 0; k < odd.v_bar.size(); ++k) v.push_back(odd.v_bar(k));
    j["regime"] = "odd";
    j["v_bar"] = v;
  }
  j["r"] = r.r;
  if (r.mod2_kernel_order) j["mod2_kernel_order"] = *r.mod2_kernel_order;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace framedhom
