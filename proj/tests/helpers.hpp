#pragma once

#include <framedhom/framing.hpp>

#include <initializer_list>
#include <optional>

namespace testing {

using namespace framedhom;

inline IntVector ints(std::initializer_list<long> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

inline AbsVec abs_vec(std::initializer_list<long> values) { return AbsVec(ints(values)); }
inline RelVec rel_vec(std::initializer_list<long> values) { return RelVec(ints(values)); }
inline PunctVec punct_vec(std::initializer_list<long> values) { return PunctVec(ints(values)); }

inline Framing framing(int g, std::vector<long> kappa, std::initializer_list<long> wx, std::initializer_list<long> wy,
                       std::optional<std::initializer_list<long>> arc2 = std::nullopt) {
  std::optional<IntVector> a;
  if (arc2) a = ints(*arc2);
  return Framing(SurfaceSpec(g, std::move(kappa)), ints(wx), ints(wy), a);
}

inline Mod2Vector bits(std::initializer_list<int> values) {
  Mod2Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (int x : values) v(i++) = x;
  return v;
}

}  // namespace testing
