#pragma once

#include <string>

#include "errors.hpp"

namespace qknot {

enum class KnotId { FourOne, FiveTwo, Pretzel237 };

enum class Side { Inside, Outside };

inline int series_rank(KnotId k) {
  switch (k) {
    case KnotId::FourOne: return 2;
    case KnotId::FiveTwo: return 3;
    case KnotId::Pretzel237: return 6;
  }
  return 0;
}

inline int knot_lattice_den(KnotId k) { return k == KnotId::Pretzel237 ? 2 : 1; }

inline std::string knot_name(KnotId k) {
  switch (k) {
    case KnotId::FourOne: return "4_1";
    case KnotId::FiveTwo: return "5_2";
    case KnotId::Pretzel237: return "(-2,3,7)";
  }
  return "?";
}

// Which member of a knot's series family, which descendant, which side.
struct SeriesSpec {
  KnotId knot = KnotId::FourOne;
  int family = 0;      // j
  long descendant = 0; // m
  Side side = Side::Inside;

  void validate() const {
    int r = (knot == KnotId::FourOne) ? 2 : (knot == KnotId::FiveTwo ? 3 : 6);
    if (family < 0 || family >= r) throw error("SeriesSpec: family index out of range");
    if (knot == KnotId::Pretzel237 && descendant != 0)
      throw error("SeriesSpec: (-2,3,7) supports descendant m = 0 only");
  }
};

}  // namespace qknot
