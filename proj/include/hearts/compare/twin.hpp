#pragma once

#include <string>
#include <vector>

#include "hearts/compare/duo.hpp"

namespace hearts::compare {

// Two pairs with u1 inside add(u2); wt holds the generators of u2 lying in
// add(v1).
struct TwinPair {
  PairEngine* first = nullptr;
  PairEngine* second = nullptr;
  homkit::Subcategory wt;
};

// Throws InvalidPair unless u1 lies in add(u2) and Ext1(u1, v2) vanishes.
TwinPair make_twin(PairEngine& first, PairEngine& second);

// V -> W -> B with W in add(wt), V in add(v2).
bool in_twin_bplus(const TwinPair& tp, const Representation& b);
// B -> W -> U with W in add(wt), U in add(u1).
bool in_twin_bminus(const TwinPair& tp, const Representation& b);
inline bool in_twin_heart(const TwinPair& tp, const Representation& b) {
  return in_twin_bplus(tp, b) && in_twin_bminus(tp, b);
}

struct TwinReport {
  std::vector<std::string> heart;          // fixtures in the twin heart
  std::vector<std::string> nonzero_heart;  // those outside add(wt)
  bool zero_detection = true;  // H_k(f) vanishes iff f factors through wt
  bool faithful = true;        // H_k injective on stable Hom modulo wt
  bool zero_remark = true;     // a zero component heart forces a zero twin heart
  bool inclusions_checked = false;
  bool inclusions = true;      // heart1 in add(u2), heart2 in add(v1)
  std::vector<std::string> failures;
  bool ok() const { return zero_detection && faithful && zero_remark && inclusions; }
};

TwinReport twin_suite(const TwinPair& tp, const ObjectSet& all);

}  // namespace hearts::compare
