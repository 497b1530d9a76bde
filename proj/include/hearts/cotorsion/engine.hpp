#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "hearts/cotorsion/pair.hpp"
#include "hearts/quiver/constructions.hpp"

namespace hearts::cotorsion {

// V_B -> U_B -> B, then U_B -> W0 -> U0, and B+ as the pushout of
// u_B along w'.
struct PlusData {
  Representation b;
  SpecialSeq seq_right;   // V_B -> U_B -> B
  SpecialSeq seq_w;       // U_B -> W0 -> U0
  quiver::Square square;  // pushout of (u_B, w')
  Morphism alpha;         // B -> B+
  Morphism w_map;         // W0 -> B+
  Representation bplus;
  Ses coker_seq;          // B -> B+ -> U0
  Ses w_seq;              // V_B -> W0 -> B+

  const Morphism& u_map() const { return seq_right.ses.g; }
  const Morphism& w_prime() const { return seq_w.ses.f; }
};

// B -> V^B -> U^B, then V0 -> W0 -> V^B, and B- as the pullback of
// v^B along w0.
struct MinusData {
  Representation b;
  SpecialSeq seq_left;  // B -> V^B -> U^B
  SpecialSeq seq_w;     // V0 -> W0 -> V^B
  quiver::Square square;
  Morphism gamma;       // B- -> B
  Morphism j_map;       // B- -> W0
  Representation bminus;
  Ses ker_seq;          // V0 -> B- -> B
  Ses w_seq;            // B- -> W0 -> U^B

  const Morphism& v_map() const { return seq_left.ses.f; }
  const Morphism& w_zero() const { return seq_w.ses.g; }
};

struct Membership {
  bool in_bplus = false, in_bminus = false;
  bool in_heart() const { return in_bplus && in_bminus; }
};

// Construction cache and the reflection functors for one pair.
class PairEngine {
 public:
  explicit PairEngine(CotorsionPair pair, bool cross_check = false);

  const CotorsionPair& pair() const { return pair_; }
  const Subcategory& w() const { return pair_.w; }

  std::shared_ptr<const PlusData> plus(const Representation& b);
  std::shared_ptr<const MinusData> minus(const Representation& b);

  // f+ with f+ alpha_A = alpha_B f.
  Morphism sigma_plus(const Morphism& f);
  // f- with gamma_B f- = f gamma_A.
  Morphism sigma_minus(const Morphism& f);
  // Independent solutions of the defining identities modulo W, compared
  // with the lift-extend constructions.
  bool sigma_plus_agrees(const Morphism& f);
  bool sigma_minus_agrees(const Morphism& f);

  Representation h_obj(const Representation& b);
  Morphism h_mor(const Morphism& f);
  // H by the opposite order of the two functors.
  Representation h_obj_swapped(const Representation& b);

  Membership membership(const Representation& b);
  bool in_bplus(const Representation& b) { return membership(b).in_bplus; }
  bool in_bminus(const Representation& b) { return membership(b).in_bminus; }
  bool in_heart(const Representation& b) { return membership(b).in_heart(); }
  bool heart_zero(const Representation& x) const;

  bool cross_check() const { return cross_check_; }

 private:
  Morphism plus_lift(const Morphism& f);
  Morphism minus_lift(const Morphism& f);

  CotorsionPair pair_;
  bool cross_check_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const PlusData>> plus_;
  std::map<std::string, std::shared_ptr<const MinusData>> minus_;
};

std::shared_ptr<const PlusData> construct_plus(const CotorsionPair& pair, const Representation& b);
std::shared_ptr<const MinusData> construct_minus(const CotorsionPair& pair, const Representation& b);

}  // namespace hearts::cotorsion
