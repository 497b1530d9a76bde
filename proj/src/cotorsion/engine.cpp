#include "hearts/cotorsion/engine.hpp"

#include "hearts/error.hpp"
#include "hearts/homkit/hom.hpp"

namespace hearts::cotorsion {

namespace {

Ses checked_ses(const Morphism& f, const Morphism& g, const std::string& cell) {
  try {
    return quiver::validate_ses(f, g);
  } catch (const Error& e) {
    throw Error(ErrorKind::ConstructionFailed, cell + ": " + e.what());
  }
}

void require(bool ok, const std::string& cell) {
  if (!ok) throw Error(ErrorKind::ConstructionFailed, "diagram cell " + cell + " failed");
}

}  // namespace

std::shared_ptr<const PlusData> construct_plus(const CotorsionPair& pair, const Representation& b) {
  auto d = std::make_shared<PlusData>();
  d->b = b;
  d->seq_right = special_seq(pair, b, SeqSide::Epi);
  d->seq_w = special_seq(pair, d->seq_right.ses.middle(), SeqSide::Mono);
  require(homkit::in_add(d->seq_w.ses.middle(), pair.w), "W0 in add(W)");
  d->square = quiver::pushout(d->u_map(), d->w_prime());
  d->alpha = d->square.to_b;
  d->w_map = d->square.to_c;
  d->bplus = d->square.corner;
  const Representation& u0 = d->seq_w.ses.right();
  Morphism to_u0 = d->square.induced_from(Morphism::zero(b, u0), d->seq_w.ses.g);
  d->coker_seq = checked_ses(d->alpha, to_u0, "B -> B+ -> U0");
  d->w_seq = checked_ses(compose(d->w_prime(), d->seq_right.ses.f), d->w_map, "V_B -> W0 -> B+");
  require(compose(d->alpha, d->u_map()) == compose(d->w_map, d->w_prime()), "pushout square");
  return d;
}

std::shared_ptr<const MinusData> construct_minus(const CotorsionPair& pair, const Representation& b) {
  auto d = std::make_shared<MinusData>();
  d->b = b;
  d->seq_left = special_seq(pair, b, SeqSide::Mono);
  d->seq_w = special_seq(pair, d->seq_left.ses.middle(), SeqSide::Epi);
  require(homkit::in_add(d->seq_w.ses.middle(), pair.w), "W0 in add(W)");
  d->square = quiver::pullback(d->v_map(), d->w_zero());
  d->gamma = d->square.to_b;
  d->j_map = d->square.to_c;
  d->bminus = d->square.corner;
  const Representation& v0 = d->seq_w.ses.left();
  Morphism from_v0 = d->square.induced_to(Morphism::zero(v0, b), d->seq_w.ses.f);
  d->ker_seq = checked_ses(from_v0, d->gamma, "V0 -> B- -> B");
  d->w_seq = checked_ses(d->j_map, compose(d->seq_left.ses.g, d->w_zero()), "B- -> W0 -> U^B");
  require(compose(d->v_map(), d->gamma) == compose(d->w_zero(), d->j_map), "pullback square");
  return d;
}

PairEngine::PairEngine(CotorsionPair pair, bool cross_check) : pair_(std::move(pair)), cross_check_(cross_check) {}

std::shared_ptr<const PlusData> PairEngine::plus(const Representation& b) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plus_.find(b.key());
    if (it != plus_.end()) return it->second;
  }
  auto d = construct_plus(pair_, b);
  std::lock_guard<std::mutex> lock(mu_);
  return plus_.emplace(b.key(), d).first->second;
}

std::shared_ptr<const MinusData> PairEngine::minus(const Representation& b) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = minus_.find(b.key());
    if (it != minus_.end()) return it->second;
  }
  auto d = construct_minus(pair_, b);
  std::lock_guard<std::mutex> lock(mu_);
  return minus_.emplace(b.key(), d).first->second;
}

Morphism PairEngine::sigma_plus(const Morphism& f) {
  Morphism out = plus_lift(f);
  if (cross_check_ && !sigma_plus_agrees(f)) throw Error(ErrorKind::ConstructionFailed, "sigma+: routes disagree");
  return out;
}

Morphism PairEngine::plus_lift(const Morphism& f) {
  auto a = plus(f.source());
  auto b = plus(f.target());
  const Morphism base = compose(b->alpha, f);
  auto psi = homkit::solve_post(compose(base, a->u_map()), b->w_map);
  if (!psi) throw Error(ErrorKind::ConstructionFailed, "sigma+: lift through W0 -> B+ failed");
  auto phi = homkit::solve_pre(*psi, a->w_prime());
  if (!phi) throw Error(ErrorKind::ConstructionFailed, "sigma+: extension along U_A -> W0 failed");
  return a->square.induced_from(base, compose(b->w_map, *phi));
}

Morphism PairEngine::sigma_minus(const Morphism& f) {
  Morphism out = minus_lift(f);
  if (cross_check_ && !sigma_minus_agrees(f)) throw Error(ErrorKind::ConstructionFailed, "sigma-: routes disagree");
  return out;
}

Morphism PairEngine::minus_lift(const Morphism& f) {
  auto a = minus(f.source());
  auto b = minus(f.target());
  const Morphism base = compose(f, a->gamma);
  auto psi = homkit::solve_pre(compose(b->v_map(), base), a->j_map);
  if (!psi) throw Error(ErrorKind::ConstructionFailed, "sigma-: extension along B- -> W0 failed");
  auto phi = homkit::solve_post(*psi, b->w_zero());
  if (!phi) throw Error(ErrorKind::ConstructionFailed, "sigma-: lift through W0 -> V^B failed");
  return b->square.induced_to(base, compose(*phi, a->j_map));
}

bool PairEngine::sigma_plus_agrees(const Morphism& f) {
  Morphism main = plus_lift(f);
  auto a = plus(f.source());
  auto b = plus(f.target());
  auto other = homkit::solve_pre(compose(b->alpha, f), a->alpha, &pair_.w);
  return other && homkit::stable_equal(main, *other, pair_.w);
}

bool PairEngine::sigma_minus_agrees(const Morphism& f) {
  Morphism main = minus_lift(f);
  auto a = minus(f.source());
  auto b = minus(f.target());
  auto other = homkit::solve_post(compose(f, a->gamma), b->gamma, &pair_.w);
  return other && homkit::stable_equal(main, *other, pair_.w);
}

Representation PairEngine::h_obj(const Representation& b) { return minus(plus(b)->bplus)->bminus; }

Representation PairEngine::h_obj_swapped(const Representation& b) { return plus(minus(b)->bminus)->bplus; }

Morphism PairEngine::h_mor(const Morphism& f) { return sigma_minus(sigma_plus(f)); }

Membership PairEngine::membership(const Representation& b) {
  Membership m;
  m.in_bplus = homkit::in_add(plus(b)->seq_right.ses.middle(), pair_.w);
  m.in_bminus = homkit::in_add(minus(b)->seq_left.ses.middle(), pair_.w);
  return m;
}

bool PairEngine::heart_zero(const Representation& x) const { return homkit::in_add(x, pair_.w); }

}  // namespace hearts::cotorsion
