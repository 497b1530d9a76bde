#include "hearts/heart/heart.hpp"

#include "hearts/error.hpp"
#include "hearts/homkit/hom.hpp"

namespace hearts::heart {

HeartKc heart_kc(PairEngine& engine, const Morphism& mu, KcSide side) {
  const auto& w = engine.w();
  HeartKc out;
  if (side == KcSide::Kernel) {
    auto pz = engine.plus(mu.target());
    quiver::Square sq = quiver::pullback(mu, pz->u_map());
    out.raw = sq.corner;
    out.raw_map = sq.to_b;
    auto kp = engine.plus(out.raw);
    auto lift = homkit::solve_pre(out.raw_map, kp->alpha, &w);
    if (!lift) throw Error(ErrorKind::ConstructionFailed, "heart kernel: extension along alpha failed");
    auto km = engine.minus(kp->bplus);
    out.object = km->bminus;
    out.map = compose(*lift, km->gamma);
  } else {
    auto my = engine.minus(mu.source());
    quiver::Square sq = quiver::pushout(mu, my->v_map());
    out.raw = sq.corner;
    out.raw_map = sq.to_b;
    auto cm = engine.minus(out.raw);
    auto lift = homkit::solve_post(out.raw_map, cm->gamma, &w);
    if (!lift) throw Error(ErrorKind::ConstructionFailed, "heart cokernel: lift through gamma failed");
    auto cp = engine.plus(cm->bminus);
    out.object = cp->bplus;
    out.map = compose(cp->alpha, *lift);
  }
  return out;
}

MonoEpi heart_mono_epi(PairEngine& engine, const Morphism& mu) {
  MonoEpi r;
  HeartKc k = heart_kc(engine, mu, KcSide::Kernel);
  HeartKc c = heart_kc(engine, mu, KcSide::Cokernel);
  r.mono = engine.heart_zero(k.object);
  r.epi = engine.heart_zero(c.object);
  r.mono_class = homkit::in_add(k.raw, engine.pair().v);
  r.epi_class = homkit::in_add(c.raw, engine.pair().u);
  return r;
}

bool exact_at(PairEngine& engine, const Morphism& phi, const Morphism& psi) {
  const auto& w = engine.w();
  if (!homkit::factors_through(compose(psi, phi), w)) return false;
  HeartKc k = heart_kc(engine, psi, KcSide::Kernel);
  auto into = homkit::solve_post(phi, k.map, &w);
  if (!into) return false;
  HeartKc c = heart_kc(engine, *into, KcSide::Cokernel);
  return engine.heart_zero(c.object);
}

bool verify_half_exact(PairEngine& engine, const Ses& ses) {
  return exact_at(engine, engine.h_mor(ses.f), engine.h_mor(ses.g));
}

HeartImage heart_image(PairEngine& engine, const Morphism& mu) {
  HeartKc c = heart_kc(engine, mu, KcSide::Cokernel);
  HeartKc k = heart_kc(engine, c.map, KcSide::Kernel);
  auto co = homkit::solve_post(mu, k.map, &engine.w());
  if (!co) throw Error(ErrorKind::ConstructionFailed, "heart image: factorization failed");
  return HeartImage{k.object, *co, k.map};
}

std::vector<std::size_t> heart_members(PairEngine& engine, const std::vector<Representation>& candidates) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (engine.in_heart(candidates[i]) && !engine.heart_zero(candidates[i])) out.push_back(i);
  return out;
}

}  // namespace hearts::heart
