#include "hearts/cotorsion/reflection.hpp"

#include "hearts/error.hpp"
#include "hearts/homkit/hom.hpp"
#include "hearts/homkit/iso.hpp"
#include "hearts/homkit/resolve.hpp"

namespace hearts::cotorsion {

using homkit::solve_post;
using homkit::solve_pre;

ReflectionReport verify_reflection(PairEngine& engine, const Ses& seq, ReflectionSide side) {
  ReflectionReport r;
  const CotorsionPair& pair = engine.pair();
  if (side == ReflectionSide::Reflection) {
    const Representation& b = seq.left();
    r.end_in_class = homkit::in_add(seq.right(), pair.u);
    r.middle_in_side = engine.in_bplus(seq.middle());
    homkit::Cover cov = homkit::projective_cover(seq.right());
    auto p = solve_post(cov.map, seq.g);
    auto x = p ? solve_post(compose(*p, cov.omega_map), seq.f) : std::nullopt;
    r.connecting_factors = x && homkit::factors_through(*x, pair.u);
    auto to_plus = solve_pre(engine.plus(b)->alpha, seq.f, &pair.w);
    r.matches_construction = to_plus && homkit::is_stable_iso(*to_plus, pair.w);
  } else {
    const Representation& b = seq.right();
    r.end_in_class = homkit::in_add(seq.left(), pair.v);
    r.middle_in_side = engine.in_bminus(seq.middle());
    homkit::Cover env = homkit::injective_envelope(seq.left());
    auto d = solve_pre(env.map, seq.f);
    auto y = d ? solve_pre(compose(env.omega_map, *d), seq.g) : std::nullopt;
    r.connecting_factors = y && homkit::factors_through(*y, pair.v);
    auto from_minus = solve_post(engine.minus(b)->gamma, seq.g, &pair.w);
    r.matches_construction = from_minus && homkit::is_stable_iso(*from_minus, pair.w);
  }
  r.ok = r.end_in_class && r.middle_in_side && r.connecting_factors && r.matches_construction;
  if (!r.end_in_class) r.detail += "end term outside the class; ";
  if (!r.middle_in_side) r.detail += "middle term outside the side; ";
  if (!r.connecting_factors) r.detail += "connecting map does not factor; ";
  if (!r.matches_construction) r.detail += "middle term not stably isomorphic to the construction; ";
  return r;
}

Morphism eta_direct(PairEngine& engine, const Representation& b) {
  const Subcategory& w = engine.w();
  auto mp = engine.plus(b);
  auto mm = engine.minus(b);
  auto x = engine.plus(mm->bminus);
  auto y = engine.minus(mp->bplus);
  auto theta = solve_post(compose(mp->alpha, mm->gamma), y->gamma, &w);
  if (!theta) throw Error(ErrorKind::ConstructionFailed, "eta: lift through gamma failed");
  auto eta = solve_pre(*theta, x->alpha, &w);
  if (!eta) throw Error(ErrorKind::ConstructionFailed, "eta: extension along alpha failed");
  return *eta;
}

EtaReport eta_check(PairEngine& engine, const Representation& b, const std::vector<Representation>& partners) {
  const Subcategory& w = engine.w();
  EtaReport rep;
  auto mp = engine.plus(b);
  auto mm = engine.minus(b);
  auto x = engine.plus(mm->bminus);
  auto y = engine.minus(mp->bplus);
  rep.eta = eta_direct(engine, b);
  rep.iso = homkit::is_stable_iso(rep.eta, w);

  // Pullback route: V0 -> I0 -> cosyzygy, the map t out of B+, and Q.
  const Morphism& v = mm->ker_seq.f;
  homkit::Cover env = homkit::injective_envelope(v.source());
  auto d = solve_pre(env.map, v);
  auto y0 = d ? solve_pre(compose(env.omega_map, *d), mm->gamma) : std::nullopt;
  std::optional<Morphism> t;
  if (y0) {
    auto vp = solve_pre(*y0, mm->v_map());
    auto v0 = solve_pre(mm->v_map(), mp->alpha);
    if (vp && v0) t = compose(*vp, *v0);
    else t = solve_pre(*y0, mp->alpha);
  }
  if (t && compose(*t, mp->alpha) == *y0) {
    quiver::Square q = quiver::pullback(*t, env.omega_map);
    Morphism k = q.induced_to(compose(mp->alpha, mm->gamma), *d);
    rep.q_in_heart = engine.in_heart(q.corner);
    auto a1 = solve_post(q.to_b, y->gamma, &w);
    auto b1 = solve_pre(k, x->alpha, &w);
    rep.routes_agree = a1 && b1 && homkit::stable_equal(compose(*a1, *b1), rep.eta, w);
  }

  for (const auto& c : partners) {
    Morphism eta_c = eta_direct(engine, c);
    for (const auto& f : homkit::hom_basis(b, c)->basis) {
      Morphism left = compose(eta_c, engine.sigma_plus(engine.sigma_minus(f)));
      Morphism right = compose(engine.sigma_minus(engine.sigma_plus(f)), rep.eta);
      ++rep.naturality_checked;
      if (!homkit::stable_equal(left, right, w)) ++rep.naturality_failed;
    }
  }
  return rep;
}

}  // namespace hearts::cotorsion
