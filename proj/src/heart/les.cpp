#include "hearts/heart/les.hpp"

#include "hearts/error.hpp"
#include "hearts/homkit/hom.hpp"
#include "hearts/homkit/resolve.hpp"
#include "hearts/quiver/constructions.hpp"

namespace hearts::heart {

namespace {

Morphism need(std::optional<Morphism> m, const char* what) {
  if (!m) throw Error(ErrorKind::ConstructionFailed, std::string("connecting map: ") + what);
  return *m;
}

}  // namespace

Connecting connecting(const Ses& ses) {
  const auto& alg = ses.middle().algebra_ptr();
  const la::Scalar minus_one = ses.middle().field().prime() - 1;
  Connecting out;

  homkit::Cover pc = homkit::projective_cover(ses.right());
  Morphism l = need(homkit::solve_post(pc.map, ses.g), "lift of the cover failed");
  out.h_prime = need(homkit::solve_post(compose(l, pc.omega_map), ses.f), "restriction to the syzygy failed");
  quiver::DirectSum left = quiver::direct_sum(alg, {pc.map.source(), ses.left()});
  Morphism lf = compose(left.injections[0], pc.omega_map.scaled(minus_one)) + compose(left.injections[1], out.h_prime);
  Morphism lg = compose(l, left.projections[0]) + compose(ses.f, left.projections[1]);
  out.left_aux = quiver::validate_ses(lf, lg);

  homkit::Cover ia = homkit::injective_envelope(ses.left());
  Morphism e = need(homkit::solve_pre(ia.map, ses.f), "extension into the envelope failed");
  out.h = need(homkit::solve_pre(compose(ia.omega_map, e), ses.g), "descent to the cosyzygy failed");
  quiver::DirectSum right = quiver::direct_sum(alg, {ia.map.target(), ses.right()});
  Morphism rf = compose(right.injections[0], e) + compose(right.injections[1], ses.g);
  Morphism rg = compose(ia.omega_map.scaled(minus_one), right.projections[0]) + compose(out.h, right.projections[1]);
  out.right_aux = quiver::validate_ses(rf, rg);
  return out;
}

bool LesReport::all_exact() const {
  for (bool b : exact)
    if (!b) return false;
  return true;
}

LesReport les_window(PairEngine& engine, const Ses& ses) {
  Connecting c = connecting(ses);
  const std::array<Morphism, 8> raw{homkit::syzygy_map(ses.f), homkit::syzygy_map(ses.g), c.h_prime, ses.f,
                                    ses.g, c.h, homkit::cosyzygy_map(ses.f), homkit::cosyzygy_map(ses.g)};
  LesReport r;
  for (std::size_t i = 0; i < 8; ++i) r.maps[i] = engine.h_mor(raw[i]);
  for (std::size_t i = 0; i < 8; ++i) r.terms[i] = r.maps[i].source();
  r.terms[8] = r.maps[7].target();
  for (std::size_t i = 0; i < 7; ++i) r.exact[i] = exact_at(engine, r.maps[i], r.maps[i + 1]);
  return r;
}

bool right_exact_shape(PairEngine& engine, const Ses& ses) {
  homkit::Cover pc = homkit::projective_cover(ses.right());
  Morphism l = need(homkit::solve_post(pc.map, ses.g), "lift of the cover failed");
  Morphism x = need(homkit::solve_post(compose(l, pc.omega_map), ses.f), "restriction to the syzygy failed");
  Morphism hf = engine.h_mor(ses.f);
  return exact_at(engine, engine.h_mor(x), hf) && heart_mono_epi(engine, hf).epi;
}

bool left_exact_shape(PairEngine& engine, const Ses& ses) {
  homkit::Cover iv = homkit::injective_envelope(ses.left());
  Morphism d = need(homkit::solve_pre(iv.map, ses.f), "extension into the envelope failed");
  Morphism y = need(homkit::solve_pre(compose(iv.omega_map, d), ses.g), "descent to the cosyzygy failed");
  Morphism hg = engine.h_mor(ses.g);
  return exact_at(engine, hg, engine.h_mor(y)) && heart_mono_epi(engine, hg).mono;
}

}  // namespace hearts::heart
