#include "hearts/heart/oracle.hpp"

#include <random>

#include "hearts/cotorsion/engine.hpp"
#include "hearts/error.hpp"
#include "hearts/homkit/resolve.hpp"
#include "hearts/quiver/constructions.hpp"

namespace hearts::heart {

namespace {

using homkit::Subcategory;

// Multisets of generator indices with 1..cap elements.
void multisets(std::size_t n, std::size_t cap, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (cur.size() == cap) return;
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, cap, i, cur, out);
    cur.pop_back();
  }
}

bool summand_of(const Representation& b, const Representation& e) {
  for (std::size_t v = 0; v < b.vertex_count(); ++v)
    if (b.dim(v) > e.dim(v)) return false;
  return homkit::in_add(b, Subcategory("middle", {e}));
}

std::string describe(const Subcategory& c, const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i : idx) s += (s.empty() ? "" : " (+) ") + c.generator_names()[i];
  return s.empty() ? "0" : s;
}

}  // namespace

bool add_star_oracle(const cotorsion::CotorsionPair& pair, const Representation& b, std::size_t cap,
                     std::uint64_t seed, std::string* witness) {
  auto say = [&](const std::string& s) {
    if (witness) *witness = s;
  };
  if (homkit::in_add(b, pair.u)) {
    say("b -> b -> 0");
    return true;
  }
  if (homkit::in_add(b, pair.v)) {
    say("0 -> b -> b");
    return true;
  }
  const auto& alg = b.algebra_ptr();
  const auto& ug = pair.u.generators();
  const auto& vg = pair.v.generators();
  std::vector<std::vector<std::size_t>> ext(vg.size(), std::vector<std::size_t>(ug.size()));
  for (std::size_t i = 0; i < vg.size(); ++i)
    for (std::size_t j = 0; j < ug.size(); ++j) ext[i][j] = homkit::ext1_dim(vg[i], ug[j]);

  std::vector<std::vector<std::size_t>> us, vs;
  std::vector<std::size_t> cur;
  multisets(ug.size(), cap, 0, cur, us);
  multisets(vg.size(), cap, 0, cur, vs);
  std::mt19937_64 rng(seed);
  for (const auto& vi : vs)
    for (const auto& ui : us) {
      bool any = false;
      for (std::size_t a : vi)
        for (std::size_t c : ui) any = any || ext[a][c] > 0;
      if (!any) continue;
      std::vector<Representation> up, vp;
      for (std::size_t c : ui) up.push_back(ug[c]);
      for (std::size_t a : vi) vp.push_back(vg[a]);
      Representation uo = quiver::direct_sum_object(alg, up);
      Representation vo = quiver::direct_sum_object(alg, vp);
      bool fits = true;
      for (std::size_t v = 0; v < b.vertex_count(); ++v) fits = fits && b.dim(v) <= uo.dim(v) + vo.dim(v);
      if (!fits) continue;
      homkit::ExtSpace space(vo, uo);
      std::vector<la::Vec> samples;
      for (std::size_t k = 0; k < space.dim(); ++k) {
        la::Vec e(space.dim(), 0);
        e[k] = 1;
        samples.push_back(e);
      }
      if (space.dim() > 1) {
        samples.push_back(la::Vec(space.dim(), 1));
        std::uniform_int_distribution<la::Scalar> dist(0, b.field().prime() - 1);
        for (int r = 0; r < 4; ++r) {
          la::Vec e(space.dim());
          for (auto& x : e) x = dist(rng);
          samples.push_back(e);
        }
      }
      for (const auto& s : samples) {
        Representation middle = space.extension(s).middle();
        if (summand_of(b, middle)) {
          say(describe(pair.u, ui) + " -> b (+) Y -> " + describe(pair.v, vi));
          return true;
        }
      }
    }
  return false;
}

AddStarResult add_star_test(PairEngine& engine, const Representation& b, std::size_t cap, std::uint64_t seed) {
  AddStarResult r;
  r.via_h = engine.heart_zero(engine.h_obj(b));
  r.via_oracle = add_star_oracle(engine.pair(), b, cap, seed, &r.witness);
  if (!r.via_oracle) {
    // Witness shape from the construction: U_b -> b (+) W0 -> b+, valid when b+ is in add(v).
    auto pd = engine.plus(b);
    if (homkit::in_add(pd->bplus, engine.pair().v)) {
      quiver::DirectSum s = quiver::direct_sum(b.algebra_ptr(), {b, pd->seq_w.ses.middle()});
      const la::Scalar minus_one = b.field().prime() - 1;
      Morphism f = compose(s.injections[0], pd->u_map()) + compose(s.injections[1], pd->w_prime().scaled(minus_one));
      Morphism g = compose(pd->alpha, s.projections[0]) + compose(pd->w_map, s.projections[1]);
      try {
        quiver::validate_ses(f, g);
        r.via_oracle = homkit::in_add(pd->seq_right.ses.middle(), engine.pair().u);
        r.witness = "U_b -> b (+) W0 -> b+";
      } catch (const Error&) {
      }
    }
  }
  r.inconclusive = r.via_h && !r.via_oracle;
  return r;
}

}  // namespace hearts::heart
