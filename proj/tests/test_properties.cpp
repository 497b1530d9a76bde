#include "doctest.h"

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "hearts/cotorsion/reflection.hpp"
#include "hearts/heart/sequences.hpp"
#include "hearts/homkit/hom.hpp"
#include "hearts/homkit/iso.hpp"
#include "hearts/homkit/resolve.hpp"
#include "hearts/quiver/constructions.hpp"

using namespace hearts;
using namespace hearts::quiver;
using testing_support::all_pairs;
using testing_support::engine;
using testing_support::workspace;

namespace {

Morphism random_morphism(const Representation& x, const Representation& y, std::mt19937_64& rng) {
  homkit::HomPtr h = homkit::hom_basis(x, y);
  std::uniform_int_distribution<la::Scalar> dist(0, x.field().prime() - 1);
  la::Vec c(h->dim());
  for (auto& v : c) v = dist(rng);
  return h->combine(c);
}

// x lies in add(c) iff it is isomorphic to a sum of generators; searched over
// multiplicity vectors whose dimension vectors add up to that of x.
bool in_add_by_search(const Representation& x, const homkit::Subcategory& c) {
  if (x.is_zero()) return true;
  const auto& gens = c.generators();
  std::vector<std::size_t> mult(gens.size(), 0);
  std::vector<std::size_t> dims(x.vertex_count(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    for (std::size_t v = 0; v < dims.size(); ++v)
      if (dims[v] > x.dim(v)) return false;
    if (i == gens.size()) {
      if (dims != x.dims()) return false;
      std::vector<Representation> parts;
      for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t m = 0; m < mult[k]; ++m) parts.push_back(gens[k]);
      return homkit::is_isomorphic(direct_sum_object(x.algebra_ptr(), parts), x);
    }
    for (std::size_t m = 0;; ++m) {
      mult[i] = m;
      if (rec(i + 1)) return true;
      bool over = false;
      for (std::size_t v = 0; v < dims.size(); ++v) {
        dims[v] += gens[i].dim(v);
        over = over || dims[v] > x.dim(v);
      }
      if (over) {
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] -= (m + 1) * gens[i].dim(v);
        mult[i] = 0;
        return false;
      }
    }
  };
  return rec(0);
}

}  // namespace

TEST_CASE("property: in_span succeeds exactly when the rank does not grow") {
  std::mt19937_64 rng(11);
  la::Field f(7);
  std::uniform_int_distribution<la::Scalar> dist(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5, k = rng() % 4;
    la::Mat basis(f, n, k);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < k; ++c) basis(r, c) = dist(rng) * (rng() % 3 != 0);
    la::Vec v(n);
    for (auto& x : v) x = dist(rng) * (rng() % 2);
    la::Mat grown = la::hcat(basis, la::Mat::from_columns(f, n, {v}));
    const bool grows = la::rank(grown) > la::rank(basis);
    auto coeffs = la::in_span(v, basis);
    CHECK(coeffs.has_value() == !grows);
    if (coeffs) {
      la::Vec back(n, 0);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t r = 0; r < n; ++r) back[r] = f.add(back[r], f.mul((*coeffs)[c], basis(r, c)));
      CHECK(back == v);
    }
  }
}

TEST_CASE("property: add membership agrees with a summand search") {
  for (const char* name : {"a2", "ex61", "ex62"}) {
    const auto& w = workspace(name);
    std::vector<Representation> objects = w.catalog().modules();
    const auto& mods = w.catalog().modules();
    for (std::size_t i = 0; i + 1 < mods.size(); i += 3)
      objects.push_back(direct_sum_object(w.algebra(), {mods[i], mods[i + 1]}));
    for (const auto& s : w.subcategories()) {
      const auto& c = w.subcategory(s.name);
      for (const auto& x : objects) {
        CAPTURE(name);
        CAPTURE(s.name);
        CHECK(homkit::in_add(x, c) == in_add_by_search(x, c));
      }
    }
  }
}

TEST_CASE("property: hereditary long exact sequence dimension count") {
  const auto& w = workspace("a2");
  const auto& mods = w.catalog().modules();
  auto seqs = heart::random_conflations(mods, w.catalog_names(), 40, 5);
  REQUIRE(!seqs.empty());
  for (const auto& s : seqs) {
    CAPTURE(s.label);
    const auto& a = s.ses.left();
    const auto& b = s.ses.middle();
    const auto& c = s.ses.right();
    for (const auto& y : mods) {
      const long long hom = static_cast<long long>(homkit::hom_dim(a, y)) - static_cast<long long>(homkit::hom_dim(b, y)) +
                            static_cast<long long>(homkit::hom_dim(c, y));
      const long long ext = static_cast<long long>(homkit::ext1_dim(c, y)) -
                            static_cast<long long>(homkit::ext1_dim(b, y)) + static_cast<long long>(homkit::ext1_dim(a, y));
      CHECK(hom == ext);
    }
  }
}

TEST_CASE("property: rank and nullity add up on random morphisms") {
  std::mt19937_64 rng(3);
  for (const char* name : {"ex61", "ex62"}) {
    const auto& mods = workspace(name).catalog().modules();
    for (int trial = 0; trial < 60; ++trial) {
      const auto& x = mods[rng() % mods.size()];
      const auto& y = mods[rng() % mods.size()];
      Morphism f = random_morphism(x, y, rng);
      Kernel k = kernel(f);
      for (std::size_t v = 0; v < x.vertex_count(); ++v)
        CHECK(k.inclusion.source().dim(v) + la::rank(f.map(v)) == x.dim(v));
      CHECK(compose(f, k.inclusion).is_zero());
      Cokernel q = cokernel(f);
      CHECK(compose(q.projection, f).is_zero());
    }
  }
}

TEST_CASE("property: direct sums split back into their summands") {
  std::mt19937_64 rng(8);
  const auto& w = workspace("ex62");
  const auto& mods = w.catalog().modules();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Representation> parts;
    for (std::size_t k = 0, n = 1 + rng() % 3; k < n; ++k) parts.push_back(mods[rng() % mods.size()]);
    DirectSum s = direct_sum(w.algebra(), parts);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = 0; j < parts.size(); ++j) {
        Morphism pj = compose(s.projections[i], s.injections[j]);
        if (i == j) CHECK(pj == Morphism::identity(parts[i]));
        else CHECK(pj.is_zero());
      }
  }
}

TEST_CASE("property: a pushout along an inflation is also a pullback") {
  std::mt19937_64 rng(21);
  for (const char* name : {"a2", "ex61", "ex62"}) {
    const auto& mods = workspace(name).catalog().modules();
    int done = 0;
    for (int trial = 0; trial < 80 && done < 12; ++trial) {
      const auto& a = mods[rng() % mods.size()];
      const auto& b = mods[rng() % mods.size()];
      const auto& c = mods[rng() % mods.size()];
      auto f = heart::random_mono(a, b, rng());
      if (!f) continue;
      Morphism g = random_morphism(a, c, rng);
      Square po = pushout(*f, g);
      validate_ses(po.to_c, cokernel(po.to_c).projection);
      Square pb = pullback(po.to_b, po.to_c);
      CHECK(homkit::is_isomorphic(pb.corner, a));
      ++done;
    }
    CHECK(done > 0);
  }
}

TEST_CASE("property: sigma-plus vanishes exactly on maps through U") {
  std::mt19937_64 rng(17);
  for (const auto& [ws, name] : all_pairs()) {
    auto& eng = engine(ws, name);
    const auto& mods = workspace(ws).catalog().modules();
    for (int trial = 0; trial < 25; ++trial) {
      const auto& x = mods[rng() % mods.size()];
      const auto& y = mods[rng() % mods.size()];
      Morphism f = random_morphism(x, y, rng);
      Morphism fp = eng.sigma_plus(f);
      CAPTURE(ws);
      CAPTURE(name);
      CHECK(homkit::factors_through(fp, eng.w()) == homkit::factors_through(f, eng.pair().u));
    }
  }
}

TEST_CASE("property: padding a reflection sequence by W keeps the middle term") {
  for (const auto& [ws, name] : all_pairs()) {
    auto& eng = engine(ws, name);
    if (eng.w().size() == 0) continue;
    const Representation& wgen = eng.w().generators().front();
    for (const auto& b : workspace(ws).catalog().modules()) {
      const Ses& seq = eng.plus(b)->coker_seq;
      const auto& alg = b.algebra_ptr();
      DirectSum mid = direct_sum(alg, {seq.middle(), wgen});
      DirectSum end = direct_sum(alg, {seq.right(), wgen});
      Morphism f = compose(mid.injections[0], seq.f);
      Morphism g = block_morphism(mid, end, {{seq.g, Morphism::zero(wgen, seq.right())},
                                             {Morphism::zero(seq.middle(), wgen), Morphism::identity(wgen)}});
      Ses padded = validate_ses(f, g);
      auto r = cotorsion::verify_reflection(eng, padded, cotorsion::ReflectionSide::Reflection);
      CAPTURE(ws);
      CAPTURE(name);
      CAPTURE(r.detail);
      CHECK(r.ok);
      CHECK(r.matches_construction);
    }
  }
}
