#include "doctest.h"

#include "fixtures.hpp"
#include "hearts/cotorsion/reflection.hpp"
#include "hearts/error.hpp"
#include "hearts/homkit/hom.hpp"
#include "hearts/homkit/iso.hpp"
#include "hearts/homkit/resolve.hpp"
#include "hearts/quiver/standard.hpp"

using namespace hearts;
using namespace hearts::cotorsion;
using testing_support::all_pairs;
using testing_support::fixture_pair;
using testing_support::workspace;

namespace {

std::vector<std::string> heart_names(const std::string& ws, const std::string& name) {
  const auto& w = workspace(ws);
  PairEngine eng(fixture_pair(ws, name));
  std::vector<std::string> out;
  for (const auto& n : w.catalog_names()) {
    const auto& b = w.module(n);
    if (eng.in_heart(b) && !eng.heart_zero(b)) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("fixture pairs certify") {
  for (const auto& [ws, name] : all_pairs()) {
    CAPTURE(ws);
    CAPTURE(name);
    const auto& w = workspace(ws);
    const auto& e = w.pair(name);
    PairCertificate cert = certify_pair(name, w.subcategory(e.u), w.subcategory(e.v), w.catalog().modules());
    for (const auto& c : cert.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("non-orthogonal classes are rejected") {
  const auto& w = workspace("a2");
  homkit::Subcategory s1("s1", {w.module("S1"), w.module("P1"), w.module("S2")});
  homkit::Subcategory s2("s2", {w.module("S2"), w.module("P1"), w.module("S1")});
  CHECK_THROWS_AS(verify_pair("bad", s1, s2, w.catalog().modules()), Error);
  homkit::Subcategory only_s1("only", {w.module("S1")});
  PairCertificate cert = certify_pair("bad", only_s1, w.subcategory("all"), {});
  CHECK(!cert.ok());
}

TEST_CASE("W is the intersection of the two classes") {
  for (const auto& [ws, name] : all_pairs()) {
    const auto& w = workspace(ws);
    CotorsionPair p = fixture_pair(ws, name);
    for (const auto& b : w.catalog().modules())
      CHECK(homkit::in_add(b, p.w) == (homkit::in_add(b, p.u) && homkit::in_add(b, p.v)));
  }
}

TEST_CASE("special sequences on A2") {
  const auto& w = workspace("a2");
  CotorsionPair p = fixture_pair("a2", "pair2");
  SpecialSeq s = special_seq(p, w.module("S2"), SeqSide::Mono);
  CHECK(homkit::is_isomorphic(s.ses.middle(), w.module("P1")));
  CHECK(homkit::is_isomorphic(s.ses.right(), w.module("S1")));
  SpecialSeq e = special_seq(p, w.module("S1"), SeqSide::Epi);
  CHECK(e.ses.left().is_zero());
  PairEngine eng(p);
  CHECK(!eng.in_bplus(w.module("S2")));
}

TEST_CASE("hearts of the fixture pairs") {
  CHECK(heart_names("a2", "pair1").empty());
  CHECK(heart_names("a2", "pair2").empty());
  for (const char* ws : {"ex61", "ex62"}) {
    const auto& exp = workspace(ws).expected().at("hearts");
    for (const auto& p : workspace(ws).pairs()) {
      CAPTURE(ws);
      CAPTURE(p.name);
      CHECK(heart_names(ws, p.name) == exp.at(p.name).get<std::vector<std::string>>());
    }
  }
}

TEST_CASE("plus and minus diagrams") {
  for (const auto& [ws, name] : all_pairs()) {
    const auto& w = workspace(ws);
    PairEngine eng(fixture_pair(ws, name));
    for (const auto& b : w.catalog().modules()) {
      auto pd = eng.plus(b);
      CHECK(homkit::in_add(pd->coker_seq.right(), eng.pair().u));
      CHECK(homkit::in_add(pd->seq_w.ses.middle(), eng.w()));
      CHECK(eng.in_bplus(pd->bplus));
      auto md = eng.minus(b);
      CHECK(homkit::in_add(md->ker_seq.left(), eng.pair().v));
      CHECK(eng.in_bminus(md->bminus));
      if (eng.in_bminus(b)) CHECK(eng.in_heart(pd->bplus));
      if (eng.in_bplus(b)) CHECK(eng.in_heart(md->bminus));
      if (eng.heart_zero(b)) CHECK(homkit::stably_isomorphic(pd->bplus, b, eng.w()));
    }
  }
}

TEST_CASE("alpha is a left approximation by B+ modulo W") {
  for (const auto& [ws, name] : all_pairs()) {
    const auto& w = workspace(ws);
    PairEngine eng(fixture_pair(ws, name));
    for (const auto& b : w.catalog().modules())
      for (const auto& y : w.catalog().modules()) {
        if (!eng.in_bplus(y)) continue;
        auto pd = eng.plus(b);
        for (const auto& f : homkit::hom_basis(b, y)->basis)
          CHECK(homkit::solve_pre(f, pd->alpha, &eng.w()).has_value());
      }
  }
}

TEST_CASE("sigma on morphisms") {
  for (const auto& [ws, name] : all_pairs()) {
    const auto& w = workspace(ws);
    PairEngine eng(fixture_pair(ws, name), true);
    const auto& mods = w.catalog().modules();
    for (const auto& a : mods) {
      Morphism id = Morphism::identity(a);
      CHECK(homkit::stable_equal(eng.sigma_plus(id), Morphism::identity(eng.plus(a)->bplus), eng.w()));
      CHECK(homkit::stable_equal(eng.sigma_minus(id), Morphism::identity(eng.minus(a)->bminus), eng.w()));
      for (const auto& b : mods)
        for (const auto& f : homkit::hom_basis(a, b)->basis) {
          Morphism fp = eng.sigma_plus(f);
          CHECK(compose(fp, eng.plus(a)->alpha) == compose(eng.plus(b)->alpha, f));
          CHECK(homkit::factors_through(fp, eng.w()) == homkit::factors_through(f, eng.pair().u));
          Morphism fm = eng.sigma_minus(f);
          CHECK(compose(eng.minus(b)->gamma, fm) == compose(f, eng.minus(a)->gamma));
          CHECK(homkit::factors_through(fm, eng.w()) == homkit::factors_through(f, eng.pair().v));
        }
    }
  }
}

TEST_CASE("syzygies of U land in B- and cosyzygies of V in B+") {
  for (const auto& [ws, name] : all_pairs()) {
    PairEngine eng(fixture_pair(ws, name));
    for (const auto& u : eng.pair().u.generators()) CHECK(eng.in_bminus(homkit::syzygy(u)));
    for (const auto& v : eng.pair().v.generators()) CHECK(eng.in_bplus(homkit::cosyzygy(v)));
  }
}

TEST_CASE("constructed sequences are reflection and coreflection sequences") {
  for (const auto& [ws, name] : all_pairs()) {
    const auto& w = workspace(ws);
    PairEngine eng(fixture_pair(ws, name));
    for (const auto& b : w.catalog().modules()) {
      auto r = verify_reflection(eng, eng.plus(b)->coker_seq, ReflectionSide::Reflection);
      CAPTURE(r.detail);
      CHECK(r.ok);
      auto c = verify_reflection(eng, eng.minus(b)->ker_seq, ReflectionSide::Coreflection);
      CAPTURE(c.detail);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("split reflection sequences and a failing middle term") {
  const auto& w = workspace("ex61");
  PairEngine eng(fixture_pair("ex61", "pair1"));
  const auto& u1 = eng.pair().u;
  const auto alg = w.algebra();
  for (const auto& b : w.catalog().modules()) {
    if (!eng.in_bplus(b)) continue;
    for (const auto& u : u1.generators()) {
      quiver::DirectSum s = quiver::direct_sum(alg, {b, u});
      Ses split = quiver::validate_ses(s.injections[0], s.projections[1]);
      CHECK(verify_reflection(eng, split, ReflectionSide::Reflection).ok);
    }
  }
  for (const auto& b : w.catalog().modules()) {
    if (eng.in_bplus(b)) continue;
    quiver::DirectSum s = quiver::direct_sum(alg, {b, u1.generators()[0]});
    Ses split = quiver::validate_ses(s.injections[0], s.projections[1]);
    CHECK(!verify_reflection(eng, split, ReflectionSide::Reflection).middle_in_side);
  }
}

TEST_CASE("H values named in the fixtures") {
  const auto& w = workspace("ex62");
  PairEngine eng(fixture_pair("ex62", "pair1"));
  for (const auto& [obj, vals] : w.expected().at("h_values").at("pair1").items()) {
    Representation target = quiver::direct_sum_object(w.algebra(), [&] {
      std::vector<Representation> v;
      for (const auto& n : vals) v.push_back(w.module(n.get<std::string>()));
      return v;
    }());
    CHECK(homkit::stably_isomorphic(eng.h_obj(w.module(obj)), target, eng.w()));
  }
}

TEST_CASE("both composites agree modulo W") {
  for (const auto& [ws, name] : all_pairs()) {
    const auto& w = workspace(ws);
    PairEngine eng(fixture_pair(ws, name));
    for (const auto& b : w.catalog().modules()) {
      EtaReport r = eta_check(eng, b, {});
      CHECK(r.iso);
      CHECK(r.routes_agree);
      CHECK(r.q_in_heart);
      CHECK(homkit::stably_isomorphic(eng.h_obj(b), eng.h_obj_swapped(b), eng.w()));
    }
  }
}
