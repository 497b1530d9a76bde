// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "hearts/compare/duo.hpp"
#include "hearts/compare/ext_module.hpp"
#include "hearts/compare/twin.hpp"
#include "hearts/cotorsion/reflection.hpp"
#include "hearts/heart/les.hpp"
#include "hearts/heart/oracle.hpp"
#include "hearts/heart/sequences.hpp"
#include "hearts/homkit/iso.hpp"
#include "hearts/quiver/standard.hpp"

using namespace hearts;
using namespace hearts::compare;
using testing_support::all_pairs;
using testing_support::engine;
using testing_support::workspace;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string join(const std::vector<std::string>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out + "}";
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ObjectSet objects(const std::string& ws) {
  const auto& w = workspace(ws);
  return ObjectSet::from_catalog(w.catalog(), w.catalog_names());
}

bool inside(const homkit::Subcategory& a, const homkit::Subcategory& b) {
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Representation& g) { return homkit::in_add(g, b); });
}

Outcome ex61_first_heart() {
  Outcome o;
  auto names = heart_fixtures(engine("ex61", "pair1"), objects("ex61")).names;
  o.require(names == std::vector<std::string>{"2"}, "heart classes " + join(names));
  return o;
}

Outcome ex61_second_heart() {
  Outcome o;
  auto& e1 = engine("ex61", "pair1");
  auto& e2 = engine("ex61", "pair2");
  ObjectSet all = objects("ex61");
  ObjectSet h1 = heart_fixtures(e1, all), h2 = heart_fixtures(e2, all);
  o.require(sorted(h2.names) == std::vector<std::string>{"1", "2"}, "heart classes " + join(h2.names) + ", expected {1, 2}");
  const auto& p1 = e1.pair();
  const auto& p2 = e2.pair();
  o.require(inside(p1.w, p1.u) && inside(p1.u, p1.w), "W1 = U1");
  o.require(inside(p1.u, p2.u), "U1 in U2");
  o.require(inside(p2.u, p2.v), "U2 in V2");
  o.require(inside(p2.v, p1.v), "V2 in V1");
  o.require(prop53_check(duo(e1, e2), h1).ok(), "round trip through the second heart");
  SerreReport s = serre_check(duo(e2, e1), h2, heart_sample(e2, h2), all);
  o.require(s.ok(), "Serre closure");
  o.require(s.members == std::vector<std::string>{"1"}, "Serre members " + join(s.members));
  return o;
}

Outcome ex62_cluster_tilting() {
  Outcome o;
  const auto& w = workspace("ex62");
  ObjectSet all = objects("ex62");
  ClusterTiltingReport ct = cluster_tilting_check(w.subcategory("M"), all);
  o.require(ct.ok(), "cluster tilting: " + join(ct.failures));
  auto cert = cotorsion::certify_pair("pair2", w.subcategory("M"), w.subcategory("M"), w.catalog().modules());
  o.require(cert.ok(), "(M, M) certification");
  auto& e = engine("ex62", "pair2");
  ObjectSet h = heart_fixtures(e, all);
  o.require(h.objects.size() == 7, std::to_string(h.objects.size()) + " heart classes");
  auto expected = w.expected()["hearts"]["pair2"].get<std::vector<std::string>>();
  o.require(sorted(h.names) == sorted(expected), "heart classes " + join(h.names));
  for (std::size_t i = 0; i < all.objects.size(); ++i)
    o.require(e.in_heart(all.objects[i]) && homkit::stably_isomorphic(e.h_obj(all.objects[i]), all.objects[i], e.w()),
              "H is not the identity at " + all.names[i]);
  return o;
}

Outcome ex62_h_value() {
  Outcome o;
  const auto& w = workspace("ex62");
  auto& e = engine("ex62", "pair1");
  Representation h = e.h_obj(w.module("34/5"));
  o.require(homkit::stably_isomorphic(h, w.module("3/5"), e.w()),
            "H(34/5) = " + objects("ex62").describe(h, e.w()));
  return o;
}

Outcome ex62_exactness() {
  Outcome o;
  auto& e1 = engine("ex62", "pair1");
  auto& e2 = engine("ex62", "pair2");
  ObjectSet all = objects("ex62");
  ObjectSet h2 = heart_fixtures(e2, all);
  ExactnessReport back = beta_exactness(duo(e2, e1), heart_sample(e2, h2), all);
  o.require(back.sampled > 0 && back.exact && back.half_exact, "backward functor not exact");
  ObjectSet h1 = heart_fixtures(e1, all);
  ExactnessReport forth = beta_exactness(duo(e1, e2), heart_sample(e1, h1), all);
  o.require(!forth.exact, "forward functor unexpectedly exact");
  bool witness = std::any_of(forth.failures.begin(), forth.failures.end(),
                             [](const SesOutcome& f) { return f.terms == "3/5 -> 3 -> 2/34" && !f.mono; });
  o.require(witness, "witness 3/5 -> 3 -> 2/34 not reported");
  return o;
}

Outcome ex62_matching() {
  Outcome o;
  auto& e1 = engine("ex62", "pair1");
  auto& e3 = engine("ex62", "pair3");
  ObjectSet all = objects("ex62");
  HeartMatch m = match_hearts(e1, heart_fixtures(e1, all), e3, heart_fixtures(e3, all));
  o.require(m.matched, "hearts do not match");
  Lemma51 l = lemma51_check(duo(e1, e3));
  o.require(!l.rhs, "third pair's first class lies in add(U1*V1)");
  o.require(l.agree(), "generator criterion sides disagree");
  return o;
}

Outcome property_suite() {
  Outcome o;
  for (const auto& [ws, name] : all_pairs()) {
    auto& e = engine(ws, name);
    const auto& w = workspace(ws);
    auto sample = heart::random_conflations(w.catalog().modules(), w.catalog_names(), 100, 1);
    o.require(sample.size() >= 100, ws + "/" + name + ": only " + std::to_string(sample.size()) + " conflations");
    std::size_t half = 0, les = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
      half += heart::verify_half_exact(e, sample[i].ses);
      if (i < 25) les += heart::les_window(e, sample[i].ses).all_exact();
    }
    o.require(half == sample.size(), ws + "/" + name + ": half exact " + std::to_string(half));
    o.require(les == std::min<std::size_t>(25, sample.size()), ws + "/" + name + ": exact windows " + std::to_string(les));
  }
  return o;
}

Outcome kernel_characterization_all() {
  Outcome o;
  for (const auto& [ws, name] : all_pairs()) {
    const auto& w = workspace(ws);
    for (std::size_t i = 0; i < w.catalog().modules().size(); ++i) {
      auto r = heart::add_star_test(engine(ws, name), w.catalog().modules()[i]);
      o.require(r.via_h == r.via_oracle, ws + "/" + name + ": disagreement at " + w.catalog_names()[i]);
      o.require(!r.inconclusive, ws + "/" + name + ": inconclusive at " + w.catalog_names()[i]);
    }
  }
  return o;
}

Outcome eta_all() {
  Outcome o;
  for (const auto& [ws, name] : all_pairs()) {
    const auto& w = workspace(ws);
    for (std::size_t i = 0; i < w.catalog().modules().size(); ++i) {
      auto r = cotorsion::eta_check(engine(ws, name), w.catalog().modules()[i], w.catalog().modules());
      o.require(r.ok(), ws + "/" + name + ": " + w.catalog_names()[i]);
    }
  }
  return o;
}

Outcome a2_micro() {
  Outcome o;
  const auto& w = workspace("a2");
  ObjectSet all = objects("a2");
  for (const char* name : {"pair1", "pair2"}) {
    const auto& p = w.pair(name);
    o.require(cotorsion::certify_pair(name, w.subcategory(p.u), w.subcategory(p.v), w.catalog().modules()).ok(),
              std::string(name) + " not certified");
    o.require(heart_fixtures(engine("a2", name), all).objects.empty(), std::string(name) + " heart nonzero");
  }
  TwinReport t = twin_suite(make_twin(engine("a2", "pair1"), engine("a2", "pair2")), all);
  o.require(t.ok(), "twin suite: " + join(t.failures));
  o.require(t.inclusions_checked, "inclusions not checked");
  o.require(t.nonzero_heart == w.expected()["twin_heart"].get<std::vector<std::string>>(), "twin heart " + join(t.nonzero_heart));
  return o;
}

Outcome zero_battery() {
  Outcome o;
  for (const auto& [ws, name] : all_pairs()) {
    auto& e = engine(ws, name);
    const auto& alg = workspace(ws).algebra();
    std::vector<Representation> killed = e.pair().u.generators();
    for (const auto& v : e.pair().v.generators()) killed.push_back(v);
    for (std::size_t v = 0; v < alg->quiver().vertex_count; ++v) {
      killed.push_back(quiver::projective(alg, v));
      killed.push_back(quiver::injective(alg, v));
    }
    for (const auto& x : killed) o.require(e.heart_zero(e.h_obj(x)), ws + "/" + name + ": H nonzero on " + x.key());
  }
  return o;
}

Outcome lemma_shapes() {
  Outcome o;
  for (const auto& [ws, name] : all_pairs()) {
    auto& e = engine(ws, name);
    const std::string tag = ws + "/" + name;
    for (const auto& b : workspace(ws).catalog().modules()) {
      auto pd = e.plus(b);
      auto md = e.minus(b);
      for (const auto& u : e.pair().u.generators())
        o.require(homkit::stable_hom_dim(u, pd->bplus, e.w()) == 0, tag + ": stable Hom U -> B+");
      for (const auto& v : e.pair().v.generators())
        o.require(homkit::stable_hom_dim(md->bminus, v, e.w()) == 0, tag + ": stable Hom B- -> V");
      o.require(heart::right_exact_shape(e, pd->coker_seq) && heart::right_exact_shape(e, pd->seq_w.ses) &&
                    heart::right_exact_shape(e, md->seq_left.ses),
                tag + ": right exact shape");
      o.require(heart::left_exact_shape(e, md->ker_seq) && heart::left_exact_shape(e, md->seq_w.ses) &&
                    heart::left_exact_shape(e, pd->seq_right.ses),
                tag + ": left exact shape");
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"ex61 first heart is {2}", ex61_first_heart},
      {"ex61 second heart, inclusion chain, round trip, Serre {1}", ex61_second_heart},
      {"ex62 cluster tilting pair with 7 heart classes", ex62_cluster_tilting},
      {"ex62 H(34/5) = 3/5 under the first pair", ex62_h_value},
      {"ex62 backward functor exact, forward witness", ex62_exactness},
      {"ex62 first and third hearts match, generator criterion fails", ex62_matching},
      {"half exactness on 100 and exact windows on 25 conflations per pair", property_suite},
      {"kernel of H agrees with the add(U*V) oracle", kernel_characterization_all},
      {"composites of the reflections commute naturally", eta_all},
      {"A2 pairs certified, hearts zero, twin suite", a2_micro},
      {"H kills both classes, projectives and injectives", zero_battery},
      {"stable Hom vanishing and partial exactness shapes", lemma_shapes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << secs << "s)";
    if (!o.ok) {
      ++failed;
      const std::size_t shown = std::min<std::size_t>(o.notes.size(), 5);
      for (std::size_t k = 0; k < shown; ++k) line << (k ? "; " : " - ") << o.notes[k];
      if (o.notes.size() > shown) line << "; ... " << o.notes.size() - shown << " more";
    }
    std::cout << line.str() << std::endl;
  }
  std::cout << criteria.size() - failed << " of " << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
