#include "hearts/compare/twin.hpp"

#include "hearts/error.hpp"
#include "hearts/heart/heart.hpp"
#include "hearts/homkit/approx.hpp"
#include "hearts/homkit/hom.hpp"
#include "hearts/homkit/resolve.hpp"

namespace hearts::compare {

using homkit::Subcategory;

TwinPair make_twin(PairEngine& first, PairEngine& second) {
  const auto& p1 = first.pair();
  const auto& p2 = second.pair();
  for (std::size_t i = 0; i < p1.u.size(); ++i)
    if (!homkit::in_add(p1.u.generators()[i], p2.u))
      throw Error(ErrorKind::InvalidPair, "twin: " + p1.u.generator_names()[i] + " is not in the second u");
  for (const auto& a : p1.u.generators())
    for (const auto& b : p2.v.generators())
      if (homkit::ext1_dim(a, b) != 0) throw Error(ErrorKind::InvalidPair, "twin: Ext1(u1, v2) is nonzero");
  std::vector<Representation> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p2.u.size(); ++i)
    if (homkit::in_add(p2.u.generators()[i], p1.v)) {
      gens.push_back(p2.u.generators()[i]);
      names.push_back(p2.u.generator_names()[i]);
    }
  return TwinPair{&first, &second, Subcategory("Wt", std::move(gens), std::move(names))};
}

bool in_twin_bplus(const TwinPair& tp, const Representation& b) {
  if (b.is_zero()) return true;
  if (tp.wt.size() == 0) return false;
  auto a = homkit::minimal_approx(b, tp.wt, homkit::ApproxSide::Right);
  if (!a.map.is_epi()) return false;
  return homkit::in_add(quiver::kernel(a.map).inclusion.source(), tp.second->pair().v);
}

bool in_twin_bminus(const TwinPair& tp, const Representation& b) {
  if (b.is_zero()) return true;
  if (tp.wt.size() == 0) return false;
  auto a = homkit::minimal_approx(b, tp.wt, homkit::ApproxSide::Left);
  if (!a.map.is_mono()) return false;
  return homkit::in_add(quiver::cokernel(a.map).projection.target(), tp.first->pair().u);
}

namespace {

// Images of a stable basis modulo wt stay independent modulo W_k.
bool faithful_on(PairEngine& e, const Representation& a, const Representation& b, const Subcategory& wt) {
  auto basis = homkit::stable_hom_basis(a, b, wt);
  if (basis.empty()) return true;
  Representation ha = e.h_obj(a), hb = e.h_obj(b);
  auto span = homkit::ideal_span(ha, hb, e.w());
  la::Mat rows = span->basis();
  for (const auto& f : basis) {
    la::Vec v = e.h_mor(f).flatten();
    la::Mat r(a.field(), 1, v.size());
    std::copy(v.begin(), v.end(), r.row(0));
    rows = la::vcat(rows, r);
  }
  return la::rank(rows) == span->dim() + basis.size();
}

}  // namespace

TwinReport twin_suite(const TwinPair& tp, const ObjectSet& all) {
  TwinReport r;
  PairEngine* engines[2] = {tp.first, tp.second};
  std::vector<Representation> heart;
  for (std::size_t i = 0; i < all.objects.size(); ++i) {
    if (!in_twin_heart(tp, all.objects[i])) continue;
    heart.push_back(all.objects[i]);
    r.heart.push_back(all.names[i]);
    if (!homkit::in_add(all.objects[i], tp.wt)) r.nonzero_heart.push_back(all.names[i]);
  }
  for (std::size_t i = 0; i < heart.size(); ++i)
    for (std::size_t j = 0; j < heart.size(); ++j)
      for (int k = 0; k < 2; ++k) {
        PairEngine& e = *engines[k];
        const std::string where = r.heart[i] + " -> " + r.heart[j] + " under pair " + std::to_string(k + 1);
        for (const auto& f : homkit::hom_basis(heart[i], heart[j])->basis) {
          bool zero = homkit::factors_through(e.h_mor(f), e.w());
          if (zero != homkit::factors_through(f, tp.wt)) {
            r.zero_detection = false;
            r.failures.push_back("zero detection: " + where);
          }
        }
        if (!faithful_on(e, heart[i], heart[j], tp.wt)) {
          r.faithful = false;
          r.failures.push_back("faithfulness: " + where);
        }
      }
  bool h1_zero = heart::heart_members(*tp.first, all.objects).empty();
  bool h2_zero = heart::heart_members(*tp.second, all.objects).empty();
  if ((h1_zero || h2_zero) && !r.nonzero_heart.empty()) {
    r.zero_remark = false;
    r.failures.push_back("component heart zero but twin heart is not");
  }
  if (r.nonzero_heart.empty()) {
    r.inclusions_checked = true;
    for (std::size_t i = 0; i < all.objects.size(); ++i) {
      const auto& x = all.objects[i];
      if (tp.first->in_heart(x) && !homkit::in_add(x, tp.second->pair().u)) {
        r.inclusions = false;
        r.failures.push_back("first heart object " + all.names[i] + " outside the second u");
      }
      if (tp.second->in_heart(x) && !homkit::in_add(x, tp.first->pair().v)) {
        r.inclusions = false;
        r.failures.push_back("second heart object " + all.names[i] + " outside the first v");
      }
    }
  }
  return r;
}

}  // namespace hearts::compare
