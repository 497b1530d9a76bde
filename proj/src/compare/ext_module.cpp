#include "hearts/compare/ext_module.hpp"

#include "hearts/error.hpp"
#include "hearts/homkit/hom.hpp"
#include "hearts/homkit/resolve.hpp"
#include "hearts/quiver/standard.hpp"

namespace hearts::compare {

using homkit::ExtSpace;
using homkit::Subcategory;

namespace {

bool ext_vanishes(const Representation& a, const Subcategory& c, bool c_second) {
  for (const auto& g : c.generators())
    if ((c_second ? homkit::ext1_dim(a, g) : homkit::ext1_dim(g, a)) != 0) return false;
  return true;
}

Subcategory projectives_of(const quiver::AlgebraPtr& alg, std::size_t n) {
  std::vector<Representation> p;
  for (std::size_t v = 0; v < n; ++v) p.push_back(quiver::projective(alg, v));
  return Subcategory("proj", std::move(p));
}

la::Mat pullback_matrix(const Morphism& h, const ExtSpace& ea, const ExtSpace& eb) {
  const auto& ca = ea.cover();
  const auto& cb = eb.cover();
  auto r = homkit::solve_post(compose(h, ca.map), cb.map);
  auto omega = r ? homkit::solve_post(compose(*r, ca.omega_map), cb.omega_map) : std::nullopt;
  if (!omega) throw Error(ErrorKind::ConstructionFailed, "Ext action: syzygy lift failed");
  la::Mat m(h.source().field(), ea.dim(), eb.dim());
  for (std::size_t k = 0; k < eb.dim(); ++k) {
    la::Vec col = ea.coordinates(compose(eb.representative(k), *omega));
    for (std::size_t i = 0; i < col.size(); ++i) m(i, k) = col[i];
  }
  return m;
}

}  // namespace

std::size_t ExtModule::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

la::Mat ext_pullback_matrix(const Morphism& h, const Representation& x) {
  return pullback_matrix(h, ExtSpace(h.source(), x), ExtSpace(h.target(), x));
}

ExtModule ext_restriction_module(const Subcategory& m, const Representation& x) {
  const std::size_t n = x.vertex_count();
  Subcategory proj = projectives_of(x.algebra_ptr(), n);
  for (const auto& p : proj.generators())
    if (!homkit::in_add(p, m)) throw Error(ErrorKind::InvalidSubcategory, m.name() + " misses a projective");
  ExtModule out;
  std::vector<ExtSpace> spaces;
  for (std::size_t i = 0; i < m.size(); ++i) {
    spaces.emplace_back(m.generators()[i], x);
    out.names.push_back(m.generator_names()[i]);
    out.dims.push_back(spaces.back().dim());
  }
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (out.dims[i] == 0 && out.dims[j] == 0) continue;
      for (const auto& h : homkit::stable_hom_basis(m.generators()[j], m.generators()[i], proj))
        out.actions.push_back({j, i, h, pullback_matrix(h, spaces[j], spaces[i])});
    }
  return out;
}

ExtModule ext_restriction_module(PairEngine& engine, const Representation& x) {
  return ext_restriction_module(engine.pair().u, engine.minus(x)->bminus);
}

ClusterTiltingReport cluster_tilting_check(const Subcategory& m, const ObjectSet& all) {
  ClusterTiltingReport r;
  if (!all.objects.empty()) {
    Subcategory proj = projectives_of(all.objects.front().algebra_ptr(), all.objects.front().vertex_count());
    for (const auto& p : proj.generators()) r.contains_projectives = r.contains_projectives && homkit::in_add(p, m);
  }
  if (!r.contains_projectives) r.failures.push_back("missing projective");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!ext_vanishes(m.generators()[i], m, true)) {
      r.rigid = false;
      r.failures.push_back("not rigid at " + m.generator_names()[i]);
    }
  for (std::size_t i = 0; i < all.objects.size(); ++i) {
    const auto& x = all.objects[i];
    bool in = homkit::in_add(x, m);
    if (in != ext_vanishes(x, m, true)) {
      r.left_char = false;
      r.failures.push_back("Ext1(X, M) test wrong at " + all.names[i]);
    }
    if (in != ext_vanishes(x, m, false)) {
      r.right_char = false;
      r.failures.push_back("Ext1(M, X) test wrong at " + all.names[i]);
    }
  }
  return r;
}

std::vector<std::string> perp_one(const Subcategory& m, const ObjectSet& all) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < all.objects.size(); ++i)
    if (ext_vanishes(all.objects[i], m, false)) out.push_back(all.names[i]);
  return out;
}

}  // namespace hearts::compare
