#include "hearts/quiver/standard.hpp"

#include "hearts/error.hpp"

namespace hearts::quiver {

Representation projective(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  const std::size_t n = q.vertex_count;
  std::vector<std::size_t> dims(n);
  for (std::size_t w = 0; w < n; ++w) dims[w] = alg->basis(v, w).size();
  std::vector<la::Mat> maps;
  for (const auto& ar : q.arrows) {
    la::Mat m(alg->field(), dims[ar.target], dims[ar.source]);
    const auto& src = alg->basis(v, ar.source);
    for (std::size_t c = 0; c < src.size(); ++c) {
      Path p = src[c];
      p.arrows.push_back(q.arrow_index(ar.name).value());
      la::Vec coords = alg->reduce(p);
      for (std::size_t r = 0; r < coords.size(); ++r) m(r, c) = coords[r];
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, dims, std::move(maps));
}

Representation injective(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  const std::size_t n = q.vertex_count;
  std::vector<std::size_t> dims(n);
  for (std::size_t w = 0; w < n; ++w) dims[w] = alg->basis(w, v).size();
  std::vector<la::Mat> maps;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    // (a.xi)(q) = xi(a q): entry [q*, p*] is the coefficient of p in a q
    la::Mat m(alg->field(), dims[ar.target], dims[ar.source]);
    const auto& tgt = alg->basis(ar.target, v);
    for (std::size_t r = 0; r < tgt.size(); ++r) {
      Path p{ar.source, {a}};
      p.arrows.insert(p.arrows.end(), tgt[r].arrows.begin(), tgt[r].arrows.end());
      la::Vec coords = alg->reduce(p);
      for (std::size_t c = 0; c < coords.size(); ++c) m(r, c) = coords[c];
    }
    maps.push_back(std::move(m));
  }
  return Representation(alg, dims, std::move(maps));
}

Representation simple(const AlgebraPtr& alg, std::size_t v) {
  const Quiver& q = alg->quiver();
  std::vector<std::size_t> dims(q.vertex_count, 0);
  dims[v] = 1;
  std::vector<la::Mat> maps;
  for (const auto& ar : q.arrows) maps.emplace_back(alg->field(), dims[ar.target], dims[ar.source]);
  return Representation(alg, dims, std::move(maps));
}

Representation standard_module(const AlgebraPtr& alg, StandardKind kind, std::size_t v) {
  if (v >= alg->vertex_count()) throw Error(ErrorKind::InvalidModule, "vertex out of range");
  switch (kind) {
    case StandardKind::Projective: return projective(alg, v);
    case StandardKind::Injective: return injective(alg, v);
    default: return simple(alg, v);
  }
}

Morphism projective_top(const AlgebraPtr& alg, std::size_t v) {
  Representation P = projective(alg, v), S = simple(alg, v);
  Morphism out = Morphism::zero(P, S);
  std::vector<la::Mat> maps = out.maps();
  maps[v](0, 0) = 1;  // the idempotent is the first basis path
  return Morphism(P, S, std::move(maps));
}

Morphism injective_socle(const AlgebraPtr& alg, std::size_t v) {
  Representation I = injective(alg, v), S = simple(alg, v);
  std::vector<la::Mat> maps = Morphism::zero(S, I).maps();
  maps[v](0, 0) = 1;
  return Morphism(S, I, std::move(maps));
}

}  // namespace hearts::quiver
