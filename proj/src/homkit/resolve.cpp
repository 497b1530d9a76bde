#include "hearts/homkit/resolve.hpp"

#include "hearts/error.hpp"
#include "hearts/quiver/standard.hpp"

namespace hearts::homkit {

namespace {

using quiver::AlgebraPtr;

// Map P(v) -> m sending the idempotent to x in m_v.
Morphism from_projective(const Representation& pv, std::size_t v, const Representation& m, const la::Vec& x) {
  const auto& alg = m.algebra();
  std::vector<la::Mat> maps;
  for (std::size_t w = 0; w < m.vertex_count(); ++w) {
    const auto& paths = alg.basis(v, w);
    la::Mat mw(m.field(), m.dim(w), paths.size());
    for (std::size_t c = 0; c < paths.size(); ++c) {
      la::Mat act = m.path_action(paths[c]);
      for (std::size_t r = 0; r < m.dim(w); ++r) {
        la::Scalar s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s = m.field().add(s, m.field().mul(act(r, k), x[k]));
        mw(r, c) = s;
      }
    }
    maps.push_back(std::move(mw));
  }
  return Morphism(pv, m, std::move(maps));
}

// Map m -> I(v) built from a functional lambda on m_v.
Morphism to_injective(const Representation& m, const Representation& iv, std::size_t v, const la::Mat& lambda) {
  const auto& alg = m.algebra();
  std::vector<la::Mat> maps;
  for (std::size_t w = 0; w < m.vertex_count(); ++w) {
    const auto& paths = alg.basis(w, v);
    la::Mat mw(m.field(), paths.size(), m.dim(w));
    for (std::size_t r = 0; r < paths.size(); ++r) mw.set_block(r, 0, lambda * m.path_action(paths[r]));
    maps.push_back(std::move(mw));
  }
  return Morphism(m, iv, std::move(maps));
}

Cover assemble_cover(const Representation& m, const std::vector<std::pair<std::size_t, la::Vec>>& tops) {
  const AlgebraPtr& alg = m.algebra_ptr();
  std::vector<Representation> parts;
  std::vector<Representation> proj(m.vertex_count());
  for (const auto& [v, x] : tops) {
    if (!proj[v].valid()) proj[v] = quiver::projective(alg, v);
    parts.push_back(proj[v]);
  }
  quiver::DirectSum s = quiver::direct_sum(alg, parts);
  Morphism total = Morphism::zero(s.object, m);
  Cover c;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    total = total + compose(from_projective(parts[i], tops[i].first, m, tops[i].second), s.projections[i]);
    c.vertices.push_back(tops[i].first);
  }
  c.map = total;
  c.omega_map = quiver::kernel(total).inclusion;
  return c;
}

}  // namespace

Cover projective_cover(const Representation& m) {
  const auto& q = m.algebra().quiver();
  std::vector<std::pair<std::size_t, la::Vec>> tops;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    if (m.dim(v) == 0) continue;
    la::Mat rad(m.field(), m.dim(v), 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].target == v) rad = la::hcat(rad, m.arrow_map(a));
    la::Mat span = la::column_space(rad);
    for (std::size_t k = 0; k < m.dim(v); ++k) {
      la::Mat e(m.field(), m.dim(v), 1);
      e(k, 0) = 1;
      la::Mat trial = la::hcat(span, e);
      if (la::rank(trial) > span.cols()) {
        span = trial;
        tops.push_back({v, e.column(0)});
      }
    }
  }
  return assemble_cover(m, tops);
}

Cover canonical_projective_cover(const Representation& m) {
  std::vector<std::pair<std::size_t, la::Vec>> tops;
  for (std::size_t v = 0; v < m.vertex_count(); ++v)
    for (std::size_t k = 0; k < m.dim(v); ++k) {
      la::Vec e(m.dim(v), 0);
      e[k] = 1;
      tops.push_back({v, e});
    }
  return assemble_cover(m, tops);
}

Cover injective_envelope(const Representation& m) {
  const auto& q = m.algebra().quiver();
  const AlgebraPtr& alg = m.algebra_ptr();
  std::vector<Representation> parts;
  std::vector<std::pair<std::size_t, la::Mat>> functionals;
  Cover c;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    if (m.dim(v) == 0) continue;
    la::Mat out(m.field(), 0, m.dim(v));
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].source == v) out = la::vcat(out, m.arrow_map(a));
    la::Mat soc = la::kernel_basis(out);
    if (soc.cols() == 0) continue;
    la::Mat lambda = la::left_inverse(soc);
    Representation iv = quiver::injective(alg, v);
    for (std::size_t j = 0; j < soc.cols(); ++j) {
      parts.push_back(iv);
      functionals.push_back({v, lambda.block(j, 0, 1, m.dim(v))});
      c.vertices.push_back(v);
    }
  }
  quiver::DirectSum s = quiver::direct_sum(alg, parts);
  Morphism total = Morphism::zero(m, s.object);
  for (std::size_t i = 0; i < parts.size(); ++i)
    total = total + compose(s.injections[i], to_injective(m, parts[i], functionals[i].first, functionals[i].second));
  c.map = total;
  c.omega_map = quiver::cokernel(total).projection;
  return c;
}

Representation syzygy(const Representation& m) { return projective_cover(m).omega_map.source(); }
Representation cosyzygy(const Representation& m) { return injective_envelope(m).omega_map.target(); }

Morphism syzygy_map(const Morphism& f) {
  Cover a = projective_cover(f.source());
  Cover b = projective_cover(f.target());
  auto r = solve_post(compose(f, a.map), b.map);
  auto out = r ? solve_post(compose(*r, a.omega_map), b.omega_map) : std::nullopt;
  if (!out) throw Error(ErrorKind::ConstructionFailed, "syzygy map: lift failed");
  return *out;
}

Morphism cosyzygy_map(const Morphism& f) {
  Cover a = injective_envelope(f.source());
  Cover b = injective_envelope(f.target());
  auto e = solve_pre(compose(b.map, f), a.map);
  auto out = e ? solve_pre(compose(b.omega_map, *e), a.omega_map) : std::nullopt;
  if (!out) throw Error(ErrorKind::ConstructionFailed, "cosyzygy map: extension failed");
  return *out;
}

Resolution resolve(const Representation& m, ResolveKind kind, std::size_t depth) {
  Resolution r{kind, {}};
  Representation cur = m;
  for (std::size_t k = 0; k < depth; ++k) {
    Cover c = kind == ResolveKind::Projective ? projective_cover(cur) : injective_envelope(cur);
    cur = kind == ResolveKind::Projective ? c.omega_map.source() : c.omega_map.target();
    r.steps.push_back(std::move(c));
    if (cur.is_zero()) break;
  }
  return r;
}

ExtSpace::ExtSpace(const Representation& x, const Representation& y, bool minimal_cover)
    : x_(x), y_(y), cover_(minimal_cover ? projective_cover(x) : canonical_projective_cover(x)) {
  const Morphism& iota = cover_.omega_map;
  const Representation& omega = iota.source();
  const Representation& p = iota.target();
  const std::size_t len = Morphism::flat_size(omega, y);
  std::vector<la::Vec> rows;
  for (const auto& h : hom_basis(p, y)->basis) rows.push_back(compose(h, iota).flatten());
  la::Mat bm(x.field(), rows.size(), len);
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), bm.row(r));
  boundaries_ = la::Subspace::of_rows(bm);

  HomPtr cocycles = hom_basis(omega, y);
  la::Mat res(x.field(), cocycles->dim(), len);
  for (std::size_t i = 0; i < cocycles->dim(); ++i) {
    la::Vec r = boundaries_.residual(cocycles->basis[i].flatten());
    std::copy(r.begin(), r.end(), res.row(i));
  }
  classes_ = la::Subspace::of_rows(res);
  for (std::size_t i = 0; i < classes_.dim(); ++i)
    reps_.push_back(Morphism::from_flat(omega, y, classes_.basis().row_vec(i)));
}

la::Vec ExtSpace::coordinates(const Morphism& cocycle) const {
  la::Vec r = boundaries_.residual(cocycle.flatten());
  la::Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = r[classes_.pivots()[i]];
  return out;
}

Morphism ExtSpace::cocycle(const la::Vec& coords) const {
  Morphism out = Morphism::zero(cover_.omega_map.source(), y_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (coords[i]) out = out + reps_[i].scaled(coords[i]);
  return out;
}

quiver::Ses ExtSpace::extension(const la::Vec& coords) const {
  Morphism psi = cocycle(coords);
  quiver::Square sq = quiver::pushout(cover_.omega_map, psi);
  Morphism g = sq.induced_from(cover_.map, Morphism::zero(y_, x_));
  return quiver::Ses{sq.to_c, g};
}

std::size_t ext1_dim(const Representation& x, const Representation& y) { return ExtSpace(x, y, true).dim(); }
std::size_t ext1_dim_canonical(const Representation& x, const Representation& y) { return ExtSpace(x, y, false).dim(); }

}  // namespace hearts::homkit
