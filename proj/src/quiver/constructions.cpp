#include "hearts/quiver/constructions.hpp"

#include "hearts/error.hpp"

namespace hearts::quiver {

DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Representation>& parts) {
  const Quiver& q = alg->quiver();
  const la::Field& f = alg->field();
  const std::size_t n = q.vertex_count;
  std::vector<std::size_t> dims(n, 0);
  std::vector<std::vector<std::size_t>> offset(parts.size(), std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t v = 0; v < n; ++v) {
      offset[i][v] = dims[v];
      dims[v] += parts[i].dim(v);
    }
  std::vector<la::Mat> maps;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    la::Mat m(f, dims[q.arrows[a].target], dims[q.arrows[a].source]);
    for (std::size_t i = 0; i < parts.size(); ++i)
      m.set_block(offset[i][q.arrows[a].target], offset[i][q.arrows[a].source], parts[i].arrow_map(a));
    maps.push_back(std::move(m));
  }
  DirectSum out{Representation(alg, dims, std::move(maps)), {}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<la::Mat> inj, proj;
    for (std::size_t v = 0; v < n; ++v) {
      la::Mat e(f, dims[v], parts[i].dim(v));
      for (std::size_t k = 0; k < parts[i].dim(v); ++k) e(offset[i][v] + k, k) = 1;
      proj.push_back(e.transposed());
      inj.push_back(std::move(e));
    }
    out.injections.emplace_back(parts[i], out.object, std::move(inj));
    out.projections.emplace_back(out.object, parts[i], std::move(proj));
  }
  return out;
}

Representation direct_sum_object(const AlgebraPtr& alg, const std::vector<Representation>& parts) {
  return direct_sum(alg, parts).object;
}

Morphism block_morphism(const DirectSum& source, const DirectSum& target,
                        const std::vector<std::vector<Morphism>>& blocks) {
  Morphism total = Morphism::zero(source.object, target.object);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks[i].size(); ++j)
      total = total + target.injections[i] * blocks[i][j] * source.projections[j];
  return total;
}

Morphism Kernel::lift(const Morphism& h) const {
  std::vector<la::Mat> maps;
  for (std::size_t v = 0; v < retraction.size(); ++v) maps.push_back(retraction[v] * h.map(v));
  return Morphism(h.source(), inclusion.source(), std::move(maps));
}

Morphism Cokernel::descend(const Morphism& h) const {
  std::vector<la::Mat> maps;
  for (std::size_t v = 0; v < section.size(); ++v) maps.push_back(h.map(v) * section[v]);
  return Morphism(projection.target(), h.target(), std::move(maps));
}

Kernel kernel(const Morphism& f) {
  const Representation& X = f.source();
  const Quiver& q = X.algebra().quiver();
  std::vector<la::Mat> incl, retr;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < X.vertex_count(); ++v) {
    la::Mat k = la::kernel_basis(f.map(v));
    retr.push_back(la::left_inverse(k));
    dims.push_back(k.cols());
    incl.push_back(std::move(k));
  }
  std::vector<la::Mat> maps;
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    maps.push_back(retr[q.arrows[a].target] * X.arrow_map(a) * incl[q.arrows[a].source]);
  Representation K(X.algebra_ptr(), dims, std::move(maps));
  return Kernel{Morphism(K, X, std::move(incl)), std::move(retr)};
}

Cokernel cokernel(const Morphism& f) {
  const Representation& Y = f.target();
  const Quiver& q = Y.algebra().quiver();
  std::vector<la::Mat> proj, sect;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < Y.vertex_count(); ++v) {
    la::Mat p = la::left_kernel(f.map(v));
    sect.push_back(la::right_inverse(p));
    dims.push_back(p.rows());
    proj.push_back(std::move(p));
  }
  std::vector<la::Mat> maps;
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    maps.push_back(proj[q.arrows[a].target] * Y.arrow_map(a) * sect[q.arrows[a].source]);
  Representation C(Y.algebra_ptr(), dims, std::move(maps));
  return Cokernel{Morphism(Y, C, std::move(proj)), std::move(sect)};
}

Factorization factorize(const Morphism& f) {
  Kernel k = kernel(f);
  Cokernel c = cokernel(f);
  // image = kernel of the cokernel projection
  Kernel im = kernel(c.projection);
  Morphism coimage = im.lift(f);
  return Factorization{std::move(k), std::move(coimage), im.inclusion, std::move(c)};
}

Morphism Square::induced_from(const Morphism& hb, const Morphism& hc) const {
  return pushout_quotient.descend(hb * sum.projections[0] + hc * sum.projections[1]);
}

Morphism Square::induced_to(const Morphism& kb, const Morphism& kc) const {
  return pullback_inclusion.lift(sum.injections[0] * kb + sum.injections[1] * kc);
}

Square pushout(const Morphism& f, const Morphism& g) {
  if (!(f.source() == g.source())) throw Error(ErrorKind::Shape, "pushout maps need a common source");
  const AlgebraPtr& alg = f.source().algebra_ptr();
  DirectSum s = direct_sum(alg, {f.target(), g.target()});
  Morphism phi = s.injections[0] * f - s.injections[1] * g;
  Cokernel c = cokernel(phi);
  Square sq;
  sq.corner = c.projection.target();
  sq.to_b = c.projection * s.injections[0];
  sq.to_c = c.projection * s.injections[1];
  sq.sum = std::move(s);
  sq.pushout_quotient = std::move(c);
  return sq;
}

Square pullback(const Morphism& f, const Morphism& g) {
  if (!(f.target() == g.target())) throw Error(ErrorKind::Shape, "pullback maps need a common target");
  const AlgebraPtr& alg = f.source().algebra_ptr();
  DirectSum s = direct_sum(alg, {f.source(), g.source()});
  Morphism psi = f * s.projections[0] - g * s.projections[1];
  Kernel k = kernel(psi);
  Square sq;
  sq.corner = k.inclusion.source();
  sq.to_b = s.projections[0] * k.inclusion;
  sq.to_c = s.projections[1] * k.inclusion;
  sq.sum = std::move(s);
  sq.pullback_inclusion = std::move(k);
  return sq;
}

Square square_complete(const Morphism& f, const Morphism& g, SquareMode mode) {
  return mode == SquareMode::Pushout ? pushout(f, g) : pullback(f, g);
}

}  // namespace hearts::quiver
