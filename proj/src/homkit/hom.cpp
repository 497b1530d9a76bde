#include "hearts/homkit/hom.hpp"

#include <mutex>
#include <unordered_map>

#include "hearts/error.hpp"
#include "hearts/homkit/subcategory.hpp"

namespace hearts::homkit {

namespace {

constexpr std::size_t kCacheLimit = 60000;

struct HomCache {
  std::mutex mu;
  std::unordered_map<std::string, HomPtr> entries;
};

HomCache& cache() {
  static HomCache c;
  return c;
}

std::string pair_key(const Representation& x, const Representation& y) {
  std::string k;
  k.reserve(x.key().size() + y.key().size() + 24);
  k += std::to_string(reinterpret_cast<std::uintptr_t>(x.algebra_ptr().get()));
  k += '#';
  k += std::to_string(x.key().size());
  k += '#';
  k += x.key();
  k += y.key();
  return k;
}

HomPtr compute_hom(const Representation& x, const Representation& y) {
  const auto& q = x.algebra().quiver();
  const la::Field& f = x.field();
  const std::size_t n = x.vertex_count();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off[v + 1] = off[v] + y.dim(v) * x.dim(v);
  const std::size_t unknowns = off[n];

  std::size_t eqs = 0;
  for (const auto& a : q.arrows) eqs += y.dim(a.target) * x.dim(a.source);
  la::Mat sys(f, eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& a = q.arrows[ai];
    const std::size_t i = a.source, j = a.target;
    const la::Mat& ya = y.arrow_map(ai);  // y_j x y_i
    const la::Mat& xa = x.arrow_map(ai);  // x_j x x_i
    // (ya phi_i - phi_j xa)[r, c] = 0
    for (std::size_t r = 0; r < y.dim(j); ++r)
      for (std::size_t c = 0; c < x.dim(i); ++c, ++row) {
        for (std::size_t k = 0; k < y.dim(i); ++k) {
          la::Scalar v = ya(r, k);
          if (v) {
            std::size_t col = off[i] + k * x.dim(i) + c;
            sys(row, col) = f.add(sys(row, col), v);
          }
        }
        for (std::size_t k = 0; k < x.dim(j); ++k) {
          la::Scalar v = xa(k, c);
          if (v) {
            std::size_t col = off[j] + r * x.dim(j) + k;
            sys(row, col) = f.sub(sys(row, col), v);
          }
        }
      }
  }
  auto hb = std::make_shared<HomBasis>();
  hb->source = x;
  hb->target = y;
  hb->flat = la::kernel_basis(sys);
  for (std::size_t j = 0; j < hb->flat.cols(); ++j)
    hb->basis.push_back(Morphism::from_flat(x, y, hb->flat.column(j)));
  return hb;
}

}  // namespace

std::optional<la::Vec> HomBasis::coordinates(const Morphism& f) const { return la::in_span(f.flatten(), flat); }

Morphism HomBasis::combine(const la::Vec& coeffs) const {
  Morphism out = Morphism::zero(source, target);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i]) out = out + basis[i].scaled(coeffs[i]);
  return out;
}

HomPtr hom_basis(const Representation& x, const Representation& y) {
  if (x.algebra_ptr() != y.algebra_ptr()) throw Error(ErrorKind::Shape, "objects over different algebras");
  std::string key = pair_key(x, y);
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.entries.find(key);
    if (it != c.entries.end()) return it->second;
  }
  HomPtr hb = compute_hom(x, y);
  std::lock_guard<std::mutex> lock(c.mu);
  if (c.entries.size() >= kCacheLimit) c.entries.clear();
  c.entries.emplace(std::move(key), hb);
  return hb;
}

std::size_t hom_dim(const Representation& x, const Representation& y) { return hom_basis(x, y)->dim(); }

std::size_t hom_cache_size() {
  std::lock_guard<std::mutex> lock(cache().mu);
  return cache().entries.size();
}

void clear_hom_cache() {
  std::lock_guard<std::mutex> lock(cache().mu);
  cache().entries.clear();
}

namespace {

// Solve sum c_i images[i] + sum d_j span_j = target; returns the c part.
std::optional<la::Vec> solve_combination(const std::vector<la::Vec>& images, const la::Vec& target,
                                         const la::Subspace* span, const la::Field& f) {
  const std::size_t len = target.size();
  std::vector<la::Vec> cols = images;
  if (span)
    for (std::size_t r = 0; r < span->dim(); ++r) cols.push_back(span->basis().row_vec(r));
  la::Mat a = la::Mat::from_columns(f, len, cols);
  auto sol = la::in_span(target, a);
  if (!sol) return std::nullopt;
  sol->resize(images.size());
  return sol;
}

}  // namespace

std::optional<Morphism> solve_post(const Morphism& f, const Morphism& t, const Subcategory* modulo) {
  if (!(f.target() == t.target())) throw Error(ErrorKind::Shape, "solve_post needs a common target");
  HomPtr h = hom_basis(f.source(), t.source());
  std::vector<la::Vec> images;
  for (const auto& e : h->basis) images.push_back(compose(t, e).flatten());
  std::shared_ptr<const la::Subspace> span;
  if (modulo) span = ideal_span(f.source(), f.target(), *modulo);
  auto c = solve_combination(images, f.flatten(), span.get(), f.source().field());
  if (!c) return std::nullopt;
  return h->combine(*c);
}

std::optional<Morphism> solve_pre(const Morphism& f, const Morphism& t, const Subcategory* modulo) {
  if (!(f.source() == t.source())) throw Error(ErrorKind::Shape, "solve_pre needs a common source");
  HomPtr h = hom_basis(t.target(), f.target());
  std::vector<la::Vec> images;
  for (const auto& e : h->basis) images.push_back(compose(e, t).flatten());
  std::shared_ptr<const la::Subspace> span;
  if (modulo) span = ideal_span(f.source(), f.target(), *modulo);
  auto c = solve_combination(images, f.flatten(), span.get(), f.source().field());
  if (!c) return std::nullopt;
  return h->combine(*c);
}

std::optional<Morphism> solve_factorization(const Morphism& f, const Morphism& through, FactorSide side) {
  if (side == FactorSide::LiftEpi) {
    if (!through.is_epi()) throw Error(ErrorKind::NotEpi, "lift through a non-surjective map");
    return solve_post(f, through);
  }
  if (!through.is_mono()) throw Error(ErrorKind::NotMono, "extension along a non-injective map");
  return solve_pre(f, through);
}

}  // namespace hearts::homkit
