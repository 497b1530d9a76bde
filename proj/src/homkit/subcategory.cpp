#include "hearts/homkit/subcategory.hpp"

#include <atomic>
#include <mutex>
#include <unordered_map>

#include "hearts/error.hpp"
#include "hearts/homkit/iso.hpp"

namespace hearts::homkit {

namespace {

std::atomic<std::uint64_t> next_id{1};

struct SpanCache {
  std::mutex mu;
  std::unordered_map<std::string, std::shared_ptr<const la::Subspace>> entries;
};

SpanCache& span_cache() {
  static SpanCache c;
  return c;
}

}  // namespace

Subcategory::Subcategory(std::string name, std::vector<Representation> generators, std::vector<std::string> generator_names)
    : name_(std::move(name)), gens_(std::move(generators)), names_(std::move(generator_names)), id_(next_id++) {
  if (names_.empty())
    for (std::size_t i = 0; i < gens_.size(); ++i) names_.push_back(name_ + "[" + std::to_string(i) + "]");
  if (names_.size() != gens_.size()) throw Error(ErrorKind::InvalidSubcategory, "generator name count");
}

void validate_subcategory(const Subcategory& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.generators()[i];
    if (g.is_zero()) throw Error(ErrorKind::InvalidSubcategory, c.generator_names()[i] + " is zero");
    if (!quiver::satisfies_relations(g))
      throw Error(ErrorKind::InvalidSubcategory, c.generator_names()[i] + " violates the relations");
    if (!is_indecomposable(g))
      throw Error(ErrorKind::InvalidSubcategory, c.generator_names()[i] + " is not indecomposable");
  }
}

std::shared_ptr<const la::Subspace> ideal_span(const Representation& x, const Representation& y, const Subcategory& c) {
  std::string key = std::to_string(c.id()) + "#" + std::to_string(x.key().size()) + "#" + x.key() + y.key();
  auto& cache = span_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  const std::size_t len = Morphism::flat_size(x, y);
  std::vector<la::Vec> rows;
  for (const auto& g : c.generators()) {
    HomPtr into = hom_basis(x, g);
    if (into->dim() == 0) continue;
    HomPtr out = hom_basis(g, y);
    for (const auto& h : out->basis)
      for (const auto& k : into->basis) rows.push_back(compose(h, k).flatten());
  }
  la::Mat m(x.field(), rows.size(), len);
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), m.row(r));
  auto span = std::make_shared<const la::Subspace>(la::Subspace::of_rows(m));
  std::lock_guard<std::mutex> lock(cache.mu);
  if (cache.entries.size() > 60000) cache.entries.clear();
  cache.entries.emplace(std::move(key), span);
  return span;
}

bool in_add(const Representation& x, const Subcategory& c) {
  if (x.is_zero()) return true;
  return ideal_span(x, x, c)->contains(Morphism::identity(x).flatten());
}

bool factors_through(const Morphism& f, const Subcategory& c) {
  return ideal_span(f.source(), f.target(), c)->contains(f.flatten());
}

bool stable_equal(const Morphism& f, const Morphism& g, const Subcategory& c) { return factors_through(f - g, c); }

std::size_t stable_hom_dim(const Representation& x, const Representation& y, const Subcategory& c) {
  return hom_dim(x, y) - ideal_span(x, y, c)->dim();
}

std::vector<Morphism> stable_hom_basis(const Representation& x, const Representation& y, const Subcategory& c) {
  HomPtr h = hom_basis(x, y);
  auto span = ideal_span(x, y, c);
  std::vector<Morphism> out;
  la::Subspace acc = *span;
  for (const auto& e : h->basis) {
    la::Vec v = e.flatten();
    if (acc.contains(v)) continue;
    out.push_back(e);
    la::Mat grown = la::vcat(acc.basis(), la::Mat::from_columns(x.field(), v.size(), {v}).transposed());
    acc = la::Subspace::of_rows(grown);
  }
  return out;
}

}  // namespace hearts::homkit
