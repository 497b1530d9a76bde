#include "hearts/homkit/catalog.hpp"

#include <cmath>

#include "hearts/error.hpp"

namespace hearts::homkit {

Catalog::Catalog(std::vector<std::string> names, std::vector<Representation> modules)
    : names_(std::move(names)), modules_(std::move(modules)) {
  const std::size_t n = modules_.size();
  if (names_.size() != n) throw Error(ErrorKind::Workspace, "catalog name count");
  // Gauss-Jordan on [A | I] with A[j][i] = dim Hom(M_j, M_i)
  std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[j][i] = static_cast<long double>(hom_dim(modules_[j], modules_[i]));
    a[j][n + j] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[best][c])) best = r;
    if (std::fabs(a[best][c]) < 1e-9L) throw Error(ErrorKind::Workspace, "catalog Hom dimension matrix is singular");
    std::swap(a[c], a[best]);
    long double piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      long double m = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= m * a[c][k];
    }
  }
  inverse_.assign(n, std::vector<long double>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inverse_[r][c] = a[r][n + c];
}

const Representation& Catalog::at(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw Error(ErrorKind::Workspace, "unknown module " + name);
  return modules_[*i];
}

std::optional<std::size_t> Catalog::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::size_t> Catalog::decompose(const Representation& x) const {
  const std::size_t n = modules_.size();
  std::vector<long double> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = static_cast<long double>(hom_dim(modules_[j], x));
  std::vector<std::size_t> mult(n);
  std::vector<std::size_t> dims(x.vertex_count(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    long double s = 0;
    for (std::size_t j = 0; j < n; ++j) s += inverse_[i][j] * b[j];
    long double r = std::round(s);
    if (std::fabs(s - r) > 1e-6L || r < 0)
      throw Error(ErrorKind::Workspace, "module does not split over the catalog");
    mult[i] = static_cast<std::size_t>(r);
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += mult[i] * modules_[i].dim(v);
  }
  if (dims != x.dims()) throw Error(ErrorKind::Workspace, "catalog decomposition has the wrong dimension vector");
  return mult;
}

std::vector<std::string> Catalog::summand_names(const Representation& x, const Subcategory* drop) const {
  std::vector<std::size_t> mult = decompose(x);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (drop && in_add(modules_[i], *drop)) continue;
    for (std::size_t k = 0; k < mult[i]; ++k) out.push_back(names_[i]);
  }
  return out;
}

std::optional<std::size_t> Catalog::identify(const Representation& x) const {
  std::vector<std::size_t> mult = decompose(x);
  std::optional<std::size_t> hit;
  std::size_t total = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    total += mult[i];
    if (mult[i]) hit = i;
  }
  if (total != 1) return std::nullopt;
  return hit;
}

}  // namespace hearts::homkit
