#include "hearts/homkit/iso.hpp"

#include <random>

namespace hearts::homkit {

namespace {

constexpr int kRandomAttempts = 64;
constexpr std::uint64_t kIsoPointLimit = 20000;
constexpr std::uint64_t kStablePointLimit = 200;

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Calls test on coefficient vectors up to scalars: every projective point
// when there are at most `limit` of them, otherwise the basis vectors
// followed by seeded random combinations.
template <class Test>
std::optional<Morphism> search(const HomBasis& h, std::uint64_t seed, std::uint64_t limit, Test test) {
  const std::size_t d = h.dim();
  if (d == 0) return std::nullopt;
  const la::Scalar p = h.source.field().prime();
  std::uint64_t points = 0, pk = 1;
  bool small = true;
  for (std::size_t i = 0; i < d && small; ++i) {
    points += pk;
    pk *= p;
    if (points > limit) small = false;
  }
  la::Vec c(d, 0);
  if (small) {
    // leading coefficient 1 at position lead, arbitrary entries after it
    for (std::size_t lead = 0; lead < d; ++lead) {
      std::uint64_t count = 1;
      for (std::size_t i = lead + 1; i < d; ++i) count *= p;
      for (std::uint64_t n = 0; n < count; ++n) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        std::uint64_t k = n;
        for (std::size_t i = lead + 1; i < d; ++i, k /= p) c[i] = static_cast<la::Scalar>(k % p);
        Morphism f = h.combine(c);
        if (test(f)) return f;
      }
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < d; ++i)
    if (test(h.basis[i])) return h.basis[i];
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<la::Scalar> dist(0, p - 1);
  for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
    for (auto& x : c) x = dist(rng);
    Morphism f = h.combine(c);
    if (test(f)) return f;
  }
  return std::nullopt;
}

bool singular(const Morphism& f) {
  for (std::size_t v = 0; v < f.maps().size(); ++v)
    if (la::rank(f.map(v)) < f.source().dim(v)) return true;
  return false;
}

}  // namespace

std::uint64_t content_seed(const Representation& x, const Representation& y) {
  return fnv1a(fnv1a(1469598103934665603ULL, x.key()), y.key());
}

std::optional<Morphism> find_isomorphism(const Representation& x, const Representation& y) {
  if (x.dims() != y.dims()) return std::nullopt;
  if (x.is_zero()) return Morphism::zero(x, y);
  if (x == y) return Morphism::identity(x);
  HomPtr h = hom_basis(x, y);
  return search(*h, content_seed(x, y), kIsoPointLimit, [](const Morphism& f) { return f.is_iso(); });
}

bool is_isomorphic(const Representation& x, const Representation& y) { return find_isomorphism(x, y).has_value(); }

bool is_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  const la::Field& f = m.field();
  HomPtr end = hom_basis(m, m);
  std::size_t v0 = 0;
  while (m.dim(v0) == 0) ++v0;
  const Morphism id = Morphism::identity(m);

  std::vector<la::Vec> nil_rows;
  for (const auto& e : end->basis) {
    const la::Mat& a = e.map(v0);
    la::Scalar lambda = 0;
    bool found = false;
    if (m.dim(v0) % f.prime() != 0) {
      la::Scalar tr = 0;
      for (std::size_t i = 0; i < a.rows(); ++i) tr = f.add(tr, a(i, i));
      lambda = f.mul(tr, f.inv(static_cast<la::Scalar>(m.dim(v0) % f.prime())));
      found = singular(e - id.scaled(lambda));
    }
    for (la::Scalar l = 0; !found && l < f.prime(); ++l)
      if (singular(e - id.scaled(l))) { lambda = l; found = true; }
    if (!found) return false;
    nil_rows.push_back((e - id.scaled(lambda)).flatten());
  }
  const std::size_t len = Morphism::flat_size(m, m);
  auto as_subspace = [&](const std::vector<la::Vec>& rows) {
    la::Mat mat(f, rows.size(), len);
    for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), mat.row(r));
    return la::Subspace::of_rows(mat);
  };
  la::Subspace n = as_subspace(nil_rows);
  std::vector<Morphism> nb;
  for (std::size_t i = 0; i < n.dim(); ++i) nb.push_back(Morphism::from_flat(m, m, n.basis().row_vec(i)));

  // N closed under products and N^k = 0 for some k
  std::vector<Morphism> power = nb;
  for (std::size_t step = 0; step <= m.total_dim() + 1; ++step) {
    if (power.empty()) return true;
    std::vector<la::Vec> prod;
    for (const auto& a : power)
      for (const auto& b : nb) {
        Morphism ab = compose(a, b);
        if (!n.contains(ab.flatten())) return false;
        prod.push_back(ab.flatten());
      }
    la::Subspace next = as_subspace(prod);
    power.clear();
    for (std::size_t i = 0; i < next.dim(); ++i) power.push_back(Morphism::from_flat(m, m, next.basis().row_vec(i)));
  }
  return false;
}

std::optional<Morphism> stable_inverse(const Morphism& f, const Subcategory& c) {
  auto g = solve_pre(Morphism::identity(f.source()), f, &c);
  if (!g) return std::nullopt;
  if (!factors_through(compose(f, *g) - Morphism::identity(f.target()), c)) return std::nullopt;
  return g;
}

bool is_stable_iso(const Morphism& f, const Subcategory& c) { return stable_inverse(f, c).has_value(); }

std::optional<Morphism> find_stable_isomorphism(const Representation& x, const Representation& y, const Subcategory& c) {
  const bool x0 = in_add(x, c), y0 = in_add(y, c);
  if (x0 && y0) return Morphism::zero(x, y);
  if (x0 != y0) return std::nullopt;
  HomPtr h = hom_basis(x, y);
  return search(*h, content_seed(x, y), kStablePointLimit, [&](const Morphism& f) { return is_stable_iso(f, c); });
}

bool stably_isomorphic(const Representation& x, const Representation& y, const Subcategory& c) {
  return find_stable_isomorphism(x, y, c).has_value();
}

}  // namespace hearts::homkit
