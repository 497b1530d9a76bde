#include "hearts/homkit/approx.hpp"

#include "hearts/error.hpp"

namespace hearts::homkit {

namespace {

struct Summand {
  std::size_t gen;
  Morphism map;  // gen -> b (right) or b -> gen (left)
};

// Every map between b and a generator arises from the kept summands.
bool covers(const std::vector<Summand>& kept, const std::vector<bool>& alive, const Representation& b,
            const Subcategory& c, ApproxSide side) {
  const auto& gens = c.generators();
  for (std::size_t l = 0; l < gens.size(); ++l) {
    HomPtr target = side == ApproxSide::Right ? hom_basis(gens[l], b) : hom_basis(b, gens[l]);
    if (target->dim() == 0) continue;
    std::vector<la::Vec> rows;
    for (std::size_t s = 0; s < kept.size(); ++s) {
      if (!alive[s]) continue;
      const std::size_t i = kept[s].gen;
      if (side == ApproxSide::Right) {
        for (const auto& h : hom_basis(gens[l], gens[i])->basis) rows.push_back(compose(kept[s].map, h).flatten());
      } else {
        for (const auto& h : hom_basis(gens[i], gens[l])->basis) rows.push_back(compose(h, kept[s].map).flatten());
      }
    }
    if (rows.size() < target->dim()) return false;
    la::Mat m(b.field(), rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), m.row(r));
    if (la::rank(m) < target->dim()) return false;
  }
  return true;
}

}  // namespace

Approximation minimal_approx(const Representation& b, const Subcategory& c, ApproxSide side) {
  const auto& gens = c.generators();
  std::vector<Summand> summands;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    HomPtr h = side == ApproxSide::Right ? hom_basis(gens[i], b) : hom_basis(b, gens[i]);
    for (const auto& e : h->basis) summands.push_back({i, e});
  }
  std::vector<bool> alive(summands.size(), true);
  for (std::size_t s = 0; s < summands.size(); ++s) {
    alive[s] = false;
    if (!covers(summands, alive, b, c, side)) alive[s] = true;
  }

  std::vector<Representation> parts;
  Approximation out;
  for (std::size_t s = 0; s < summands.size(); ++s)
    if (alive[s]) {
      parts.push_back(gens[summands[s].gen]);
      out.summand_generators.push_back(summands[s].gen);
    }
  out.object = quiver::direct_sum(b.algebra_ptr(), parts);
  if (side == ApproxSide::Right) {
    Morphism total = Morphism::zero(out.object.object, b);
    std::size_t k = 0;
    for (std::size_t s = 0; s < summands.size(); ++s)
      if (alive[s]) total = total + compose(summands[s].map, out.object.projections[k++]);
    out.map = total;
  } else {
    Morphism total = Morphism::zero(b, out.object.object);
    std::size_t k = 0;
    for (std::size_t s = 0; s < summands.size(); ++s)
      if (alive[s]) total = total + compose(out.object.injections[k++], summands[s].map);
    out.map = total;
  }
  return out;
}

}  // namespace hearts::homkit
