#include "hearts/quiver/algebra.hpp"

#include <algorithm>

#include "hearts/error.hpp"

namespace hearts::quiver {

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

bool Path::operator<(const Path& o) const {
  if (source != o.source) return source < o.source;
  if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
  return arrows < o.arrows;
}

std::size_t Algebra::target_of(const Path& p) const {
  return p.arrows.empty() ? p.source : quiver_.arrows[p.arrows.back()].target;
}

const std::vector<Path>& Algebra::basis(std::size_t s, std::size_t t) const { return basis_.at(s).at(t); }

std::size_t Algebra::dimension() const {
  std::size_t d = 0;
  for (const auto& row : basis_)
    for (const auto& b : row) d += b.size();
  return d;
}

la::Vec Algebra::reduce(const Path& p) const {
  const std::size_t t = target_of(p);
  const auto& table = reduction_.at(p.source).at(t);
  auto it = table.find(p);
  if (it != table.end()) return it->second;
  if (p.arrows.size() >= bound_) return la::Vec(basis_[p.source][t].size(), 0);
  throw Error(ErrorKind::InvalidAlgebra, "path not in reduction table");
}

namespace {

struct PairData {
  std::vector<Path> paths;  // column order: longer first
  std::map<Path, std::size_t> column;
  std::vector<la::Vec> ideal_rows;
};

bool column_before(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() > b.arrows.size();
  return a.arrows < b.arrows;
}

}  // namespace

AlgebraPtr Algebra::create(la::Field field, Quiver quiver, std::vector<Relation> relations, std::size_t path_cap) {
  const std::size_t n = quiver.vertex_count;
  if (n == 0) throw Error(ErrorKind::InvalidAlgebra, "quiver without vertices");
  for (const auto& a : quiver.arrows)
    if (a.source >= n || a.target >= n) throw Error(ErrorKind::InvalidAlgebra, "arrow " + a.name + " has a bad endpoint");
  for (std::size_t i = 0; i < quiver.arrows.size(); ++i)
    for (std::size_t j = i + 1; j < quiver.arrows.size(); ++j)
      if (quiver.arrows[i].name == quiver.arrows[j].name)
        throw Error(ErrorKind::InvalidAlgebra, "duplicate arrow name " + quiver.arrows[i].name);

  std::shared_ptr<Algebra> alg(new Algebra(field, quiver, relations));

  for (std::size_t ri = 0; ri < relations.size(); ++ri) {
    const auto& rel = relations[ri];
    if (rel.empty()) throw Error(ErrorKind::InvalidAlgebra, "empty relation");
    ResolvedRelation rr{};
    bool first = true;
    for (const auto& term : rel) {
      if (term.arrows.size() < 2)
        throw Error(ErrorKind::InvalidAlgebra, "relation terms must have length at least two");
      Path p;
      for (std::size_t k = 0; k < term.arrows.size(); ++k) {
        auto idx = quiver.arrow_index(term.arrows[k]);
        if (!idx) throw Error(ErrorKind::InvalidAlgebra, "unknown arrow " + term.arrows[k]);
        if (k == 0) p.source = quiver.arrows[*idx].source;
        else if (quiver.arrows[p.arrows.back()].target != quiver.arrows[*idx].source)
          throw Error(ErrorKind::InvalidAlgebra, "relation term is not a path");
        p.arrows.push_back(*idx);
      }
      std::size_t t = alg->target_of(p);
      if (first) { rr.source = p.source; rr.target = t; first = false; }
      else if (rr.source != p.source || rr.target != t)
        throw Error(ErrorKind::InvalidAlgebra, "relation terms are not parallel");
      rr.terms.push_back({field.reduce(term.coefficient), p});
    }
    alg->resolved_.push_back(rr);
  }

  // outgoing arrows per vertex
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < quiver.arrows.size(); ++a) out[quiver.arrows[a].source].push_back(a);

  std::vector<std::vector<Path>> by_length;  // all paths of a given length
  {
    std::vector<Path> zero;
    for (std::size_t v = 0; v < n; ++v) zero.push_back(Path{v, {}});
    by_length.push_back(zero);
  }
  std::size_t total = n;

  for (std::size_t len = 1;; ++len) {
    std::vector<Path> next;
    for (const Path& p : by_length.back())
      for (std::size_t a : out[alg->target_of(p)]) {
        Path q = p;
        q.arrows.push_back(a);
        next.push_back(std::move(q));
      }
    total += next.size();
    if (total > path_cap)
      throw Error(ErrorKind::PathCapExceeded, "more than " + std::to_string(path_cap) + " paths enumerated");
    by_length.push_back(next);

    std::vector<std::vector<PairData>> pd(n, std::vector<PairData>(n));
    for (const auto& layer : by_length)
      for (const Path& p : layer) pd[p.source][alg->target_of(p)].paths.push_back(p);
    for (auto& row : pd)
      for (auto& d : row) {
        std::sort(d.paths.begin(), d.paths.end(), column_before);
        for (std::size_t i = 0; i < d.paths.size(); ++i) d.column[d.paths[i]] = i;
      }

    // ideal elements u r w with every term of length <= len
    for (const auto& rr : alg->resolved_) {
      std::size_t maxlen = 0;
      for (const auto& t : rr.terms) maxlen = std::max(maxlen, t.path.arrows.size());
      if (maxlen > len) continue;
      std::size_t slack = len - maxlen;
      for (std::size_t lu = 0; lu <= slack; ++lu)
        for (const Path& u : by_length[lu]) {
          if (alg->target_of(u) != rr.source) continue;
          for (std::size_t lw = 0; lu + lw <= slack; ++lw)
            for (const Path& w : by_length[lw]) {
              if (w.source != rr.target) continue;
              auto& d = pd[u.source][alg->target_of(w)];
              la::Vec row(d.paths.size(), 0);
              for (const auto& t : rr.terms) {
                Path full{u.source, u.arrows};
                full.arrows.insert(full.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
                full.arrows.insert(full.arrows.end(), w.arrows.begin(), w.arrows.end());
                std::size_t c = d.column.at(full);
                row[c] = field.add(row[c], t.coefficient);
              }
              d.ideal_rows.push_back(std::move(row));
            }
        }
    }

    bool closed = true;
    std::vector<std::vector<la::Echelon>> ech(n);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        auto& d = pd[s][t];
        la::Mat m(field, d.ideal_rows.size(), d.paths.size());
        for (std::size_t r = 0; r < d.ideal_rows.size(); ++r)
          for (std::size_t c = 0; c < d.paths.size(); ++c) m(r, c) = d.ideal_rows[r][c];
        ech[s].push_back(la::row_reduce(std::move(m)));
        std::vector<bool> pivot(d.paths.size(), false);
        for (std::size_t c : ech[s][t].pivots) pivot[c] = true;
        for (std::size_t c = 0; c < d.paths.size(); ++c)
          if (d.paths[c].arrows.size() == len && !pivot[c]) closed = false;
      }
    if (!closed) continue;

    alg->bound_ = len;
    alg->basis_.assign(n, std::vector<std::vector<Path>>(n));
    alg->reduction_.assign(n, std::vector<std::map<Path, la::Vec>>(n));
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        auto& d = pd[s][t];
        const la::Echelon& e = ech[s][t];
        std::vector<bool> pivot(d.paths.size(), false);
        for (std::size_t c : e.pivots) pivot[c] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < d.paths.size(); ++c)
          if (!pivot[c]) free_cols.push_back(c);
        std::sort(free_cols.begin(), free_cols.end(),
                  [&](std::size_t a, std::size_t b) { return d.paths[a] < d.paths[b]; });
        auto& basis = alg->basis_[s][t];
        for (std::size_t c : free_cols) basis.push_back(d.paths[c]);
        for (std::size_t c = 0; c < d.paths.size(); ++c) {
          // e_c minus its pivot-row corrections, read at free columns
          la::Vec coords(free_cols.size(), 0);
          if (pivot[c]) {
            std::size_t r = 0;
            while (e.pivots[r] != c) ++r;
            for (std::size_t j = 0; j < free_cols.size(); ++j) coords[j] = field.neg(e.rref(r, free_cols[j]));
          } else {
            for (std::size_t j = 0; j < free_cols.size(); ++j)
              if (free_cols[j] == c) coords[j] = 1;
          }
          alg->reduction_[s][t][d.paths[c]] = coords;
        }
      }
    break;
  }
  return alg;
}

}  // namespace hearts::quiver
