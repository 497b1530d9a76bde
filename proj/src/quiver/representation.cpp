#include "hearts/quiver/representation.hpp"

#include <cstring>

#include "hearts/error.hpp"

namespace hearts::quiver {

namespace {

void append_u32(std::string& s, std::uint32_t v) {
  char buf[4];
  std::memcpy(buf, &v, 4);
  s.append(buf, 4);
}

}  // namespace

Representation::Representation(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<la::Mat> arrow_maps) {
  if (!alg) throw Error(ErrorKind::InvalidModule, "missing algebra");
  const Quiver& q = alg->quiver();
  if (dims.size() != q.vertex_count) throw Error(ErrorKind::InvalidModule, "dimension vector length");
  if (arrow_maps.size() != q.arrows.size()) throw Error(ErrorKind::InvalidModule, "arrow map count");
  auto d = std::make_shared<Data>();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const la::Mat& m = arrow_maps[a];
    if (m.rows() != dims[q.arrows[a].target] || m.cols() != dims[q.arrows[a].source])
      throw Error(ErrorKind::InvalidModule, "arrow " + q.arrows[a].name + " has the wrong shape");
    if (m.field().prime() != alg->field().prime()) throw Error(ErrorKind::InvalidModule, "field mismatch");
  }
  for (std::size_t v : dims) d->total += v;
  d->key.reserve(4 * (dims.size() + d->total * d->total));
  for (std::size_t v : dims) append_u32(d->key, static_cast<std::uint32_t>(v));
  for (const auto& m : arrow_maps)
    for (la::Scalar x : m.data()) append_u32(d->key, x);
  d->alg = std::move(alg);
  d->dims = std::move(dims);
  d->maps = std::move(arrow_maps);
  data_ = std::move(d);
}

Representation Representation::zero(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<la::Mat> maps;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) maps.emplace_back(alg->field(), 0, 0);
  return Representation(alg, std::vector<std::size_t>(q.vertex_count, 0), std::move(maps));
}

la::Mat Representation::path_action(const Path& p) const {
  la::Mat m = la::Mat::identity(field(), dim(p.source));
  for (std::size_t a : p.arrows) m = arrow_map(a) * m;
  return m;
}

bool satisfies_relations(const Representation& m) {
  for (const auto& rel : m.algebra().resolved_relations()) {
    la::Mat acc(m.field(), m.dim(rel.target), m.dim(rel.source));
    for (const auto& t : rel.terms) acc.add_scaled(m.path_action(t.path), t.coefficient);
    if (!acc.is_zero()) return false;
  }
  return true;
}

Representation validate_module(const Representation& m) {
  if (!satisfies_relations(m)) throw Error(ErrorKind::InvalidModule, "a relation does not act as zero");
  return m;
}

Morphism::Morphism(Representation source, Representation target, std::vector<la::Mat> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
  if (maps_.size() != source_.vertex_count()) throw Error(ErrorKind::InvalidMorphism, "vertex count");
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (maps_[v].rows() != target_.dim(v) || maps_[v].cols() != source_.dim(v))
      throw Error(ErrorKind::InvalidMorphism, "vertex map has the wrong shape");
}

Morphism Morphism::zero(const Representation& source, const Representation& target) {
  std::vector<la::Mat> maps;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) maps.emplace_back(source.field(), target.dim(v), source.dim(v));
  return Morphism(source, target, std::move(maps));
}

Morphism Morphism::identity(const Representation& x) {
  std::vector<la::Mat> maps;
  for (std::size_t v = 0; v < x.vertex_count(); ++v) maps.push_back(la::Mat::identity(x.field(), x.dim(v)));
  return Morphism(x, x, std::move(maps));
}

std::size_t Morphism::flat_size(const Representation& source, const Representation& target) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) n += source.dim(v) * target.dim(v);
  return n;
}

Morphism Morphism::from_flat(const Representation& source, const Representation& target, const la::Vec& flat) {
  if (flat.size() != flat_size(source, target)) throw Error(ErrorKind::Shape, "flat morphism length");
  std::vector<la::Mat> maps;
  std::size_t off = 0;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    la::Mat m(source.field(), target.dim(v), source.dim(v));
    std::copy(flat.begin() + off, flat.begin() + off + m.data().size(), m.data().begin());
    off += m.data().size();
    maps.push_back(std::move(m));
  }
  return Morphism(source, target, std::move(maps));
}

la::Vec Morphism::flatten() const {
  la::Vec out;
  out.reserve(flat_size(source_, target_));
  for (const auto& m : maps_) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

bool Morphism::commutes() const {
  const Quiver& q = source_.algebra().quiver();
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (target_.arrow_map(a) * maps_[ar.source] != maps_[ar.target] * source_.arrow_map(a)) return false;
  }
  return true;
}

bool Morphism::is_zero() const {
  for (const auto& m : maps_)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::is_mono() const {
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (la::rank(maps_[v]) != source_.dim(v)) return false;
  return true;
}

bool Morphism::is_epi() const {
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (la::rank(maps_[v]) != target_.dim(v)) return false;
  return true;
}

bool Morphism::is_iso() const { return source_.dims() == target_.dims() && is_mono(); }

Morphism Morphism::operator+(const Morphism& o) const {
  std::vector<la::Mat> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] + o.maps_[v]);
  return Morphism(source_, target_, std::move(maps));
}

Morphism Morphism::operator-(const Morphism& o) const {
  std::vector<la::Mat> maps;
  for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] - o.maps_[v]);
  return Morphism(source_, target_, std::move(maps));
}

Morphism Morphism::scaled(la::Scalar c) const {
  std::vector<la::Mat> maps;
  for (const auto& m : maps_) maps.push_back(m.scaled(c));
  return Morphism(source_, target_, std::move(maps));
}

bool Morphism::operator==(const Morphism& o) const {
  return source_ == o.source_ && target_ == o.target_ && maps_ == o.maps_;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.target() == g.source())) throw Error(ErrorKind::InvalidMorphism, "composition of non-composable maps");
  std::vector<la::Mat> maps;
  for (std::size_t v = 0; v < f.maps().size(); ++v) maps.push_back(g.map(v) * f.map(v));
  return Morphism(f.source(), g.target(), std::move(maps));
}

Morphism validate_morphism(const Morphism& f) {
  if (!f.commutes()) throw Error(ErrorKind::InvalidMorphism, "a square does not commute");
  return f;
}

Ses validate_ses(const Morphism& f, const Morphism& g) {
  if (!(f.target() == g.source())) throw Error(ErrorKind::Shape, "maps are not composable");
  validate_morphism(f);
  validate_morphism(g);
  if (!f.is_mono()) throw Error(ErrorKind::NotMono, "first map is not injective");
  if (!g.is_epi()) throw Error(ErrorKind::NotEpi, "second map is not surjective");
  if (!compose(g, f).is_zero()) throw Error(ErrorKind::NotExact, "composite is nonzero");
  const auto& B = f.target();
  for (std::size_t v = 0; v < B.vertex_count(); ++v)
    if (f.source().dim(v) + g.target().dim(v) != B.dim(v))
      throw Error(ErrorKind::NotExact, "image and kernel differ at a vertex");
  return Ses{f, g};
}

}  // namespace hearts::quiver
