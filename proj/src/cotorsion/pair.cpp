#include "hearts/cotorsion/pair.hpp"

#include "hearts/error.hpp"
#include "hearts/homkit/iso.hpp"
#include "hearts/homkit/resolve.hpp"
#include "hearts/quiver/constructions.hpp"
#include "hearts/quiver/standard.hpp"

namespace hearts::cotorsion {

namespace {

using homkit::ApproxSide;

std::size_t generator_index(const Subcategory& c, const Representation& x) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (homkit::is_isomorphic(c.generators()[i], x)) return i;
  throw Error(ErrorKind::ConstructionFailed, "adjoined summand is not a generator of " + c.name());
}

struct Piece {
  Representation object;
  Morphism map;  // object -> b (epi side) or b -> object (mono side)
  std::size_t gen;
};

}  // namespace

bool PairCertificate::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

CotorsionPair make_pair(const std::string& name, const Subcategory& u, const Subcategory& v) {
  std::vector<Representation> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (homkit::in_add(u.generators()[i], v)) {
      gens.push_back(u.generators()[i]);
      names.push_back(u.generator_names()[i]);
    }
  return CotorsionPair{name, u, v, Subcategory(name + ".W", gens, names)};
}

SpecialSeq special_seq(const CotorsionPair& pair, const Representation& b, SeqSide side) {
  const bool epi = side == SeqSide::Epi;
  const Subcategory& c = epi ? pair.u : pair.v;
  homkit::Approximation a = homkit::minimal_approx(b, c, epi ? ApproxSide::Right : ApproxSide::Left);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < a.summand_generators.size(); ++i) {
    const Morphism m = epi ? compose(a.map, a.object.injections[i]) : compose(a.object.projections[i], a.map);
    pieces.push_back({c.generators()[a.summand_generators[i]], m, a.summand_generators[i]});
  }
  const bool sharp = epi ? a.map.is_epi() : a.map.is_mono();
  if (!sharp) {
    homkit::Cover cov = epi ? homkit::projective_cover(b) : homkit::injective_envelope(b);
    std::vector<Representation> parts;
    for (std::size_t v : cov.vertices)
      parts.push_back(epi ? quiver::projective(b.algebra_ptr(), v) : quiver::injective(b.algebra_ptr(), v));
    quiver::DirectSum s = quiver::direct_sum(b.algebra_ptr(), parts);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Morphism m = epi ? compose(cov.map, s.injections[i]) : compose(s.projections[i], cov.map);
      pieces.push_back({parts[i], m, generator_index(c, parts[i])});
    }
  }
  std::vector<Representation> parts;
  for (const auto& p : pieces) parts.push_back(p.object);
  quiver::DirectSum sum = quiver::direct_sum(b.algebra_ptr(), parts);
  SpecialSeq out;
  Morphism total = epi ? Morphism::zero(sum.object, b) : Morphism::zero(b, sum.object);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    total = total + (epi ? compose(pieces[i].map, sum.projections[i]) : compose(sum.injections[i], pieces[i].map));
    out.generators.push_back(pieces[i].gen);
  }
  if (epi) {
    quiver::Kernel k = quiver::kernel(total);
    if (!homkit::in_add(k.inclusion.source(), pair.v))
      throw Error(ErrorKind::ConstructionFailed, pair.name + ": kernel of the right approximation is not in add(v)");
    out.ses = quiver::validate_ses(k.inclusion, total);
  } else {
    quiver::Cokernel k = quiver::cokernel(total);
    if (!homkit::in_add(k.projection.target(), pair.u))
      throw Error(ErrorKind::ConstructionFailed, pair.name + ": cokernel of the left approximation is not in add(u)");
    out.ses = quiver::validate_ses(total, k.projection);
  }
  return out;
}

CheckRecord extension_closed(const Subcategory& c) {
  CheckRecord rec{"extension_closed(" + c.name() + ")", true, ""};
  for (std::size_t i = 0; i < c.size() && rec.ok; ++i)
    for (std::size_t j = 0; j < c.size() && rec.ok; ++j) {
      homkit::ExtSpace e(c.generators()[i], c.generators()[j]);
      if (e.dim() == 0) continue;
      std::vector<la::Vec> samples;
      for (std::size_t k = 0; k < e.dim(); ++k) {
        la::Vec v(e.dim(), 0);
        v[k] = 1;
        samples.push_back(v);
      }
      if (e.dim() > 1) samples.push_back(la::Vec(e.dim(), 1));
      for (const auto& s : samples) {
        Ses ses = e.extension(s);
        if (!homkit::in_add(ses.middle(), c)) {
          rec.ok = false;
          rec.detail = "extension of " + c.generator_names()[i] + " by " + c.generator_names()[j] + " leaves add";
          break;
        }
      }
    }
  return rec;
}

PairCertificate certify_pair(const std::string& name, const Subcategory& u, const Subcategory& v,
                             const std::vector<Representation>& testset) {
  PairCertificate cert{make_pair(name, u, v), {}};
  auto& checks = cert.checks;

  CheckRecord gens{"generators_indecomposable", true, ""};
  try {
    homkit::validate_subcategory(u);
    homkit::validate_subcategory(v);
  } catch (const Error& e) {
    gens.ok = false;
    gens.detail = e.what();
  }
  checks.push_back(gens);

  CheckRecord ext{"ext_vanishing", true, ""};
  for (std::size_t i = 0; i < u.size() && ext.ok; ++i)
    for (std::size_t j = 0; j < v.size() && ext.ok; ++j)
      if (homkit::ext1_dim(u.generators()[i], v.generators()[j]) != 0) {
        ext.ok = false;
        ext.detail = "Ext1(" + u.generator_names()[i] + ", " + v.generator_names()[j] + ") != 0";
      }
  checks.push_back(ext);

  const auto& alg = u.generators().empty() ? v.generators().front().algebra_ptr() : u.generators().front().algebra_ptr();
  CheckRecord proj{"projectives_in_u", true, ""}, inj{"injectives_in_v", true, ""};
  for (std::size_t x = 0; x < alg->vertex_count(); ++x) {
    if (proj.ok && !homkit::in_add(quiver::projective(alg, x), u)) {
      proj.ok = false;
      proj.detail = "P(" + std::to_string(x + 1) + ") not in add(u)";
    }
    if (inj.ok && !homkit::in_add(quiver::injective(alg, x), v)) {
      inj.ok = false;
      inj.detail = "I(" + std::to_string(x + 1) + ") not in add(v)";
    }
  }
  checks.push_back(proj);
  checks.push_back(inj);
  checks.push_back(extension_closed(u));
  checks.push_back(extension_closed(v));

  CheckRecord seqs{"special_sequences", true, ""};
  for (std::size_t t = 0; t < testset.size() && seqs.ok; ++t)
    for (SeqSide side : {SeqSide::Epi, SeqSide::Mono}) {
      try {
        special_seq(cert.pair, testset[t], side);
      } catch (const Error& e) {
        seqs.ok = false;
        seqs.detail = "test object " + std::to_string(t) + (side == SeqSide::Epi ? " (epi side): " : " (mono side): ") + e.what();
        break;
      }
    }
  checks.push_back(seqs);
  return cert;
}

CotorsionPair verify_pair(const std::string& name, const Subcategory& u, const Subcategory& v,
                          const std::vector<Representation>& testset) {
  PairCertificate cert = certify_pair(name, u, v, testset);
  for (const auto& c : cert.checks)
    if (!c.ok) throw Error(ErrorKind::InvalidPair, name + ": " + c.name + " failed: " + c.detail);
  return cert.pair;
}

}  // namespace hearts::cotorsion
