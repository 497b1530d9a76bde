#include "hearts/compare/duo.hpp"

#include <functional>

#include "hearts/error.hpp"
#include "hearts/heart/heart.hpp"
#include "hearts/heart/oracle.hpp"
#include "hearts/homkit/hom.hpp"
#include "hearts/homkit/iso.hpp"

namespace hearts::compare {

using homkit::Subcategory;

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

bool killed(PairEngine& e, const Representation& x) { return e.heart_zero(e.h_obj(x)); }

// Basis of the maps x -> y that factor through c.
std::vector<Morphism> ideal_basis(const Representation& x, const Representation& y, const Subcategory& c) {
  auto span = homkit::ideal_span(x, y, c);
  std::vector<Morphism> out;
  for (std::size_t i = 0; i < span->dim(); ++i) out.push_back(Morphism::from_flat(x, y, span->basis().row_vec(i)));
  return out;
}

}  // namespace

ObjectSet ObjectSet::from_catalog(const homkit::Catalog& c, const std::vector<std::string>& names) {
  return ObjectSet{&c, c.modules(), names};
}

std::string ObjectSet::describe(const Representation& x, const Subcategory& drop) const {
  if (!catalog) return "?";
  auto parts = catalog->summand_names(x, &drop);
  return parts.empty() ? "0" : join(parts, " + ");
}

PairDuo duo(PairEngine& first, PairEngine& second) {
  if (first.pair().u.generators().empty() || second.pair().u.generators().empty() ||
      &first.pair().u.generators().front().algebra() != &second.pair().u.generators().front().algebra())
    throw Error(ErrorKind::InvalidPair, "duo: pairs live over different algebras");
  PairDuo d{&first, &second, true};
  for (const auto& w : first.w().generators()) d.w1_condition = d.w1_condition && killed(second, w);
  return d;
}

Representation beta(const PairDuo& d, const Representation& x) {
  if (!d.w1_condition) throw Error(ErrorKind::InvalidPair, "comparison functor needs H2(W1) = 0");
  return d.second->h_obj(x);
}

Morphism beta(const PairDuo& d, const Morphism& f) {
  if (!d.w1_condition) throw Error(ErrorKind::InvalidPair, "comparison functor needs H2(W1) = 0");
  return d.second->h_mor(f);
}

ObjectSet heart_fixtures(PairEngine& engine, const ObjectSet& all) {
  ObjectSet out{all.catalog, {}, {}};
  for (std::size_t i : heart::heart_members(engine, all.objects)) {
    out.objects.push_back(all.objects[i]);
    out.names.push_back(all.names[i]);
  }
  return out;
}

bool beta_well_defined(const PairDuo& d, const ObjectSet& first_heart) {
  const Subcategory& w2 = d.second->w();
  for (const auto& a : first_heart.objects)
    for (const auto& b : first_heart.objects)
      for (const auto& f : ideal_basis(a, b, d.first->w()))
        if (!homkit::factors_through(beta(d, f), w2)) return false;
  return true;
}

Lemma51 lemma51_check(const PairDuo& d, std::size_t oracle_cap) {
  Lemma51 r;
  PairEngine& first = *d.first;
  auto visit = [&](const Subcategory& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto& g = c.generators()[i];
      if (!killed(first, g)) {
        r.lhs = false;
        r.lhs_failures.push_back(c.generator_names()[i]);
      }
      if (!heart::add_star_oracle(first.pair(), g, oracle_cap, 1)) {
        r.rhs = false;
        r.rhs_failures.push_back(c.generator_names()[i]);
      }
    }
  };
  visit(d.second->pair().u);
  visit(d.second->pair().v);
  return r;
}

bool star_inclusion(PairEngine& first, PairEngine& second) {
  for (const auto* c : {&first.pair().u, &first.pair().v})
    for (const auto& g : c->generators())
      if (!killed(second, g)) return false;
  return true;
}

std::vector<heart::HeartSes> heart_sample(PairEngine& engine, const ObjectSet& heart) {
  return heart::heart_sequences(engine, heart.objects, heart.names);
}

ExactnessReport beta_exactness(const PairDuo& d, const std::vector<heart::HeartSes>& sample, const ObjectSet& all) {
  ExactnessReport r;
  r.hypothesis = star_inclusion(*d.first, *d.second);
  PairEngine& second = *d.second;
  for (const auto& s : sample) {
    Morphism bf = beta(d, s.f), bg = beta(d, s.g);
    SesOutcome o;
    o.label = s.label;
    o.half_exact = heart::exact_at(second, bf, bg);
    o.mono = heart::heart_mono_epi(second, bf).mono;
    o.epi = heart::heart_mono_epi(second, bg).epi;
    ++r.sampled;
    r.half_exact = r.half_exact && o.half_exact;
    r.exact = r.exact && o.mono && o.epi;
    if (!o.half_exact || !o.mono || !o.epi) {
      const Subcategory& w1 = d.first->w();
      o.terms = all.describe(s.f.source(), w1) + " -> " + all.describe(s.f.target(), w1) + " -> " +
                all.describe(s.g.target(), w1);
      r.failures.push_back(std::move(o));
    }
  }
  return r;
}

SerreReport serre_check(const PairDuo& d, const ObjectSet& first_heart, const std::vector<heart::HeartSes>& sample,
                        const ObjectSet& all) {
  SerreReport r;
  PairEngine& second = *d.second;
  r.hypothesis = star_inclusion(*d.first, second);
  for (std::size_t i = 0; i < first_heart.objects.size(); ++i) {
    const auto& x = first_heart.objects[i];
    bool in = killed(second, x);
    if (in) r.members.push_back(first_heart.names[i]);
    if (in != heart::add_star_oracle(second.pair(), x, 2, 1)) ++r.oracle_disagreements;
  }
  for (const auto& s : sample) {
    bool a = killed(second, s.f.source()), b = killed(second, s.f.target()), c = killed(second, s.g.target());
    if (b != (a && c)) {
      r.closed = false;
      const Subcategory& w1 = d.first->w();
      r.violations.push_back(s.label + ": " + all.describe(s.f.source(), w1) + " -> " +
                             all.describe(s.f.target(), w1) + " -> " + all.describe(s.g.target(), w1));
    }
  }
  return r;
}

Prop53Report prop53_check(const PairDuo& d, const ObjectSet& first_heart) {
  Prop53Report r;
  PairEngine& first = *d.first;
  PairEngine& second = *d.second;
  r.hypothesis = d.w1_condition && star_inclusion(second, first);
  const Subcategory& w1 = first.w();
  std::vector<Morphism> rho;
  for (std::size_t i = 0; i < first_heart.objects.size(); ++i) {
    const auto& b = first_heart.objects[i];
    auto plus = second.plus(b);
    Morphism t = second.minus(plus->bplus)->gamma;
    Morphism hs = first.h_mor(plus->alpha);
    auto t_inv = homkit::stable_inverse(first.h_mor(t), w1);
    if (!t_inv || !homkit::is_stable_iso(hs, w1)) {
      r.invertible = false;
      r.failures.push_back("not invertible at " + first_heart.names[i]);
      rho.push_back(Morphism::zero(first.h_obj(b), first.h_obj(second.h_obj(b))));
      continue;
    }
    rho.push_back(compose(*t_inv, hs));
  }
  for (std::size_t i = 0; i < first_heart.objects.size(); ++i)
    for (std::size_t j = 0; j < first_heart.objects.size(); ++j)
      for (const auto& f : homkit::hom_basis(first_heart.objects[i], first_heart.objects[j])->basis) {
        Morphism lhs = compose(rho[j], first.h_mor(f));
        Morphism rhs = compose(first.h_mor(second.h_mor(f)), rho[i]);
        if (!homkit::stable_equal(lhs, rhs, w1)) {
          r.natural = false;
          r.failures.push_back("naturality fails on " + first_heart.names[i] + " -> " + first_heart.names[j]);
        }
      }
  return r;
}

std::vector<KernelRecord> kernel_characterization(PairEngine& other, const ObjectSet& heart, std::size_t oracle_cap) {
  std::vector<KernelRecord> out;
  for (std::size_t i = 0; i < heart.objects.size(); ++i)
    out.push_back({heart.names[i], killed(other, heart.objects[i]),
                   heart::add_star_oracle(other.pair(), heart.objects[i], oracle_cap, 1)});
  return out;
}

HeartMatch match_hearts(PairEngine& a, const ObjectSet& heart_a, PairEngine& b, const ObjectSet& heart_b) {
  HeartMatch m;
  const std::size_t n = heart_a.objects.size();
  if (n != heart_b.objects.size()) return m;
  auto table = [](PairEngine& e, const ObjectSet& s) {
    std::vector<std::vector<std::size_t>> t(s.objects.size(), std::vector<std::size_t>(s.objects.size()));
    for (std::size_t i = 0; i < s.objects.size(); ++i)
      for (std::size_t j = 0; j < s.objects.size(); ++j)
        t[i][j] = homkit::stable_hom_dim(s.objects[i], s.objects[j], e.w());
    return t;
  };
  auto ta = table(a, heart_a), tb = table(b, heart_b);
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool fits = true;
      for (std::size_t i = 0; i <= k && fits; ++i) {
        std::size_t ci = i == k ? c : image[i];
        fits = ta[k][i] == tb[c][ci] && ta[i][k] == tb[ci][c];
      }
      if (!fits) continue;
      used[c] = true;
      image[k] = c;
      if (place(k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  m.matched = place(0);
  if (m.matched)
    for (std::size_t i = 0; i < n; ++i) m.bijection.push_back({heart_a.names[i], heart_b.names[image[i]]});
  return m;
}

}  // namespace hearts::compare
