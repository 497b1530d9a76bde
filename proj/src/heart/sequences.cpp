#include "hearts/heart/sequences.hpp"

#include <random>

#include "hearts/homkit/hom.hpp"
#include "hearts/quiver/constructions.hpp"

namespace hearts::heart {

std::optional<Morphism> random_mono(const Representation& a, const Representation& e, std::uint64_t seed) {
  homkit::HomPtr h = homkit::hom_basis(a, e);
  if (h->dim() == 0) return a.is_zero() ? std::optional<Morphism>(Morphism::zero(a, e)) : std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<la::Scalar> dist(0, a.field().prime() - 1);
  la::Vec c(h->dim());
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& x : c) x = dist(rng);
    Morphism f = h->combine(c);
    if (f.is_mono()) return f;
  }
  return std::nullopt;
}

std::vector<NamedSes> random_conflations(const std::vector<Representation>& objects,
                                         const std::vector<std::string>& names, std::size_t count,
                                         std::uint64_t seed) {
  std::vector<NamedSes> out;
  if (objects.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, objects.size() - 1);
  const auto& alg = objects.front().algebra_ptr();
  std::size_t guard = 0;
  while (out.size() < count && guard++ < 200 * count + 1000) {
    const std::size_t ia = pick(rng);
    std::vector<std::size_t> parts{pick(rng)};
    if (rng() % 2) parts.push_back(pick(rng));
    std::vector<Representation> summands;
    std::string ename;
    for (std::size_t p : parts) {
      summands.push_back(objects[p]);
      ename += (ename.empty() ? "" : " (+) ") + names[p];
    }
    Representation e = quiver::direct_sum_object(alg, summands);
    auto f = random_mono(objects[ia], e, rng());
    if (!f) continue;
    quiver::Cokernel c = quiver::cokernel(*f);
    out.push_back({quiver::validate_ses(*f, c.projection), names[ia] + " -> " + ename});
  }
  return out;
}

std::vector<HeartSes> heart_sequences(PairEngine& engine, const std::vector<Representation>& heart_objects,
                                      const std::vector<std::string>& names) {
  std::vector<HeartSes> out;
  for (std::size_t i = 0; i < heart_objects.size(); ++i)
    for (std::size_t j = 0; j < heart_objects.size(); ++j) {
      for (const auto& mu : homkit::hom_basis(heart_objects[i], heart_objects[j])->basis) {
        if (homkit::factors_through(mu, engine.w())) continue;
        HeartKc k = heart_kc(engine, mu, KcSide::Kernel);
        HeartKc c = heart_kc(engine, mu, KcSide::Cokernel);
        HeartImage im = heart_image(engine, mu);
        const std::string tag = names[i] + " -> " + names[j];
        out.push_back({k.map, im.coimage, "ker/im of " + tag});
        out.push_back({im.image, c.map, "im/coker of " + tag});
      }
    }
  return out;
}

}  // namespace hearts::heart
