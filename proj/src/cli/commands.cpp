#include "hearts/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>

#include "CLI11.hpp"

#include "hearts/compare/duo.hpp"
#include "hearts/compare/ext_module.hpp"
#include "hearts/compare/twin.hpp"
#include "hearts/cotorsion/reflection.hpp"
#include "hearts/error.hpp"
#include "hearts/heart/heart.hpp"
#include "hearts/heart/les.hpp"
#include "hearts/heart/oracle.hpp"
#include "hearts/heart/sequences.hpp"
#include "hearts/homkit/hom.hpp"
#include "hearts/homkit/iso.hpp"
#include "hearts/homkit/resolve.hpp"
#include "hearts/quiver/standard.hpp"

namespace hearts::cli {

using nlohmann::json;
using cotorsion::PairEngine;
using quiver::Representation;

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorKind::Usage, what); }

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) usage(std::string("missing ") + flag);
  return value;
}

compare::ObjectSet all_objects(const Workspace& ws) {
  return compare::ObjectSet::from_catalog(ws.catalog(), ws.catalog_names());
}


std::string describe(const Workspace& ws, const Representation& x, const homkit::Subcategory& drop) {
  return all_objects(ws).describe(x, drop);
}

// Engines for the pairs named on the command line, certified on first use.
class Engines {
 public:
  explicit Engines(const Workspace& ws) : ws_(ws) {}
  PairEngine& get(const std::string& name) {
    auto& slot = engines_[name];
    if (!slot) {
      const auto& e = ws_.pair(name);
      slot = std::make_unique<PairEngine>(
          cotorsion::verify_pair(name, ws_.subcategory(e.u), ws_.subcategory(e.v), ws_.catalog().modules()));
    }
    return *slot;
  }

 private:
  const Workspace& ws_;
  std::map<std::string, std::unique_ptr<PairEngine>> engines_;
};

std::string certification_path(const std::string& workspace) {
  std::filesystem::path p(workspace);
  return (p.parent_path() / (p.stem().string() + ".certification.json")).string();
}

void check_algebra(const Options& o, const Workspace& ws, Report& r) {
  const auto& mods = ws.catalog().modules();
  const auto& names = ws.catalog_names();
  r.data()["vertices"] = ws.algebra()->vertex_count();
  r.data()["catalog_size"] = mods.size();
  r.check("modules satisfy the relations", true);
  std::vector<std::string> decomposable;
  for (std::size_t i = 0; i < mods.size(); ++i)
    if (!homkit::is_indecomposable(mods[i])) decomposable.push_back(names[i]);
  r.check("catalog modules are indecomposable", decomposable.empty(), decomposable.empty() ? json() : json(decomposable));
  std::vector<std::string> clashes;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j)
      if (homkit::is_isomorphic(mods[i], mods[j])) clashes.push_back(names[i] + " = " + names[j]);
  r.check("catalog modules are pairwise non-isomorphic", clashes.empty(), clashes.empty() ? json() : json(clashes));
  std::vector<std::string> missing;
  for (std::size_t v = 0; v < ws.algebra()->vertex_count(); ++v)
    for (auto kind : {quiver::StandardKind::Projective, quiver::StandardKind::Injective, quiver::StandardKind::Simple}) {
      Representation m = quiver::standard_module(ws.algebra(), kind, v);
      if (!ws.catalog().identify(m)) missing.push_back("vertex " + std::to_string(v + 1));
    }
  r.check("catalog contains the projectives, injectives and simples", missing.empty(),
          missing.empty() ? json() : json(missing));
  json table = certification_table(ws);
  if (o.emit_certification) r.data()["certification"] = table;
  const std::string path = certification_path(o.workspace);
  std::ifstream in(path);
  if (in) {
    json shipped;
    try {
      in >> shipped;
    } catch (const json::exception& e) {
      usage(path + ": " + e.what());
    }
    r.check("Hom and Ext tables match the shipped certification", shipped == table);
  }
}

void check_pair(const Options& o, const Workspace& ws, Report& r) {
  const auto& e = ws.pair(need(o.pair, "--pair"));
  auto cert = cotorsion::certify_pair(e.name, ws.subcategory(e.u), ws.subcategory(e.v), ws.catalog().modules());
  for (const auto& c : cert.checks) r.check(c.name, c.ok, c.detail.empty() ? json() : json(c.detail));
  std::vector<std::string> w;
  for (const auto& n : cert.pair.w.generator_names()) w.push_back(n);
  r.data()["w"] = w;
}

void heart_cmd(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  PairEngine& e = engines.get(need(o.pair, "--pair"));
  auto all = all_objects(ws);
  std::vector<std::string> heart, zero;
  for (std::size_t i = 0; i < all.objects.size(); ++i) {
    if (!e.in_heart(all.objects[i])) continue;
    (e.heart_zero(all.objects[i]) ? zero : heart).push_back(all.names[i]);
  }
  r.data()["heart"] = heart;
  r.data()["heart_zero_members"] = zero;
  std::vector<std::string> moved;
  for (std::size_t i = 0; i < all.objects.size(); ++i)
    if (e.in_heart(all.objects[i]) && !homkit::stably_isomorphic(e.h_obj(all.objects[i]), all.objects[i], e.w()))
      moved.push_back(all.names[i]);
  r.check("H fixes heart objects", moved.empty(), moved.empty() ? json() : json(moved));
  const json& exp = ws.expected();
  if (exp.contains("hearts") && exp["hearts"].contains(o.pair)) {
    auto want = exp["hearts"][o.pair].get<std::vector<std::string>>();
    std::set<std::string> a(want.begin(), want.end()), b(heart.begin(), heart.end());
    r.check("heart matches the fixture expectation", a == b, {{"expected", want}});
  }
}

void h_of(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  PairEngine& e = engines.get(need(o.pair, "--pair"));
  const Representation& x = ws.module(need(o.object, "--object"));
  Representation hx = e.h_obj(x);
  r.data()["object"] = o.object;
  r.data()["image"] = describe(ws, hx, e.w());
  r.check("image lies in the heart", e.in_heart(hx));
  const json& exp = ws.expected();
  if (exp.contains("h_values") && exp["h_values"].contains(o.pair) && exp["h_values"][o.pair].contains(o.object)) {
    auto want = exp["h_values"][o.pair][o.object].get<std::vector<std::string>>();
    std::string joined;
    for (std::size_t i = 0; i < want.size(); ++i) joined += (i ? " + " : "") + want[i];
    r.check("image matches the fixture expectation", r.data()["image"] == (joined.empty() ? "0" : joined),
            {{"expected", joined}});
  }
  if (!o.target.empty()) {
    const Representation& y = ws.module(o.target);
    auto basis = homkit::hom_basis(x, y)->basis;
    if (!o.has_index) usage("--target needs --index");
    if (o.index >= basis.size()) usage("--index out of range: Hom has dimension " + std::to_string(basis.size()));
    quiver::Morphism hf = e.h_mor(basis[o.index]);
    r.data()["morphism"] = {{"source", o.object}, {"target", o.target}, {"index", o.index},
                            {"zero", homkit::factors_through(hf, e.w())},
                            {"iso", homkit::is_stable_iso(hf, e.w())},
                            {"mono", heart::heart_mono_epi(e, hf).mono},
                            {"epi", heart::heart_mono_epi(e, hf).epi}};
    r.check("image morphism agrees with the second construction",
            e.sigma_plus_agrees(basis[o.index]) && e.sigma_minus_agrees(e.sigma_plus(basis[o.index])));
  }
}

void membership_cmd(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  PairEngine& e = engines.get(need(o.pair, "--pair"));
  auto all = all_objects(ws);
  json rows = json::array();
  for (std::size_t i = 0; i < all.objects.size(); ++i) {
    if (!o.object.empty() && all.names[i] != o.object) continue;
    auto m = e.membership(all.objects[i]);
    rows.push_back({{"name", all.names[i]}, {"b_plus", m.in_bplus}, {"b_minus", m.in_bminus},
                    {"heart", m.in_heart()}, {"w", e.heart_zero(all.objects[i])}});
  }
  if (!o.object.empty() && rows.empty()) usage("--object is not in the catalog: " + o.object);
  r.data()["membership"] = rows;
  bool v_plus = true, u_minus = true;
  for (const auto& g : e.pair().v.generators()) v_plus = v_plus && e.in_bplus(g);
  for (const auto& g : e.pair().u.generators()) u_minus = u_minus && e.in_bminus(g);
  r.check("v generators lie in B+", v_plus);
  r.check("u generators lie in B-", u_minus);
}

std::vector<heart::NamedSes> sample(const Workspace& ws, const Options& o, std::size_t fallback) {
  std::size_t n = o.random ? o.random : fallback;
  return heart::random_conflations(ws.catalog().modules(), ws.catalog_names(), n, o.seed);
}

void halfexact_cmd(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  PairEngine& e = engines.get(need(o.pair, "--pair"));
  auto s = sample(ws, o, 100);
  std::size_t passed = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool ok = heart::verify_half_exact(e, s[i].ses);
    passed += ok;
    r.check("half exact #" + std::to_string(i), ok, {{"conflation", s[i].label}});
  }
  r.data()["sampled"] = s.size();
  r.data()["passed"] = passed;
}

void les_cmd(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  PairEngine& e = engines.get(need(o.pair, "--pair"));
  if (o.depth == 0 || o.depth > 4) usage("--depth must be between 1 and 4");
  auto s = sample(ws, o, 25);
  std::size_t windows = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<std::pair<quiver::Ses, std::string>> level{{s[i].ses, s[i].label}};
    for (std::size_t d = 0; d < o.depth && !level.empty(); ++d) {
      std::vector<std::pair<quiver::Ses, std::string>> next;
      for (const auto& [ses, label] : level) {
        heart::LesReport rep = heart::les_window(e, ses);
        json flags = json::array();
        for (bool b : rep.exact) flags.push_back(b);
        r.check("exact window #" + std::to_string(i) + "." + std::to_string(d), rep.all_exact(),
                {{"conflation", label}, {"flags", flags}});
        ++windows;
        if (d + 1 < o.depth) {
          heart::Connecting c = heart::connecting(ses);
          next.push_back({c.left_aux, "left of " + label});
          next.push_back({c.right_aux, "right of " + label});
        }
      }
      level = std::move(next);
    }
  }
  r.data()["windows"] = windows;
}

void kernel_char_cmd(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  PairEngine& e = engines.get(need(o.pair, "--pair"));
  auto all = all_objects(ws);
  std::vector<std::string> kernel;
  for (std::size_t i = 0; i < all.objects.size(); ++i) {
    heart::AddStarResult a = heart::add_star_test(e, all.objects[i], o.oracle_cap, o.seed);
    if (a.via_h) kernel.push_back(all.names[i]);
    json detail = {{"via_h", a.via_h}, {"via_oracle", a.via_oracle}};
    if (!a.witness.empty()) detail["witness"] = a.witness;
    if (a.inconclusive)
      r.inconclusive(all.names[i], detail);
    else
      r.check(all.names[i], a.via_h == a.via_oracle, detail);
  }
  r.data()["kernel"] = kernel;
}

json outcomes(const std::vector<compare::SesOutcome>& fs) {
  std::set<std::string> seen;
  json out = json::array();
  for (const auto& f : fs) {
    if (!seen.insert(f.terms).second) continue;
    out.push_back({{"sequence", f.terms}, {"half_exact", f.half_exact}, {"mono", f.mono}, {"epi", f.epi}});
  }
  return out;
}

void compare_cmd(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  const std::string& from = need(o.from, "--from");
  const std::string& to = need(o.to, "--to");
  PairEngine& e1 = engines.get(from);
  PairEngine& e2 = engines.get(to);
  auto all = all_objects(ws);
  auto h1 = compare::heart_fixtures(e1, all);
  auto h2 = compare::heart_fixtures(e2, all);
  r.data()["first_heart"] = h1.names;
  r.data()["second_heart"] = h2.names;

  compare::PairDuo d = compare::duo(e1, e2);
  r.check("second H kills the first W", d.w1_condition);
  compare::Lemma51 l = compare::lemma51_check(d, o.oracle_cap);
  r.check("generator criterion: both sides agree", l.agree(),
          {{"vanishing", l.lhs}, {"inclusion", l.rhs}, {"vanishing_failures", l.lhs_failures},
           {"inclusion_failures", l.rhs_failures}});
  if (d.w1_condition) {
    r.check("comparison functor is well defined", compare::beta_well_defined(d, h1));
    auto samp = compare::heart_sample(e1, h1);
    compare::ExactnessReport ex = compare::beta_exactness(d, samp, all);
    r.check("comparison functor is half exact", ex.half_exact, {{"sampled", ex.sampled}});
    if (ex.hypothesis)
      r.check("comparison functor is exact", ex.exact, {{"witnesses", outcomes(ex.failures)}});
    r.data()["exact"] = ex.exact;
    r.data()["non_exact_witnesses"] = outcomes(ex.failures);

    compare::Prop53Report p = compare::prop53_check(d, h1);
    r.data()["round_trip_hypothesis"] = p.hypothesis;
    if (p.hypothesis)
      r.check("round trip through the second heart is naturally the identity", p.ok(),
              p.failures.empty() ? json() : json(p.failures));
  }
  json serre = json::object();
  for (auto [a, b, ha] : {std::tuple{&e1, &e2, &h1}, std::tuple{&e2, &e1, &h2}}) {
    compare::PairDuo dd = compare::duo(*a, *b);
    if (!dd.w1_condition || !compare::star_inclusion(*a, *b)) continue;
    compare::SerreReport s = compare::serre_check(dd, *ha, compare::heart_sample(*a, *ha), all);
    const std::string where = a->pair().name;
    serre[where] = s.members;
    r.check("Serre subcategory of the " + where + " heart", s.ok(),
            {{"members", s.members}, {"violations", s.violations}});
  }
  r.data()["serre"] = serre;
  auto kc = compare::kernel_characterization(e1, h2, o.oracle_cap);
  std::vector<std::string> bad, killed;
  for (const auto& k : kc) {
    if (k.killed != k.in_star) bad.push_back(k.name);
    if (k.killed) killed.push_back(k.name);
  }
  r.data()["backward_kernel"] = killed;
  r.check("backward kernel is the second heart inside add(u1 * v1)", bad.empty(), bad.empty() ? json() : json(bad));
  compare::HeartMatch m = compare::match_hearts(e1, h1, e2, h2);
  json bij = json::array();
  for (const auto& [a, b] : m.bijection) bij.push_back({a, b});
  r.data()["hearts_match"] = m.matched;
  r.data()["matching"] = bij;
}

void twin_cmd(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  std::string from = o.from, to = o.to;
  if (from.empty() && to.empty() && !ws.twins().empty()) {
    from = ws.twins().front().first;
    to = ws.twins().front().second;
  }
  need(from, "--from");
  need(to, "--to");
  compare::TwinPair tp;
  try {
    tp = compare::make_twin(engines.get(from), engines.get(to));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidPair) throw;
    r.check("twin condition", false, e.what());
    return;
  }
  r.check("twin condition", true);
  compare::TwinReport t = compare::twin_suite(tp, all_objects(ws));
  r.data()["wt"] = tp.wt.generator_names();
  r.data()["twin_heart"] = t.heart;
  r.data()["twin_heart_nonzero"] = t.nonzero_heart;
  r.check("H_k(f) vanishes iff f factors through Wt", t.zero_detection);
  r.check("comparison to each component heart is faithful", t.faithful);
  r.check("zero component heart forces zero twin heart", t.zero_remark);
  if (t.inclusions_checked) r.check("zero twin heart: component hearts sit in u2 and v1", t.inclusions);
  if (!t.failures.empty()) r.data()["failures"] = t.failures;
}

void g_functor_cmd(const Options& o, const Workspace& ws, Engines& engines, Report& r) {
  auto all = all_objects(ws);
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < all.objects.size(); ++i)
    if (o.object.empty() || all.names[i] == o.object) picks.push_back(i);
  if (picks.empty()) usage("--object is not in the catalog: " + o.object);
  json values = json::object();
  if (!o.subcategory.empty()) {
    const auto& m = ws.subcategory(o.subcategory);
    compare::ClusterTiltingReport ct = compare::cluster_tilting_check(m, all);
    r.check("subcategory contains the projectives", ct.contains_projectives);
    if (!ct.contains_projectives) return;
    r.data()["cluster_tilting"] = ct.ok();
    bool agree = true;
    for (std::size_t i : picks) {
      compare::ExtModule g = compare::ext_restriction_module(m, all.objects[i]);
      values[all.names[i]] = g.dims;
      agree = agree && (g.zero() == homkit::in_add(all.objects[i], m));
    }
    if (ct.ok()) r.check("vanishes exactly on the subcategory", agree);
  } else {
    PairEngine& e = engines.get(need(o.pair, "--pair"));
    bool rigid = true;
    for (const auto& g : e.pair().u.generators()) rigid = rigid && homkit::in_add(g, e.pair().v);
    r.check("first class lies in the second", rigid);
    if (!rigid) return;
    bool agree = true;
    for (std::size_t i : picks) {
      compare::ExtModule g = compare::ext_restriction_module(e, all.objects[i]);
      values[all.names[i]] = g.dims;
      agree = agree && (g.zero() == e.heart_zero(e.h_obj(all.objects[i])));
    }
    r.check("vanishes exactly where H does", agree);
  }
  r.data()["generators"] = o.subcategory.empty() ? engines.get(o.pair).pair().u.generator_names()
                                                 : ws.subcategory(o.subcategory).generator_names();
  r.data()["values"] = values;
}

void enumerate_cmd(const Options& o, const Workspace& ws, Report& r) {
  const auto& mods = ws.catalog().modules();
  const auto& names = ws.catalog_names();
  const std::size_t n = mods.size();
  std::vector<bool> proj(n, false);
  for (std::size_t v = 0; v < ws.algebra()->vertex_count(); ++v)
    if (auto i = ws.catalog().identify(quiver::projective(ws.algebra(), v))) proj[*i] = true;
  std::vector<std::vector<std::size_t>> ext(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ext[i][j] = homkit::ext1_dim(mods[i], mods[j]);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!proj[i]) free.push_back(i);
  const std::uint64_t total = free.size() >= 63 ? ~0ULL : (1ULL << free.size());
  const std::uint64_t budget = std::min<std::uint64_t>(total, o.limit);
  std::set<std::vector<std::size_t>> seen;
  json found = json::array();
  std::vector<std::pair<std::vector<bool>, std::vector<bool>>> pairs;
  for (std::uint64_t mask = 0; mask < budget; ++mask) {
    std::vector<bool> u = proj;
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mask >> k & 1) u[free[k]] = true;
    std::vector<bool> v(n), u2(n);
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = true;
      for (std::size_t i = 0; i < n && v[j]; ++i) v[j] = !u[i] || ext[i][j] == 0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      u2[i] = true;
      for (std::size_t j = 0; j < n && u2[i]; ++j) u2[i] = !v[j] || ext[i][j] == 0;
    }
    if (u2 != u) continue;
    std::vector<Representation> ug, vg;
    std::vector<std::string> un, vn;
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i]) { ug.push_back(mods[i]); un.push_back(names[i]); }
      if (v[i]) { vg.push_back(mods[i]); vn.push_back(names[i]); }
    }
    auto cert = cotorsion::certify_pair("candidate", homkit::Subcategory("U", ug, un), homkit::Subcategory("V", vg, vn), mods);
    if (!cert.ok()) continue;
    found.push_back({{"u", un}, {"v", vn}});
    pairs.push_back({u, v});
  }
  if (budget < total) r.inconclusive("search truncated", {{"searched", budget}, {"subsets", total}});
  r.data()["pairs"] = found;
  for (const auto& p : ws.pairs()) {
    std::vector<bool> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = homkit::in_add(mods[i], ws.subcategory(p.u));
      v[i] = homkit::in_add(mods[i], ws.subcategory(p.v));
    }
    bool hit = false;
    for (const auto& q : pairs) hit = hit || (q.first == u && q.second == v);
    r.check("fixture " + p.name + " is found", hit || budget < total);
  }
}

}  // namespace

json certification_table(const Workspace& ws) {
  const auto& mods = ws.catalog().modules();
  json hom = json::array(), ext = json::array();
  for (const auto& a : mods) {
    json hr = json::array(), er = json::array();
    for (const auto& b : mods) {
      hr.push_back(homkit::hom_dim(a, b));
      er.push_back(homkit::ext1_dim(a, b));
    }
    hom.push_back(hr);
    ext.push_back(er);
  }
  return {{"catalog", ws.catalog_names()}, {"hom", hom}, {"ext1", ext}};
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check-algebra", "check-pair",   "heart",     "h-of",
                                                 "membership",    "verify-halfexact", "les",  "kernel-char",
                                                 "compare",       "twin",         "g-functor", "enumerate-pairs"};
  return names;
}

Report run(const Options& o, const Workspace& ws) {
  json args = {{"workspace", std::filesystem::path(o.workspace).filename().string()}};
  for (auto [k, v] : {std::pair{"pair", &o.pair}, std::pair{"from", &o.from}, std::pair{"to", &o.to},
                      std::pair{"object", &o.object}, std::pair{"target", &o.target},
                      std::pair{"subcategory", &o.subcategory}})
    if (!v->empty()) args[k] = *v;
  if (o.random) args["random"] = o.random;
  if (o.has_index) args["index"] = o.index;
  args["oracle_cap"] = o.oracle_cap;
  args["depth"] = o.depth;
  Report r(o.command, args, o.seed);
  Engines engines(ws);
  try {
    if (o.command == "check-algebra") check_algebra(o, ws, r);
    else if (o.command == "check-pair") check_pair(o, ws, r);
    else if (o.command == "heart") heart_cmd(o, ws, engines, r);
    else if (o.command == "h-of") h_of(o, ws, engines, r);
    else if (o.command == "membership") membership_cmd(o, ws, engines, r);
    else if (o.command == "verify-halfexact") halfexact_cmd(o, ws, engines, r);
    else if (o.command == "les") les_cmd(o, ws, engines, r);
    else if (o.command == "kernel-char") kernel_char_cmd(o, ws, engines, r);
    else if (o.command == "compare") compare_cmd(o, ws, engines, r);
    else if (o.command == "twin") twin_cmd(o, ws, engines, r);
    else if (o.command == "g-functor") g_functor_cmd(o, ws, engines, r);
    else if (o.command == "enumerate-pairs") enumerate_cmd(o, ws, r);
    else usage("unknown command " + o.command);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::Workspace) throw;
    r.check("command completed", false, e.what());
  }
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hearts of cotorsion pairs over bound quiver algebras", "hearts"};
  app.add_option("command", o.command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--workspace", o.workspace, "Workspace JSON file")->required();
  app.add_option("--pair", o.pair, "Pair name");
  app.add_option("--from", o.from, "First pair of a comparison");
  app.add_option("--to", o.to, "Second pair of a comparison");
  app.add_option("--object", o.object, "Catalog module name");
  app.add_option("--target", o.target, "Target module for a morphism");
  app.add_option("--index", o.index, "Hom basis index for a morphism");
  app.add_option("--subcategory", o.subcategory, "Subcategory name");
  app.add_option("--random", o.random, "Number of random conflations");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--oracle-cap", o.oracle_cap, "Generator count cap for the add(u*v) oracle");
  app.add_option("--depth", o.depth, "Levels of long exact sequence windows");
  app.add_option("--limit", o.limit, "Subset budget for enumerate-pairs");
  app.add_flag("--json", o.json, "Machine-readable report");
  app.add_flag("--emit-certification", o.emit_certification, "Include Hom/Ext tables");
  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }
  o.has_index = app.count("--index") > 0;
  try {
    Workspace ws = Workspace::load(o.workspace);
    Report r = run(o, ws);
    out << (o.json ? r.to_json().dump(2) + "\n" : r.to_text());
    return r.exit_code();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::Usage || e.kind() == ErrorKind::Workspace ? 2 : 1;
  }
}

}  // namespace hearts::cli
