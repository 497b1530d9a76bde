#include "hearts/cli/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "hearts/error.hpp"
#include "hearts/quiver/standard.hpp"

namespace hearts::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Workspace, what); }

// Workspace error tied to a named entry, so load() can report its line.
class EntryError : public Error {
 public:
  EntryError(const std::string& section, std::size_t index, const std::string& name, const std::string& what)
      : Error(ErrorKind::Workspace, section + "[" + std::to_string(index) + "] '" + name + "': " + what), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Runs body for entry i of a section, rewrapping failures with the entry.
template <class Body>
void within(const char* section, std::size_t i, const json& entry, Body body) {
  std::string name = entry.is_object() && entry.contains("name") && entry["name"].is_string()
                         ? entry["name"].get<std::string>() : std::string();
  try {
    body();
  } catch (const EntryError&) {
    throw;
  } catch (const std::exception& e) {
    std::string what = e.what();
    const std::string prefix = std::string(to_string(ErrorKind::Workspace)) + ": ";
    if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
    throw EntryError(section, i, name, what);
  }
}

std::size_t line_of(const std::string& text, const std::string& name) {
  if (name.empty()) return 0;
  std::size_t at = std::string::npos;
  for (const char* sep : {"\"name\": \"", "\"name\":\""}) {
    at = text.find(sep + name + "\"");
    if (at != std::string::npos) break;
  }
  if (at == std::string::npos) return 0;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(at), '\n'));
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t vertex_of(const json& j, std::size_t n) {
  if (!j.is_number_integer()) fail("vertex must be an integer");
  long long v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > n) fail("vertex out of range");
  return static_cast<std::size_t>(v - 1);
}

quiver::Representation build_module(const quiver::AlgebraPtr& alg, const json& j) {
  const auto& q = alg->quiver();
  if (j.contains("standard")) {
    std::string kind = j.at("standard").get<std::string>();
    std::size_t v = vertex_of(need(j, "vertex"), q.vertex_count);
    if (kind == "projective") return quiver::projective(alg, v);
    if (kind == "injective") return quiver::injective(alg, v);
    if (kind == "simple") return quiver::simple(alg, v);
    fail("unknown standard module kind " + kind);
  }
  const json& dj = need(j, "dims");
  if (!dj.is_array() || dj.size() != q.vertex_count) fail("dims must list every vertex");
  std::vector<std::size_t> dims;
  for (const auto& d : dj) {
    if (!d.is_number_integer() || d.get<long long>() < 0) fail("dims must be non-negative integers");
    dims.push_back(d.get<std::size_t>());
  }
  std::vector<la::Mat> maps;
  for (const auto& a : q.arrows) maps.emplace_back(alg->field(), dims[a.target], dims[a.source]);
  if (j.contains("arrows")) {
    for (const auto& [name, mat] : j.at("arrows").items()) {
      auto idx = q.arrow_index(name);
      if (!idx) fail("unknown arrow " + name);
      std::vector<std::vector<long long>> rows = mat.get<std::vector<std::vector<long long>>>();
      la::Mat m = la::Mat::from_rows(alg->field(), rows);
      if (rows.empty()) m = la::Mat(alg->field(), 0, dims[q.arrows[*idx].source]);
      if (m.rows() != maps[*idx].rows() || m.cols() != maps[*idx].cols()) fail("arrow " + name + " has the wrong shape");
      maps[*idx] = m;
    }
  }
  return quiver::Representation(alg, dims, std::move(maps));
}

}  // namespace

Workspace Workspace::from_json(const json& j) {
  Workspace w;
  try {
    w.prime_ = j.contains("prime") ? j.at("prime").get<la::Scalar>() : la::Field::kDefaultPrime;
    la::Field field(w.prime_);
    w.quiver_json_ = need(j, "quiver");
    quiver::Quiver q;
    q.vertex_count = need(w.quiver_json_, "vertices").get<std::size_t>();
    for (const auto& a : need(w.quiver_json_, "arrows"))
      q.arrows.push_back({need(a, "name").get<std::string>(), vertex_of(need(a, "from"), q.vertex_count),
                          vertex_of(need(a, "to"), q.vertex_count)});
    w.relations_json_ = j.contains("relations") ? j.at("relations") : json::array();
    std::vector<quiver::Relation> rels;
    for (const auto& r : w.relations_json_) {
      quiver::Relation rel;
      for (const auto& t : r) {
        if (!t.is_array() || t.size() != 2) fail("relation terms are [coefficient, [arrows]]");
        rel.push_back({t[0].get<long long>(), t[1].get<std::vector<std::string>>()});
      }
      rels.push_back(std::move(rel));
    }
    w.algebra_ = quiver::Algebra::create(field, q, rels);

    const json& modules = need(j, "modules");
    for (std::size_t i = 0; i < modules.size(); ++i) {
      const json& m = modules[i];
      within("modules", i, m, [&] {
        std::string name = need(m, "name").get<std::string>();
        if (w.has_module(name)) fail("duplicate module " + name);
        quiver::Representation rep = quiver::validate_module(build_module(w.algebra_, m));
        w.modules_.push_back({name, rep, m});
      });
    }
    if (j.contains("catalog")) w.catalog_names_ = j.at("catalog").get<std::vector<std::string>>();
    for (const auto& n : w.catalog_names_)
      if (!w.has_module(n)) fail("catalog names unknown module " + n);

    if (j.contains("subcategories"))
      for (std::size_t i = 0; i < j.at("subcategories").size(); ++i) {
        const json& s = j.at("subcategories")[i];
        within("subcategories", i, s, [&] {
          SubcategoryEntry e{need(s, "name").get<std::string>(), need(s, "generators").get<std::vector<std::string>>()};
          std::vector<quiver::Representation> gens;
          for (const auto& g : e.generators) gens.push_back(w.module(g));
          if (w.built_.count(e.name)) fail("duplicate subcategory " + e.name);
          w.built_.emplace(e.name, homkit::Subcategory(e.name, gens, e.generators));
          w.subcats_.push_back(std::move(e));
        });
      }
    if (j.contains("pairs"))
      for (std::size_t i = 0; i < j.at("pairs").size(); ++i) {
        const json& p = j.at("pairs")[i];
        within("pairs", i, p, [&] {
          PairEntry e{need(p, "name").get<std::string>(), need(p, "u").get<std::string>(), need(p, "v").get<std::string>()};
          if (!w.built_.count(e.u) || !w.built_.count(e.v)) fail("pair " + e.name + " names an unknown subcategory");
          for (const auto& q : w.pairs_)
            if (q.name == e.name) fail("duplicate pair " + e.name);
          w.pairs_.push_back(std::move(e));
        });
      }
    if (j.contains("twins"))
      for (std::size_t i = 0; i < j.at("twins").size(); ++i) {
        const json& t = j.at("twins")[i];
        within("twins", i, t, [&] {
          TwinEntry e{need(t, "name").get<std::string>(), need(t, "first").get<std::string>(),
                      need(t, "second").get<std::string>()};
          w.pair(e.first);
          w.pair(e.second);
          w.twins_.push_back(std::move(e));
        });
      }
    if (j.contains("expected")) w.expected_ = j.at("expected");
    if (!w.catalog_names_.empty()) {
      std::vector<quiver::Representation> mods;
      for (const auto& n : w.catalog_names_) mods.push_back(w.module(n));
      w.catalog_ = std::make_shared<const homkit::Catalog>(w.catalog_names_, mods);
    }
  } catch (const json::exception& e) {
    fail(e.what());
  }
  return w;
}

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }
  try {
    return from_json(j);
  } catch (const EntryError& e) {
    std::size_t line = line_of(text, e.name());
    std::string what = e.what();
    const std::string prefix = std::string(to_string(ErrorKind::Workspace)) + ": ";
    if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
    fail(path + (line ? ":" + std::to_string(line) : std::string()) + ": " + what);
  }
}

json Workspace::to_json() const {
  json j;
  j["prime"] = prime_;
  j["quiver"] = quiver_json_;
  j["relations"] = relations_json_;
  j["modules"] = json::array();
  for (const auto& m : modules_) j["modules"].push_back(m.source);
  if (!catalog_names_.empty()) j["catalog"] = catalog_names_;
  j["subcategories"] = json::array();
  for (const auto& s : subcats_) j["subcategories"].push_back({{"name", s.name}, {"generators", s.generators}});
  j["pairs"] = json::array();
  for (const auto& p : pairs_) j["pairs"].push_back({{"name", p.name}, {"u", p.u}, {"v", p.v}});
  if (!twins_.empty()) {
    j["twins"] = json::array();
    for (const auto& t : twins_) j["twins"].push_back({{"name", t.name}, {"first", t.first}, {"second", t.second}});
  }
  if (!expected_.is_null()) j["expected"] = expected_;
  return j;
}

bool Workspace::has_module(const std::string& name) const {
  for (const auto& m : modules_)
    if (m.name == name) return true;
  return false;
}

const quiver::Representation& Workspace::module(const std::string& name) const {
  for (const auto& m : modules_)
    if (m.name == name) return m.module;
  fail("unknown module " + name);
}

const homkit::Subcategory& Workspace::subcategory(const std::string& name) const {
  auto it = built_.find(name);
  if (it == built_.end()) fail("unknown subcategory " + name);
  return it->second;
}

const PairEntry& Workspace::pair(const std::string& name) const {
  for (const auto& p : pairs_)
    if (p.name == name) return p;
  fail("unknown pair " + name);
}

const homkit::Catalog& Workspace::catalog() const {
  if (!catalog_) fail("workspace has no catalog");
  return *catalog_;
}

}  // namespace hearts::cli
