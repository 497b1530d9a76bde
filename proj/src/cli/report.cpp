#include "hearts/cli/report.hpp"

#include <sstream>

namespace hearts::cli {

using nlohmann::json;

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

Report::Report(std::string command, json args, std::uint64_t seed)
    : command_(std::move(command)), args_(std::move(args)), seed_(seed) {}

void Report::check(const std::string& name, bool ok, json detail) {
  records_.push_back({name, ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void Report::inconclusive(const std::string& name, json detail) {
  records_.push_back({name, Status::Inconclusive, std::move(detail)});
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& r : records_) n += r.status == s;
  return n;
}

int Report::exit_code() const {
  if (count(Status::Fail)) return 1;
  if (count(Status::Inconclusive)) return 3;
  return 0;
}

json Report::to_json() const {
  json j;
  j["schema_version"] = "1";
  j["command"] = {{"name", command_}, {"args", args_}};
  j["seed"] = seed_;
  j["records"] = json::array();
  for (const auto& r : records_) {
    json rec = {{"name", r.name}, {"status", to_string(r.status)}};
    if (!r.detail.is_null()) rec["detail"] = r.detail;
    j["records"].push_back(std::move(rec));
  }
  j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)},
                  {"inconclusive", count(Status::Inconclusive)}};
  j["data"] = data_;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << command_ << " (seed " << seed_ << ")\n";
  for (const auto& [key, value] : data_.items()) out << "  " << key << ": " << value.dump() << "\n";
  for (const auto& r : records_) {
    std::string tag = to_string(r.status);
    for (auto& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << tag << " " << r.name;
    if (!r.detail.is_null()) out << "  " << r.detail.dump();
    out << "\n";
  }
  out << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, " << count(Status::Inconclusive)
      << " inconclusive\n";
  return out.str();
}

}  // namespace hearts::cli
