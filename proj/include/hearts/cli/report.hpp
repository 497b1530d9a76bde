#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hearts::cli {

enum class Status { Pass, Fail, Inconclusive };

const char* to_string(Status s);

struct Record {
  std::string name;
  Status status = Status::Pass;
  nlohmann::json detail;  // witnesses and values, may be null
};

// Outcome of one command: check records plus command-specific data.
class Report {
 public:
  Report(std::string command, nlohmann::json args, std::uint64_t seed);

  void check(const std::string& name, bool ok, nlohmann::json detail = nullptr);
  void inconclusive(const std::string& name, nlohmann::json detail = nullptr);
  nlohmann::json& data() { return data_; }

  const std::vector<Record>& records() const { return records_; }
  std::size_t count(Status s) const;
  // 0 all pass, 1 some failure, 3 inconclusive without failure.
  int exit_code() const;

  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  nlohmann::json args_;
  std::uint64_t seed_;
  std::vector<Record> records_;
  nlohmann::json data_ = nlohmann::json::object();
};

}  // namespace hearts::cli
