#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "reedylab/spans.hpp"

namespace rlab::cli {

using nlohmann::json;

// Exit codes.
enum Exit : int { kPass = 0, kFail = 1, kInputError = 2, kUnsupported = 3 };

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
  bool operator==(const Check&) const = default;
};

struct Report {
  int format = 1;
  std::string command, instance, field;
  std::uint64_t seed = 0;
  std::string status;  // PASS, FAIL, UNSUPPORTED
  std::vector<Check> checks;
  json data = json::object();
  double wall_clock_ms = 0;
  bool pass() const { return status == "PASS"; }
  bool operator==(const Report&) const = default;
};

json to_json(const Report& r);
Report report_from_json(const json& j);
std::string to_text(const Report& r);

struct Options {
  std::string command;
  std::string zoo, spec;
  std::optional<std::string> field;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "text";
  std::string criterion = "d";
  bool dual = false;
  std::string pairs = "proj_all";
  std::string triples = "stable";
  std::size_t battery = 8;
};

struct Instance {
  std::string name;
  ReedyPtr rc;
  std::optional<EICat> base;  // EI input for span instances
  std::vector<std::optional<std::vector<Vec>>> idempotents;
};

// A CategorySpecFile document; `field` overrides the document's field.
Instance instance_from_json(const json& doc, const std::optional<std::string>& field);
Instance load_instance(const Options& o);

// Runs one command; throws InputError or Unsupported.
Report run_command(const Options& o);

// Full command line without the program name; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlab::cli
