#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gorelab {

/// One line of a report: a record name followed by key=value fields.
struct Record {
  std::string name;
  std::vector<std::pair<std::string, std::string>> fields;

  explicit Record(std::string n) : name(std::move(n)) {}
  Record& add(const std::string& key, const std::string& value);
  Record& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
  Record& add(const std::string& key, bool value) { return add(key, std::string(value ? "1" : "0")); }
  template <class T>
  Record& add(const std::string& key, T value) {
    return add(key, std::to_string(value));
  }
};

/// Machine format: `name k=v k=v`, values with spaces or quotes double-quoted.
std::string render_machine(const std::vector<Record>& records);
std::string render_text(const std::vector<Record>& records);

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNo = 2;
inline constexpr int kExitInconclusive = 3;

/// Bundled files compiled into the binary.
const std::string& bundled_paper_workspace();
const std::string& bundled_paper_golden();

/// Records of the worked example, in machine-report order.
std::vector<Record> paper_example_records(std::uint64_t seed = 0);

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gorelab
