#pragma once

// Command dispatch for the dlcalc tool.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dl {

struct Query {
  std::string command;
  std::string input;  // expression text, or suite name for `verify`
  std::optional<std::string> model;
  std::optional<std::string> sub;
  std::optional<std::string> ops;
  std::optional<std::string> flavor;
  std::vector<std::string> gens;  // name:degree[:weight]
  std::optional<int> cap;
  std::optional<int> maxdeg;
  std::optional<int> n;
  std::optional<int> times;
  std::optional<int> m;
  std::optional<int> maxidx;
  bool json = false;
};

enum class Status { Ok = 0, Violation = 1, Error = 2 };

struct Report {
  Status status = Status::Ok;
  std::string text;  // printed form, newline-terminated
  std::string json;  // serialized JSON document
};

Report run(const Query& q);

/// Parses argv-style arguments (without the program name), runs the query and
/// writes the report. Returns the exit status.
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dl
