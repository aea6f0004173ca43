#pragma once

#include <string>
#include <vector>

#include "bogomolov/cohomology.hpp"
#include "json.hpp"

namespace bogo::cli {

struct RunOptions {
  std::size_t engine_cap = kDefaultEngineCap;
  bool subgroup_reduction = true;
  unsigned threads = 1;
  bool force_route_b = false;
  unsigned q = 0;  // thm2.7 degree; 0 runs both
};

/// Canonical request: the command, its parsed arguments and every option
/// that can change the result. Thread count is excluded.
struct Request {
  std::string command;
  nlohmann::json args;
  nlohmann::json options;
};

struct Outcome {
  nlohmann::json result;
  int exit_code = 0;
};

/// Reads a JSON argument: inline text when it starts with '{', stdin for
/// "-", otherwise a file path.
nlohmann::json read_json_arg(const std::string& arg);

Request make_request(const std::string& command, const std::vector<std::string>& args, const RunOptions& opt);
Outcome run(const Request& req, const RunOptions& opt);

}  // namespace bogo::cli
