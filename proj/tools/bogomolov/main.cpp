#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "bogomolov/errors.hpp"
#include "cache.hpp"
#include "commands.hpp"
#include "schemas.hpp"

namespace {

using nlohmann::json;
using namespace bogo;
using namespace bogo::cli;

const std::string kEngineVersion = std::string("bogomolov ") + BOGOMOLOV_VERSION;

int emit(json report, int code) {
  std::cout << report.dump(2) << '\n';
  return code;
}

int error_report(const std::string& command, const std::string& kind, const std::string& message, int code) {
  std::cerr << "error: " << message << '\n';
  return emit({{"engine_version", kEngineVersion},
               {"command", command},
               {"status", "error"},
               {"error", {{"kind", kind}, {"message", message}}},
               {"exit_code", code}},
              code);
}

std::string status_for(int code) { return code == 0 ? "ok" : "fail"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations of Bogomolov multipliers and related invariants."};
  app.set_version_flag("--version", kEngineVersion);

  RunOptions opt;
  std::string cache_dir;
  std::string schema;
  bool no_reduction = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--cache-dir", cache_dir, "Result cache directory (default: $BOGO_CACHE_DIR; unset disables caching)");
  app.add_option("--engine-cap", opt.engine_cap, "Largest group order for the cochain engine")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--no-subgroup-reduction", no_reduction, "Check every bicyclic subgroup, not only maximal classes");
  app.add_option("--json-schema", schema, "Print a JSON schema and exit")
      ->check(CLI::IsMember(schema_names()));
  app.fallthrough();

  std::string command;
  std::vector<std::string> args;
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("args", args, "Arguments");
    sub->callback([&command, name] { command = name; });
    return sub;
  };
  add("h2", "H^2(G, Q/Z) of a group spec");
  add("b0", "Bogomolov multiplier of a group spec");
  add("family-certify", "Lower-bound certificate for a class-2 family: <saltman|thm54> <p> <n>")
      ->add_flag("--force-route-b", opt.force_route_b, "Also run the coboundary route");
  add("verify", "Structural verifiers: <thm1.4|thm2.7|thm2.8|lemma2.1> <spec>...")
      ->add_option("--q", opt.q, "Degree for thm2.7 (1 or 2; default both)")
      ->check(CLI::IsMember({1u, 2u}));
  add("lattice", "Lattice constructions: <saltman-kernel|thm19|flabby-report> ...");
  auto* cache_cmd = app.add_subcommand("cache", "Cache maintenance: <stats|clear>");
  std::string cache_action;
  cache_cmd->add_option("action", cache_action)->required()->check(CLI::IsMember({"stats", "clear"}));
  cache_cmd->callback([&] { command = "cache"; });
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }
  if (!schema.empty()) {
    std::cout << schema_text(schema);
    return 0;
  }
  if (command.empty()) {
    std::cerr << app.help();
    return 2;
  }
  opt.subgroup_reduction = !no_reduction;
  opt.threads = threads;
  if (cache_dir.empty())
    if (const char* env = std::getenv("BOGO_CACHE_DIR")) cache_dir = env;

  if (command == "cache") {
    if (cache_dir.empty()) return error_report(command, "input-error", "no cache directory configured", 2);
    Cache cache(cache_dir);
    json r = {{"engine_version", kEngineVersion}, {"command", "cache " + cache_action}, {"dir", cache_dir}};
    if (cache_action == "stats") {
      auto s = cache.stats();
      r["entries"] = s.entries;
      r["bytes"] = s.bytes;
    } else {
      r["removed"] = cache.clear();
    }
    return emit(r, 0);
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Request req = make_request(command, args, opt);
    json request = {{"command", req.command}, {"args", req.args}, {"options", req.options}};
    const std::string key = sha256_hex(kEngineVersion + "\n" + request.dump());
    std::optional<Cache> cache;
    if (!cache_dir.empty()) cache.emplace(cache_dir);

    json report;
    std::string cache_state = cache ? "miss" : "disabled";
    if (cache) {
      if (auto hit = cache->get(key)) {
        report = std::move(*hit);
        cache_state = "hit";
        std::cerr << "cache hit " << key << '\n';
      }
    }
    if (report.is_null()) {
      Outcome out = run(req, opt);
      report = {{"engine_version", kEngineVersion},
                {"command", req.command},
                {"request", request},
                {"result", out.result},
                {"status", status_for(out.exit_code)},
                {"exit_code", out.exit_code}};
      if (cache) cache->put(key, kEngineVersion, request, report);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const int code = report.value("exit_code", 0);
    report["volatile"] = {{"elapsed_ms", ms}, {"cache", cache_state}, {"cache_key", key}, {"threads", opt.threads}};
    return emit(report, code);
  } catch (const InputError& e) {
    return error_report(command, "input-error", e.what(), 2);
  } catch (const SizeError& e) {
    return error_report(command, "size-error", e.what(), 3);
  } catch (const nlohmann::json::exception& e) {
    return error_report(command, "input-error", e.what(), 2);
  } catch (const std::exception& e) {
    return error_report(command, "internal-error", e.what(), 4);
  }
}
