#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

#include "bogomolov/certificate.hpp"
#include "bogomolov/errors.hpp"
#include "bogomolov/group_spec.hpp"
#include "bogomolov/kernel_lattice.hpp"
#include "bogomolov/tate.hpp"
#include "bogomolov/verify.hpp"
#include "lattice_spec.hpp"

namespace bogo::cli {

using nlohmann::json;

json read_json_arg(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw InputError("cannot read spec file " + arg);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON in ") + (arg.size() > 40 ? arg.substr(0, 40) + "..." : arg) + ": " +
                     e.what());
  }
}

namespace {

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || s[0] == '-') throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + ": expected a non-negative integer, got \"" + s + "\"");
  }
}

void need(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, const std::string& usage) {
  if (args.size() < lo || args.size() > hi) throw InputError("usage: " + usage);
}

json spec_arg(const std::string& arg) { return to_json(parse_spec(read_json_arg(arg))); }

EngineOptions engine(const RunOptions& opt) {
  EngineOptions eo;
  eo.cap = opt.engine_cap;
  eo.reduce_subgroups = opt.subgroup_reduction;
  eo.threads = opt.threads;
  return eo;
}

json group_summary(const GroupPtr& g) {
  return {{"order", g->order()}, {"exponent", g->exponent()}, {"abelian", g->is_abelian()}};
}

Outcome run_h2(const json& args, const RunOptions& opt) {
  GroupPtr g = build_group(parse_spec(args["spec"]));
  H2Data h = h2_qz(g, engine(opt));
  return {{{"group", group_summary(g)},
           {"modulus", h.modulus},
           {"h2_qz", h.h2_qz},
           {"h2_zm", h.h2_zm},
           {"hom", h.hom},
           {"order_identity", h.order_identity()}},
          0};
}

Outcome run_b0(const json& args, const RunOptions& opt) {
  GroupPtr g = build_group(parse_spec(args["spec"]));
  B0Result r = b0(g, engine(opt));
  return {{{"group", group_summary(g)},
           {"b0", r.invariants},
           {"h2_qz", r.h2.h2_qz},
           {"bicyclic_subgroups_checked", r.subgroups.size()},
           {"subgroup_reduction", opt.subgroup_reduction}},
          0};
}

Outcome run_family(const json& args, const RunOptions& opt) {
  const std::string name = args["name"];
  CentralFamily f = name == "saltman" ? CentralFamily::saltman(args["p"], args["n"])
                                      : CentralFamily::thm54(args["p"], args["n"]);
  CertificateOptions co;
  co.engine_cap = opt.engine_cap;
  co.force_route_b = opt.force_route_b;
  FamilyCertificate c = b0_lower_bound_certificate(f, co);
  return {json(c), c.certified ? 0 : 1};
}

Outcome run_verify(const json& args, const RunOptions& opt) {
  const std::string check = args["check"];
  const EngineOptions eo = engine(opt);
  std::vector<VerificationReport> reports;
  if (check == "thm1.4") {
    const json& specs = args["specs"];
    GroupPtr a, b;
    if (specs.size() == 1) {
      GroupSpec s = parse_spec(specs[0]);
      if (s.kind != GroupSpec::Kind::product) throw InputError("thm1.4 expects a product spec or two specs");
      a = build_group(*s.left);
      b = build_group(*s.right);
    } else {
      a = build_group(parse_spec(specs[0]));
      b = build_group(parse_spec(specs[1]));
    }
    reports.push_back(verify_product(a, b, eo));
  } else if (check == "thm2.7" || check == "thm2.8") {
    SemidirectParts parts = build_semidirect_parts(parse_spec(args["specs"][0]));
    if (check == "thm2.8") {
      reports.push_back(verify_frobenius(parts.normal, parts.acting, parts.action, eo));
    } else {
      for (unsigned q : {1u, 2u})
        if (opt.q == 0 || opt.q == q)
          reports.push_back(verify_coprime_semidirect(parts.normal, parts.acting, parts.action, q, eo));
    }
  } else if (check == "lemma2.1") {
    GroupPtr g = build_group(parse_spec(args["specs"][0]));
    reports.push_back(check_coprime_injectivity(g, sylow_family(g), eo));
  }
  bool ok = true;
  json list = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    list.push_back(r);
  }
  return {{{"check", check}, {"reports", list}, {"pass", ok}}, ok ? 0 : 1};
}

Outcome run_lattice(const json& args, const RunOptions& opt) {
  const std::string what = args["what"];
  if (what == "flabby-report") {
    GLattice m = build_lattice(args["lattice"]);
    TateReport rep = flabby_report(m, kDefaultTateGroupCap, opt.threads);
    json r;
    to_json(r, rep);
    const bool ok = rep.is_flabby && rep.is_coflabby;
    return {{{"lattice", m.to_json()}, {"tate_report", r}, {"verdict", ok ? "pass" : "fail"}}, ok ? 0 : 1};
  }
  SemidirectParts parts = build_semidirect_parts(parse_spec(args["spec"]));
  if (what == "saltman-kernel") {
    KernelLattice k = saltman_kernel_lattice(parts.normal, parts.acting, parts.action);
    TateReport rep = flabby_report(k.m, kDefaultTateGroupCap, opt.threads);
    json r;
    to_json(r, rep);
    const bool index_ok = k.index == parts.normal->order();
    return {{{"kernel", to_json(k)},
             {"rank_expected", parts.normal->order() * parts.acting->order()},
             {"index_matches_n", index_ok},
             {"tate_report", r},
             {"evidence", rep.coh_trivial_evidence ? "pass" : "fail"}},
            rep.coh_trivial_evidence && index_ok ? 0 : 1};
  }
  PrimeKernelLattice k = thm19_kernel_lattice(parts.normal, parts.acting, parts.action, args["p"], opt.threads);
  const bool ok = k.h_p_trivial_on_f && k.h_p_trivial_on_dual && k.phi_equivariant &&
                  (k.branch != KernelBranch::coprime_index || k.evidence_pass);
  return {to_json(k), ok ? 0 : 1};
}

}  // namespace

Request make_request(const std::string& command, const std::vector<std::string>& args, const RunOptions& opt) {
  Request req;
  req.command = command;
  req.options = {{"engine_cap", opt.engine_cap}};
  if (command == "h2" || command == "b0") {
    need(args, 1, 1, command + " <spec>");
    req.args = {{"spec", spec_arg(args[0])}};
    if (command == "b0") req.options["subgroup_reduction"] = opt.subgroup_reduction;
  } else if (command == "family-certify") {
    need(args, 3, 3, "family-certify <saltman|thm54> <p> <n>");
    json spec = {{"kind", "named"}, {"name", args[0]}, {"p", parse_uint(args[1], "p")}, {"n", parse_uint(args[2], "n")}};
    GroupSpec s = parse_spec(spec);
    req.args = {{"name", s.name}, {"p", s.p}, {"n", s.n}};
    req.options["force_route_b"] = opt.force_route_b;
  } else if (command == "verify") {
    need(args, 2, 3, "verify <thm1.4|thm2.7|thm2.8|lemma2.1> <spec> [spec]");
    const std::string& check = args[0];
    if (check != "thm1.4" && check != "thm2.7" && check != "thm2.8" && check != "lemma2.1")
      throw InputError("verify: unknown check \"" + check + "\"");
    if (args.size() == 3 && check != "thm1.4") throw InputError("verify " + check + " takes one spec");
    json specs = json::array();
    for (std::size_t i = 1; i < args.size(); ++i) specs.push_back(spec_arg(args[i]));
    req.args = {{"check", check}, {"specs", specs}};
    req.options["subgroup_reduction"] = opt.subgroup_reduction;
    if (check == "thm2.7") req.options["q"] = opt.q;
  } else if (command == "lattice") {
    need(args, 2, 3, "lattice <saltman-kernel|thm19|flabby-report> <spec> [p]");
    const std::string& what = args[0];
    if (what == "flabby-report") {
      need(args, 2, 2, "lattice flabby-report <lattice-spec>");
      req.args = {{"what", what}, {"lattice", lattice_spec_json(read_json_arg(args[1]))}};
    } else if (what == "saltman-kernel") {
      need(args, 2, 2, "lattice saltman-kernel <semidirect spec>");
      req.args = {{"what", what}, {"spec", spec_arg(args[1])}};
    } else if (what == "thm19") {
      need(args, 3, 3, "lattice thm19 <semidirect spec> <p>");
      req.args = {{"what", what}, {"spec", spec_arg(args[1])}, {"p", parse_uint(args[2], "p")}};
    } else {
      throw InputError("lattice: unknown construction \"" + what + "\"");
    }
  } else {
    throw InputError("unknown command \"" + command + "\"");
  }
  return req;
}

Outcome run(const Request& req, const RunOptions& opt) {
  if (req.command == "h2") return run_h2(req.args, opt);
  if (req.command == "b0") return run_b0(req.args, opt);
  if (req.command == "family-certify") return run_family(req.args, opt);
  if (req.command == "verify") return run_verify(req.args, opt);
  if (req.command == "lattice") return run_lattice(req.args, opt);
  throw InputError("unknown command \"" + req.command + "\"");
}

}  // namespace bogo::cli
