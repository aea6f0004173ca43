#include "bogomolov/group_spec.hpp"

#include <limits>
#include <set>

#include "bogomolov/errors.hpp"

namespace bogo {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError((where.empty() ? "/" : where) + ": " + what);
}

void check_fields(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  ok.insert("kind");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key())) fail(where, "unknown field \"" + it.key() + "\"");
  for (const char* f : allowed)
    if (!j.contains(f)) fail(where, std::string("missing field \"") + f + "\"");
}

std::uint64_t get_uint(const json& j, const std::string& key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_number_unsigned()) fail(where + "/" + key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::vector<std::uint64_t>> get_matrix(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of arrays");
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string w = where + "/" + std::to_string(r);
    if (!j[r].is_array()) fail(w, "expected an array");
    std::vector<std::uint64_t> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      const json& v = j[r][c];
      if (!v.is_number_unsigned()) fail(w + "/" + std::to_string(c), "expected a non-negative integer");
      row.push_back(v.get<std::uint64_t>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Elem> to_elems(const std::vector<std::uint64_t>& v, std::size_t bound, const std::string& where) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= bound) fail(where + "/" + std::to_string(i), "entry " + std::to_string(v[i]) + " out of range");
    out.push_back(static_cast<Elem>(v[i]));
  }
  return out;
}

void check_prime(std::uint64_t p, const std::string& where) {
  if (p < 2 || p > (1ULL << 31) || !is_prime(p)) fail(where + "/p", std::to_string(p) + " is not a prime below 2^31");
}

GroupSpec parse_at(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string()) fail(where, "missing string field \"kind\"");
  const std::string kind = j["kind"];
  GroupSpec s;
  if (kind == "perm") {
    s.kind = GroupSpec::Kind::perm;
    check_fields(j, where, {"degree", "gens"});
    s.degree = get_uint(j, "degree", where);
    if (s.degree == 0) fail(where + "/degree", "degree must be positive");
    auto m = get_matrix(j["gens"], where + "/gens");
    for (std::size_t g = 0; g < m.size(); ++g) {
      const std::string w = where + "/gens/" + std::to_string(g);
      if (m[g].size() != s.degree) fail(w, "expected " + std::to_string(s.degree) + " images");
      std::vector<bool> hit(s.degree, false);
      std::vector<std::uint32_t> perm;
      for (std::size_t i = 0; i < m[g].size(); ++i) {
        if (m[g][i] < 1 || m[g][i] > s.degree) fail(w + "/" + std::to_string(i), "image out of range 1.." + std::to_string(s.degree));
        if (hit[m[g][i] - 1]) fail(w, "not a bijection (image " + std::to_string(m[g][i]) + " repeated)");
        hit[m[g][i] - 1] = true;
        perm.push_back(static_cast<std::uint32_t>(m[g][i]));
      }
      s.gens.push_back(std::move(perm));
    }
  } else if (kind == "table") {
    s.kind = GroupSpec::Kind::table;
    check_fields(j, where, {"rows"});
    auto m = get_matrix(j["rows"], where + "/rows");
    if (m.empty()) fail(where + "/rows", "empty table");
    for (std::size_t r = 0; r < m.size(); ++r) {
      const std::string w = where + "/rows/" + std::to_string(r);
      if (m[r].size() != m.size()) fail(w, "table is not square");
      s.rows.push_back(to_elems(m[r], m.size(), w));
    }
  } else if (kind == "product") {
    s.kind = GroupSpec::Kind::product;
    check_fields(j, where, {"left", "right"});
    s.left = std::make_shared<GroupSpec>(parse_at(j["left"], where + "/left"));
    s.right = std::make_shared<GroupSpec>(parse_at(j["right"], where + "/right"));
  } else if (kind == "semidirect") {
    s.kind = GroupSpec::Kind::semidirect;
    check_fields(j, where, {"normal", "acting", "action"});
    s.left = std::make_shared<GroupSpec>(parse_at(j["normal"], where + "/normal"));
    s.right = std::make_shared<GroupSpec>(parse_at(j["acting"], where + "/acting"));
    const json& a = j["action"];
    if (!a.is_array()) fail(where + "/action", "expected an array");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string w = where + "/action/" + std::to_string(i);
      if (!a[i].is_object()) fail(w, "expected an object");
      for (auto it = a[i].begin(); it != a[i].end(); ++it)
        if (it.key() != "element" && it.key() != "automorphism") fail(w, "unknown field \"" + it.key() + "\"");
      if (!a[i].contains("element") || !a[i].contains("automorphism")) fail(w, "expected fields \"element\" and \"automorphism\"");
      GroupSpec::ActionEntry e;
      e.element = static_cast<Elem>(get_uint(a[i], "element", w));
      auto row = get_matrix(json::array({a[i]["automorphism"]}), w + "/automorphism");
      e.automorphism = to_elems(row[0], std::numeric_limits<Elem>::max(), w + "/automorphism");
      s.action.push_back(std::move(e));
    }
  } else if (kind == "schur_cover") {
    s.kind = GroupSpec::Kind::schur_cover;
    check_fields(j, where, {"p", "exponents"});
    s.p = get_uint(j, "p", where);
    check_prime(s.p, where);
    auto m = get_matrix(json::array({j["exponents"]}), where + "/exponents");
    if (m[0].empty()) fail(where + "/exponents", "at least one exponent required");
    for (std::size_t i = 0; i < m[0].size(); ++i) {
      if (m[0][i] < 1 || m[0][i] > 62) fail(where + "/exponents/" + std::to_string(i), "exponent out of range 1..62");
      if (i && m[0][i] > m[0][i - 1]) fail(where + "/exponents", "exponents must be non-increasing");
      s.exponents.push_back(static_cast<unsigned>(m[0][i]));
    }
  } else if (kind == "central_quotient") {
    s.kind = GroupSpec::Kind::central_quotient;
    check_fields(j, where, {"cover", "H"});
    s.left = std::make_shared<GroupSpec>(parse_at(j["cover"], where + "/cover"));
    if (s.left->kind != GroupSpec::Kind::schur_cover) fail(where + "/cover", "cover must be a schur_cover");
    const std::size_t t = s.left->exponents.size();
    s.h = get_matrix(j["H"], where + "/H");
    for (std::size_t i = 0; i < s.h.size(); ++i)
      if (s.h[i].size() != t * (t - 1) / 2)
        fail(where + "/H/" + std::to_string(i), "expected " + std::to_string(t * (t - 1) / 2) + " central coordinates");
  } else if (kind == "named") {
    s.kind = GroupSpec::Kind::named;
    check_fields(j, where, {"name", "p", "n"});
    if (!j["name"].is_string()) fail(where + "/name", "expected a string");
    s.name = j["name"];
    if (s.name != "saltman" && s.name != "thm54") fail(where + "/name", "unknown family \"" + s.name + "\"");
    s.p = get_uint(j, "p", where);
    check_prime(s.p, where);
    std::uint64_t n = get_uint(j, "n", where);
    if (n < 1 || n > 62) fail(where + "/n", "n out of range 1..62");
    s.n = static_cast<unsigned>(n);
  } else {
    fail(where + "/kind", "unknown kind \"" + kind + "\"");
  }
  return s;
}

}  // namespace

bool GroupSpec::is_family() const {
  return kind == Kind::schur_cover || kind == Kind::central_quotient || kind == Kind::named;
}

std::string to_string(GroupSpec::Kind k) {
  switch (k) {
    case GroupSpec::Kind::perm: return "perm";
    case GroupSpec::Kind::table: return "table";
    case GroupSpec::Kind::product: return "product";
    case GroupSpec::Kind::semidirect: return "semidirect";
    case GroupSpec::Kind::schur_cover: return "schur_cover";
    case GroupSpec::Kind::central_quotient: return "central_quotient";
    case GroupSpec::Kind::named: return "named";
  }
  return "?";
}

GroupSpec parse_spec(const json& j) { return parse_at(j, ""); }

GroupSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(j);
}

json to_json(const GroupSpec& s) {
  json j{{"kind", to_string(s.kind)}};
  switch (s.kind) {
    case GroupSpec::Kind::perm:
      j["degree"] = s.degree;
      j["gens"] = s.gens;
      break;
    case GroupSpec::Kind::table: j["rows"] = s.rows; break;
    case GroupSpec::Kind::product:
      j["left"] = to_json(*s.left);
      j["right"] = to_json(*s.right);
      break;
    case GroupSpec::Kind::semidirect: {
      j["normal"] = to_json(*s.left);
      j["acting"] = to_json(*s.right);
      json a = json::array();
      for (const auto& e : s.action) a.push_back({{"element", e.element}, {"automorphism", e.automorphism}});
      j["action"] = a;
      break;
    }
    case GroupSpec::Kind::schur_cover:
      j["p"] = s.p;
      j["exponents"] = s.exponents;
      break;
    case GroupSpec::Kind::central_quotient:
      j["cover"] = to_json(*s.left);
      j["H"] = s.h;
      break;
    case GroupSpec::Kind::named:
      j["name"] = s.name;
      j["p"] = s.p;
      j["n"] = s.n;
      break;
  }
  return j;
}

std::string canonical_text(const GroupSpec& s) { return to_json(s).dump(); }

CentralFamily build_family(const GroupSpec& s) {
  switch (s.kind) {
    case GroupSpec::Kind::schur_cover: return CentralFamily::schur_cover(s.p, s.exponents);
    case GroupSpec::Kind::central_quotient: return CentralFamily(s.left->p, s.left->exponents, s.h);
    case GroupSpec::Kind::named: return s.name == "saltman" ? CentralFamily::saltman(s.p, s.n) : CentralFamily::thm54(s.p, s.n);
    default: throw InputError("spec of kind " + to_string(s.kind) + " is not a class-2 family");
  }
}

SemidirectParts build_semidirect_parts(const GroupSpec& s, std::size_t cap) {
  if (s.kind != GroupSpec::Kind::semidirect) throw InputError("expected a semidirect spec");
  SemidirectParts parts{build_group(*s.left, cap), build_group(*s.right, cap), {}};
  std::vector<Elem> gens;
  std::vector<std::vector<Elem>> auts;
  for (std::size_t i = 0; i < s.action.size(); ++i) {
    const auto& e = s.action[i];
    const std::string w = "/action/" + std::to_string(i);
    if (e.element >= parts.acting->order()) throw InputError(w + "/element: not an element of the acting group");
    if (e.automorphism.size() != parts.normal->order())
      throw InputError(w + "/automorphism: expected " + std::to_string(parts.normal->order()) + " images");
    for (Elem x : e.automorphism)
      if (x >= parts.normal->order()) throw InputError(w + "/automorphism: image out of range");
    gens.push_back(e.element);
    auts.push_back(e.automorphism);
  }
  parts.action = extend_action(parts.normal, parts.acting, gens, auts);
  return parts;
}

GroupPtr build_group(const GroupSpec& s, std::size_t cap) {
  switch (s.kind) {
    case GroupSpec::Kind::perm: {
      std::vector<std::vector<std::uint32_t>> zero;
      for (const auto& g : s.gens) {
        std::vector<std::uint32_t> q;
        for (auto x : g) q.push_back(x - 1);
        zero.push_back(std::move(q));
      }
      if (zero.empty()) zero.push_back(std::vector<std::uint32_t>(s.degree));
      if (s.gens.empty())
        for (std::uint32_t i = 0; i < s.degree; ++i) zero[0][i] = i;
      return from_permutations(zero, cap);
    }
    case GroupSpec::Kind::table:
      if (s.rows.size() > cap) throw SizeError("table of order " + std::to_string(s.rows.size()) + " exceeds the cap");
      return FiniteGroup::from_table(s.rows, cap);
    case GroupSpec::Kind::product:
      return direct_product(build_group(*s.left, cap), build_group(*s.right, cap), cap).group;
    case GroupSpec::Kind::semidirect: {
      SemidirectParts parts = build_semidirect_parts(s, cap);
      return semidirect_product(parts.normal, parts.acting, parts.action, cap).group;
    }
    default: return build_family(s).to_table(cap).group;
  }
}

}  // namespace bogo
