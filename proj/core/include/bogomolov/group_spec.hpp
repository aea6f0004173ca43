#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bogomolov/central_family.hpp"
#include "bogomolov/group.hpp"

namespace bogo {

/// Tagged description of a group, parsed from JSON.
///
///   perm:             degree, gens (1-based images)
///   table:            rows (0-based Cayley table)
///   product:          left, right
///   semidirect:       normal, acting, action = [{element, automorphism}]
///                     (element indexes the built acting group; the listed
///                     elements must generate it)
///   schur_cover:      p, exponents
///   central_quotient: cover (a schur_cover), H (central vectors over pairs i<j)
///   named:            name in {saltman, thm54}, p, n
struct GroupSpec {
  enum class Kind { perm, table, product, semidirect, schur_cover, central_quotient, named };

  struct ActionEntry {
    Elem element = 0;
    std::vector<Elem> automorphism;
  };

  Kind kind = Kind::table;
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> gens;
  std::vector<std::vector<Elem>> rows;
  std::shared_ptr<const GroupSpec> left, right;  // product: left/right, semidirect: normal/acting
  std::vector<ActionEntry> action;
  std::uint64_t p = 0;
  std::vector<unsigned> exponents;
  std::vector<std::vector<std::uint64_t>> h;
  std::string name;
  unsigned n = 0;

  bool is_family() const;
};

std::string to_string(GroupSpec::Kind k);

/// Throws InputError with a JSON-pointer location on any defect.
GroupSpec parse_spec(const std::string& text);
GroupSpec parse_spec(const nlohmann::json& j);
inline GroupSpec parse_spec(const char* text) { return parse_spec(std::string(text)); }

nlohmann::json to_json(const GroupSpec& s);
/// Canonical serialization: sorted keys, no whitespace.
std::string canonical_text(const GroupSpec& s);

/// Class-2 family for schur_cover, central_quotient and named specs.
CentralFamily build_family(const GroupSpec& s);

struct SemidirectParts {
  GroupPtr normal;
  GroupPtr acting;
  std::vector<std::vector<Elem>> action;  // automorphism of N per element of G0
};
/// Requires a semidirect spec; the action is extended to every element.
SemidirectParts build_semidirect_parts(const GroupSpec& s, std::size_t cap = kDefaultOrderCap);

/// Materialized Cayley table (families included, within `cap`).
GroupPtr build_group(const GroupSpec& s, std::size_t cap = kDefaultOrderCap);

}  // namespace bogo
