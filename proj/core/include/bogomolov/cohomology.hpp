#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bogomolov/cochain.hpp"
#include "bogomolov/finab.hpp"
#include "bogomolov/group.hpp"
#include "bogomolov/qz_model.hpp"

namespace bogo {

inline constexpr std::size_t kDefaultEngineCap = 64;

struct EngineOptions {
  std::size_t cap = kDefaultEngineCap;
  bool reduce_subgroups = true;
  unsigned threads = 1;
  std::uint64_t modulus = 0;  // 0 means |G|
};

/// H^2(G, Z/m) and the Q/Z model Z^2 / (B^2 + Bock), all in edge
/// coordinates of `model`.
struct H2Data {
  GroupPtr group;
  std::uint64_t modulus = 0;
  std::shared_ptr<const EdgeModel> model;
  std::vector<linalg::ModRow> cocycles;      // Howell basis of Z^2
  std::vector<linalg::ModRow> coboundaries;  // generators of B^2
  std::vector<linalg::ModRow> bocksteins;    // generators of Bock
  std::vector<linalg::ModRow> trivial;       // Howell basis of B^2 + Bock
  FinAbGroup h2_zm;
  FinAbGroup hom;
  FinAbGroup h2_qz;

  /// |H^2(G, Z/m)| == |Hom(G, Z/m)| * |H^2(G, Q/Z)|
  bool order_identity() const;
  /// Whether the cocycle with edge vector z is zero in H^2(G, Q/Z).
  bool is_trivial_class(const linalg::ModRow& z) const;
};

FinAbGroup h1(const GroupPtr& g, std::uint64_t m);

H2Data h2_qz(const GroupPtr& g, const EngineOptions& opt = {});

/// Cocycles of G whose restriction to every listed subgroup is trivial in
/// H^2(A, Q/Z); Howell basis in the edge coordinates of h.model.
std::vector<linalg::ModRow> restriction_kernel(const H2Data& h, const std::vector<Subgroup>& subgroups,
                                               unsigned threads = 1);

/// Invariants of restriction_kernel(...) / (B^2 + Bock).
FinAbGroup restriction_kernel_invariants(const H2Data& h, const std::vector<Subgroup>& subgroups,
                                         unsigned threads = 1);

struct B0Result {
  GroupPtr group;
  FinAbGroup invariants;
  H2Data h2;
  std::vector<linalg::ModRow> kernel;  // Howell basis of the intersection inside Z^2
  std::vector<Subgroup> subgroups;     // bicyclic subgroups used
};

B0Result b0(const GroupPtr& g, const EngineOptions& opt = {});

/// Witness x with delta x = c, if c is a coboundary. Throws InputError when
/// c is not a cocycle.
std::optional<Cochain> is_coboundary(const Cochain& c);

/// Whether the cocycle c (values in Z/m, m a multiple of |group|) is zero in
/// H^2(group, Q/Z).
bool is_qz_trivial(const Cochain& c);

enum class FixedTarget { h2, b0 };

/// Invariants of the classes in H^2(N, Q/Z) (or B_0(N)) fixed under
/// conjugation by every element of `acting`; N must be normal in its
/// parent group. Cohomology of N uses modulus opt.modulus, or |parent|.
FinAbGroup fixed_subgroup(const Subgroup& n, const std::vector<Elem>& acting, FixedTarget target,
                          const EngineOptions& opt = {});

/// Hom(N, Z/m)^{acting} for N normal in its parent group.
FinAbGroup fixed_hom(const Subgroup& n, const std::vector<Elem>& acting, std::uint64_t m);

}  // namespace bogo
