#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "bogomolov/finab.hpp"
#include "bogomolov/glattice.hpp"
#include "bogomolov/tate.hpp"

namespace bogo {

/// Dual N* = Hom(N, Z/e) of an abelian table group, e = exp(N), with the
/// G0-action (g chi)(t) = chi(g^-1 t g) induced by action[g] : t -> g t g^-1.
struct DualGroup {
  FinAbGroup invariants;                          // Z/d_1 + ... + Z/d_k
  std::vector<std::vector<std::uint64_t>> chars;  // coordinates c_i mod d_i, chars[0] = 0
  std::vector<std::vector<std::uint64_t>> values;  // values[chi][t] in Z/e
  std::vector<std::vector<std::uint32_t>> act;     // act[g][chi] = index of g chi
  std::uint64_t exponent = 1;
};

/// `subset` restricts N* to characters of the subgroup (empty = all of N).
DualGroup dual_group(const GroupPtr& n, const GroupPtr& g0, const std::vector<std::vector<Elem>>& action,
                     const std::vector<Elem>& subset = {});

struct KernelLattice {
  GLattice p;
  GLattice m;
  std::uint64_t index = 0;  // |P / M|
  FinAbGroup quotient;      // P / M, should match N*
  LatticeMatrix basis;      // rows: basis of M inside P
};

/// 0 -> M -> P -> N* -> 0, P free on w(chi).g, Phi(w(chi).g) = chi.
KernelLattice saltman_kernel_lattice(const GroupPtr& n, const GroupPtr& g0,
                                     const std::vector<std::vector<Elem>>& action);

enum class KernelBranch { coprime_index, cyclic_sylow, no_claim };
std::string to_string(KernelBranch b);

struct PrimeKernelLattice {
  std::uint64_t p = 0;
  Subgroup n_p;
  Subgroup h_p;
  GLattice f_p;                 // over G0
  GLattice m_p;                 // over G0
  GLattice m_p_quotient;        // over G0 / H_p
  std::uint64_t index = 0;      // |F_p / M_p|
  bool h_p_trivial_on_f = false;
  bool h_p_trivial_on_m = false;
  bool h_p_trivial_on_dual = false;
  bool phi_equivariant = false;
  KernelBranch branch = KernelBranch::no_claim;
  bool vacuous = false;         // H_p = G0
  TateReport evidence;          // M_p over G0 / H_p
  bool evidence_pass = false;   // coprime-index branch only
};

PrimeKernelLattice thm19_kernel_lattice(const GroupPtr& n, const GroupPtr& g0,
                                        const std::vector<std::vector<Elem>>& action, std::uint64_t p,
                                        unsigned threads = 1);

nlohmann::json to_json(const KernelLattice& k);
nlohmann::json to_json(const PrimeKernelLattice& k);

}  // namespace bogo
