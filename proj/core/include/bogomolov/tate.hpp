#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "bogomolov/finab.hpp"
#include "bogomolov/glattice.hpp"

namespace bogo {

inline constexpr std::size_t kDefaultH1Cap = 4096;
inline constexpr std::size_t kDefaultTateGroupCap = 48;

/// degree -1: ker(N_H) / I_H M;  degree 0: M^H / N_H M.
FinAbGroup tate(int degree, const Subgroup& h, const GLattice& m);

/// Crossed homomorphisms H -> M modulo principal ones; |H| * rank capped.
FinAbGroup h1_lattice(const Subgroup& h, const GLattice& m, std::size_t cap = kDefaultH1Cap);

struct TateRow {
  Subgroup subgroup;
  FinAbGroup hm1, h0, h1;
};

struct TateReport {
  std::size_t rank = 0;
  std::size_t group_order = 0;
  std::vector<TateRow> rows;  // one per conjugacy class of subgroups
  bool is_flabby = true;
  bool is_coflabby = true;
  bool coh_trivial_evidence = true;
};

TateReport flabby_report(const GLattice& m, std::size_t group_cap = kDefaultTateGroupCap, unsigned threads = 1);

void to_json(nlohmann::json& j, const TateReport& r);

}  // namespace bogo
