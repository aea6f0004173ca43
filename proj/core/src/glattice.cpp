#include "bogomolov/glattice.hpp"

#include <deque>
#include <optional>

#include "bogomolov/errors.hpp"
#include "bogomolov/smith.hpp"

namespace bogo {

LatticeMatrix identity_matrix(std::size_t r) {
  LatticeMatrix m(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

LatticeMatrix mat_mul(const LatticeMatrix& a, const LatticeMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  LatticeMatrix c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const std::int64_t x = a[i][l];
      if (x == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        std::int64_t prod, sum;
        if (__builtin_mul_overflow(x, b[l][j], &prod) || __builtin_add_overflow(c[i][j], prod, &sum))
          throw SizeError("lattice matrix entries overflow int64");
        c[i][j] = sum;
      }
    }
  return c;
}

namespace {

void check_shape(const LatticeMatrix& m, std::size_t r, const std::string& what) {
  if (m.size() != r) throw InputError(what + ": expected " + std::to_string(r) + " rows");
  for (const auto& row : m)
    if (row.size() != r) throw InputError(what + ": expected " + std::to_string(r) + " columns");
}

}  // namespace

GLattice::GLattice(GroupPtr g, std::size_t rank, std::vector<LatticeMatrix> all)
    : group_(std::move(g)), rank_(rank), action_(std::move(all)) {
  const std::size_t n = group_->order();
  if (action_.size() != n) throw InputError("lattice: one matrix per group element required");
  for (std::size_t x = 0; x < n; ++x) check_shape(action_[x], rank_, "lattice matrix of element " + std::to_string(x));
  if (action_[0] != identity_matrix(rank_)) throw InputError("lattice: identity must act trivially");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (mat_mul(action_[a], action_[b]) != action_[group_->mul(a, b)])
        throw InputError("lattice: action is not a homomorphism at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")");
  for (Elem a = 0; a < n; ++a) {
    auto d = linalg::determinant(linalg::to_big(action_[a]));
    if (d != 1 && d != -1) throw InputError("lattice: matrix of element " + std::to_string(a) + " is not unimodular");
  }
}

GLattice GLattice::from_element_map(GroupPtr g, std::size_t rank, std::vector<LatticeMatrix> all) {
  return GLattice(std::move(g), rank, std::move(all));
}

GLattice GLattice::from_generators(GroupPtr g, std::size_t rank, const std::vector<Elem>& gens,
                                   const std::vector<LatticeMatrix>& mats) {
  if (gens.size() != mats.size()) throw InputError("lattice: one matrix per generator required");
  const std::size_t n = g->order();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] >= n) throw InputError("lattice: generator " + std::to_string(gens[i]) + " out of range");
    check_shape(mats[i], rank, "lattice generator matrix " + std::to_string(i));
  }
  std::vector<std::optional<LatticeMatrix>> all(n);
  all[0] = identity_matrix(rank);
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g->mul(gens[i], x);
      LatticeMatrix my = mat_mul(mats[i], *all[x]);
      if (!all[y]) {
        all[y] = std::move(my);
        queue.push_back(y);
      } else if (*all[y] != my) {
        throw InputError("lattice: generator matrices violate a relation of the group");
      }
    }
  }
  std::vector<LatticeMatrix> out;
  for (auto& m : all) {
    if (!m) throw InputError("lattice: generators do not generate the acting group");
    out.push_back(std::move(*m));
  }
  return GLattice(std::move(g), rank, std::move(out));
}

nlohmann::json GLattice::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (Elem s : group_->generators()) gens.push_back({{"element", s}, {"matrix", action_[s]}});
  return {{"rank", rank_}, {"group_order", group_->order()}, {"generators", gens}};
}

GLattice perm_lattice(const GroupPtr& g0, const Subgroup& h) {
  if (h.parent != g0) throw InputError("perm_lattice: subgroup of a different group");
  const std::size_t n = g0->order();
  std::vector<Elem> reps;
  std::vector<std::size_t> label(n, SIZE_MAX);
  for (Elem x = 0; x < n; ++x) {
    if (label[x] != SIZE_MAX) continue;
    for (Elem y : h.elements) label[g0->mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  const std::size_t r = reps.size();
  std::vector<LatticeMatrix> all;
  for (Elem g = 0; g < n; ++g) {
    LatticeMatrix m(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t c = 0; c < r; ++c) m[label[g0->mul(g, reps[c])]][c] = 1;
    all.push_back(std::move(m));
  }
  return GLattice::from_element_map(g0, r, std::move(all));
}

GLattice regular_lattice(const GroupPtr& g0) { return perm_lattice(g0, subgroup_generated(g0, {})); }

GLattice trivial_lattice(const GroupPtr& g0, std::size_t rank) {
  return GLattice::from_element_map(g0, rank, std::vector<LatticeMatrix>(g0->order(), identity_matrix(rank)));
}

GLattice character_lattice(const GroupPtr& g0, const std::vector<int>& sign) {
  if (sign.size() != g0->order()) throw InputError("character_lattice: one sign per element required");
  std::vector<LatticeMatrix> all;
  for (int s : sign) {
    if (s != 1 && s != -1) throw InputError("character_lattice: signs must be +1 or -1");
    all.push_back({{s}});
  }
  return GLattice::from_element_map(g0, 1, std::move(all));
}

}  // namespace bogo
