#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bogomolov/central_family.hpp"
#include "bogomolov/cohomology.hpp"
#include "json.hpp"

namespace bogo {

/// f_ij(I, J) = -I_j J_i mod p^{n_j}.
std::uint64_t fij_eval(const CentralFamily& f, std::size_t i, std::size_t j, const CentralFamily::Abelian& x,
                       const CentralFamily::Abelian& y);

/// f_ij(c1 I + c2 J, d1 I + d2 J).
std::uint64_t fij_eval_pair(const CentralFamily& f, std::size_t i, std::size_t j, const CentralFamily::Abelian& I,
                            const CentralFamily::Abelian& J, std::uint64_t c1, std::uint64_t c2, std::uint64_t d1,
                            std::uint64_t d2);

/// Transgression chi -> [chi o eps] for the central extension
/// 1 -> Zbar -> G -> Gamma -> 1, in f_ij coordinates. Coordinates are
/// embedded in (Z/p^{n1})^K like central vectors.
struct TransgressionImage {
  std::vector<linalg::ModRow> image_basis;  // Howell basis of im psi'
  FinAbGroup h2_quotient;                   // H^2(Gamma, Q/Z), closed form
  FinAbGroup h1_fixed;                      // H^1(N, Q/Z)^G = dual of Zbar
  FinAbGroup psi_prime;                     // im psi'
  FinAbGroup psi;                           // H^2(Gamma) / im psi' = im psi
};

TransgressionImage transgression_image(const CentralFamily& f);

/// Coboundary check on B = <I, J> in Gamma for every f_ij. The restriction
/// of inf(f_ij) to any bicyclic A of G with image B is inflated from B, so
/// a pass on B covers every such A.
struct ClassCheck {
  CentralFamily::Abelian I, J;
  std::uint64_t image_order = 0;
  bool pass = true;
  std::vector<std::pair<std::size_t, std::size_t>> failing;
};

ClassCheck coboundary_check_54(const CentralFamily& f, const CentralFamily::Abelian& I,
                               const CentralFamily::Abelian& J);

struct RouteB {
  bool deduplicated = true;
  std::uint64_t pairs_enumerated = 0;
  std::uint64_t commuting_pairs = 0;
  std::uint64_t distinct_images = 0;
  std::uint64_t checked_classes = 0;
  std::vector<ClassCheck> classes;
  bool pass = true;
};

/// Enumerates commuting coordinate pairs, groups them by image <I, J> in
/// Gamma, keeps the maximal images (all distinct images when `dedupe` is
/// false) and runs coboundary_check_54 on each.
RouteB route_b(const CentralFamily& f, bool dedupe = true, std::uint64_t pair_cap = kDefaultPairCap);

struct CertificateOptions {
  std::size_t engine_cap = kDefaultEngineCap;
  std::uint64_t pair_cap = kDefaultPairCap;
  bool force_route_b = false;
};

struct FamilyCertificate {
  std::string family;
  std::uint64_t p = 0;
  unsigned n = 0;
  std::vector<unsigned> exponents;
  unsigned log_order = 0;
  std::string order;  // decimal |G|
  FinAbGroup central;
  FinAbGroup quotient;
  bool center_is_central_part = false;
  TransgressionImage transgression;
  std::optional<FinAbGroup> h2_quotient_engine;
  bool transgression_injective = false;
  WedgeSearch wedge;
  std::uint64_t expected_pairs = 0;
  bool route_a_pass = false;
  std::optional<RouteB> route_b;
  std::string certified_by;
  bool certified = false;
};

FamilyCertificate b0_lower_bound_certificate(const CentralFamily& f, const CertificateOptions& opt = {});

void to_json(nlohmann::json& j, const FamilyCertificate& c);
void to_json(nlohmann::json& j, const ClassCheck& c);
void to_json(nlohmann::json& j, const RouteB& r);
void to_json(nlohmann::json& j, const WedgeSearch& w);

}  // namespace bogo
