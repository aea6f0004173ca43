#pragma once

#include <string>
#include <vector>

#include "bogomolov/cohomology.hpp"
#include "json.hpp"

namespace bogo {

enum class Verdict { pass, vacuous_pass, fail };

std::string to_string(Verdict v);

/// Structured outcome of a verifier: the compared invariants of both sides
/// live in `details`.
struct VerificationReport {
  std::string check;
  Verdict verdict = Verdict::fail;
  nlohmann::json details;

  bool passed() const { return verdict != Verdict::fail; }
};

void to_json(nlohmann::json& j, const VerificationReport& r);

/// B0(G1 x G2) against B0(G1) + B0(G2), plus restriction of every
/// B0(G1 x G2) generator into the factor kernels.
VerificationReport verify_product(const GroupPtr& g1, const GroupPtr& g2, const EngineOptions& opt = {});

/// H^q(N x| G0) against H^q(N)^{G0} + H^q(G0) for q in {1, 2}; at q = 2
/// also B0(G) against B0(N)^{G0} + B0(G0) and injectivity of the joint
/// restriction. `action` lists an automorphism of N per element of G0.
/// Throws InputError when gcd(|N|, |G0|) != 1.
VerificationReport verify_coprime_semidirect(const GroupPtr& n, const GroupPtr& g0,
                                             const std::vector<std::vector<Elem>>& action, unsigned q,
                                             const EngineOptions& opt = {});

/// B0(N x| G0) against B0(N)^{G0}. Throws InputError unless the action is
/// fixed-point-free.
VerificationReport verify_frobenius(const GroupPtr& n, const GroupPtr& g0,
                                    const std::vector<std::vector<Elem>>& action, const EngineOptions& opt = {});

/// Joint restriction H^2(G, Q/Z) -> prod H^2(N_i, Q/Z) has trivial kernel.
/// Throws InputError when the indices are not coprime.
VerificationReport check_coprime_injectivity(const GroupPtr& g, const std::vector<Subgroup>& subgroups,
                                             const EngineOptions& opt = {});

/// The Sylow subgroups of G, one per prime divisor of |G|.
std::vector<Subgroup> sylow_family(const GroupPtr& g);

}  // namespace bogo
