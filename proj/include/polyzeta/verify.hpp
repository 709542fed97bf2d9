#pragma once

#include "polyzeta/report.hpp"

#include <cstdint>
#include <vector>

namespace polyzeta {

inline constexpr const char* kVersion = "0.1.0";

struct VerifyConfig {
  int k_max = 6;
  std::vector<double> a_list{2.0, 2.5, 3.0, 4.0, 7.3};
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  double tol = 1e-8;  // deterministic routes, relative
};

/// Runs every route for every quantity up to cfg.k_max and collects the
/// results. Never throws for a failing comparison; failures show up as
/// rows with pass = false.
VerificationReport run_verification(const VerifyConfig& cfg);

/// Note describing how the tuple-sum form pi^{2k}/(2^{2k}-1)(1+T) compares
/// with zeta(2k) obtained through S(2k).
ReportNote zeta_form_note(int k);

}  // namespace polyzeta
