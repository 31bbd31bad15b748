#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecpoly/oracle.hpp"

namespace ecpoly {

enum class ClaimStatus { Agree, Disagree, NotApplicable };

std::string_view to_string(ClaimStatus status) noexcept;

struct VerificationEntry {
  std::string claim_id;
  std::string source;
  std::string claimed;
  std::string computed;
  ClaimStatus status = ClaimStatus::NotApplicable;

  friend bool operator==(const VerificationEntry&, const VerificationEntry&) = default;
};

struct VerificationReport {
  /// Sorted by claim_id.
  std::vector<VerificationEntry> entries;

  bool has_disagreement() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct ClaimInfo {
  std::string_view id;
  std::string_view summary;
};

/// Every claim group known to verify_claims, in registry order.
std::span<const ClaimInfo> claim_registry();

/// Expands a suite name into claim ids: "paper-all", "formulas", "structure",
/// "cubic", or a comma separated list of claim ids. Throws UnknownClaim.
std::vector<std::string> suite_claims(std::string_view suite);

/// Evaluates each claim group against oracle values. Every "computed" column
/// is produced by the oracle or by the spanning tree count; the claimed
/// column is the printed value or formula. Throws UnknownClaim and
/// SizeCapExceeded.
VerificationReport verify_claims(std::span<const std::string> claims, const OracleConfig& cfg = {});

}  // namespace ecpoly
