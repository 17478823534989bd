#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "fejerlab/zoo.hpp"

namespace fejer {

enum class ClaimStatus { Pass, Fail, Inconclusive };
const char* to_string(ClaimStatus s);

struct ClaimResult {
  std::string claim_id;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Fail;
  nlohmann::ordered_json measured;
  nlohmann::ordered_json expected;
  double tolerance = 0.0;
};

struct VerifyReport {
  ExampleId id = ExampleId::AngularClosure;
  std::vector<ClaimResult> claims;
  double wall_time = 0.0;
  bool passed() const;
};

// Claim ids registered for an example, in evaluation order.
std::vector<std::string> registered_claims(ExampleId id);

VerifyReport verify_example(ExampleId id);
// Runs examples on up to `jobs` threads; reports come back in declaration order.
std::vector<VerifyReport> verify_examples(const std::vector<ExampleId>& ids, std::size_t jobs);

nlohmann::ordered_json to_json(const VerifyReport& r);

}  // namespace fejer
