#pragma once

#include <string>
#include <utility>

namespace ccc {

/// Pass/fail evidence from a verifier.  `failure` is empty exactly when
/// `passed` is set.  `min_distance` is filled by code verification and
/// stays -1 where distance does not apply (designs, packings).
struct VerifyReport {
  bool passed = false;
  int min_distance = -1;
  std::string failure;

  static VerifyReport pass(int min_distance = -1) { return {true, min_distance, {}}; }
  static VerifyReport fail(std::string why, int min_distance = -1) {
    return {false, min_distance, std::move(why)};
  }
};

}  // namespace ccc
