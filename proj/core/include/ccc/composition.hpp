#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccc {

/// A composition records how often each nonzero symbol occurs in a
/// codeword: parts w1 >= w2 >= ... >= w_{q-1} >= 1 over the implied
/// alphabet {0, ..., q-1}.  Construction normalizes the raw counts:
/// zeros are dropped and the remainder is sorted non-increasing, so two
/// equal Composition values describe the same code family.
class Composition {
 public:
  /// The trivial one-part composition [[1]].
  Composition() : parts_{1} {}

  /// Normalizes `raw`; throws invalid_input when empty or all-zero.
  explicit Composition(std::vector<int> raw);

  /// Parses a comma-separated decimal list such as "3,2,2" (normalizing).
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int part(int i) const { return parts_.at(static_cast<size_t>(i)); }
  int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
  int alphabet() const noexcept { return num_parts() + 1; }
  int largest_part() const noexcept { return parts_.front(); }
  long long total_weight() const noexcept;

  /// "3,2,2" form, always normalized.
  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Parameters derived from a composition: total weight w, largest part
/// w1, lambda = ceil(w/w1), the deficiency s = lambda*w1 - w, and the
/// critical size mu = lambda*(lambda-1)*w1 - 2*(lambda-1)*s.
struct DerivedParams {
  long long w;
  long long w1;
  long long lambda;
  long long s;
  long long mu;
};

DerivedParams derived_params(const Composition& c);

/// One group of fine-part indices (0-based) per coarse part; group sums
/// reproduce the coarse parts.
using RefinementWitness = std::vector<std::vector<int>>;

/// Searches for a partition of `fine`'s parts whose group sums give
/// `coarse`.  Deterministic: the assignment vector (fine index -> group)
/// is explored lexicographically and the first valid one is returned.
/// Requires |fine| > |coarse|; alphabets above q = 16 are rejected.
std::optional<RefinementWitness> is_refinement(const Composition& fine,
                                               const Composition& coarse);

/// For lambda = 3 compositions with at least three parts: coarsens to
/// [[w1, v2, v3]] with the same largest part by splitting parts 2..q-1
/// into two groups of sum at most w1 each, or nullopt when no such split
/// exists (e.g. [[10,7,7,6]]).
std::optional<Composition> reduce_to_three(const Composition& c);

}  // namespace ccc
