#include "ccc/bounds.hpp"

#include <algorithm>
#include <array>

#include "ccc/errors.hpp"

namespace ccc {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

void require_two_parts(const Composition& c, const char* who) {
  if (c.num_parts() < 2) {
    throw invalid_input(std::string(who) + " needs at least two parts");
  }
}

// The four quaternary compositions whose stabilization length is open:
// exactly the 3-part lambda=3 compositions with (w1, s) in {(4,2),(5,2)}.
bool is_open_exception(const Composition& c) {
  static const std::array<Composition, 4> kOpen = {
      Composition({4, 4, 2}), Composition({4, 3, 3}),
      Composition({5, 5, 3}), Composition({5, 4, 4})};
  return std::find(kOpen.begin(), kOpen.end(), c) != kOpen.end();
}

}  // namespace

std::string to_string(NcccStatus s) {
  switch (s) {
    case NcccStatus::exact: return "exact";
    case NcccStatus::lower_bound_only: return "lower-bound-only";
    case NcccStatus::open_exception: return "open-exception";
  }
  return "?";
}

long long johnson_upper(long long n, const Composition& c) {
  if (n < 0) throw invalid_input("length must be non-negative");
  return n / c.largest_part();
}

long long nccc_lower(const Composition& c) {
  require_two_parts(c, "nccc_lower");
  const DerivedParams d = derived_params(c);
  return (d.mu + 1) * d.w1 - (2 * d.s) / d.lambda;
}

std::pair<long long, long long> legacy_bounds(const Composition& c) {
  require_two_parts(c, "legacy_bounds");
  const DerivedParams d = derived_params(c);
  return {d.w * d.w - d.w1 * (d.w - 1), 4 * d.w1 * (d.w - 1) * (d.w - 1) + 1};
}

long long a3_exact(long long n, const Composition& c) {
  if (c.num_parts() != 2) throw invalid_input("a3_exact needs exactly two parts");
  if (n < 0) throw invalid_input("length must be non-negative");
  const long long w1 = c.part(0), w2 = c.part(1);
  for (long long M = n / w1; M > 0; --M) {
    if (2 * n >= M * (2 * w1 + std::max(2 * w2 - M + 1, 0LL))) return M;
  }
  return 0;
}

long long ternary_slack(long long n, const Composition& c) {
  if (c.num_parts() != 2) throw invalid_input("ternary_slack needs exactly two parts");
  const long long w1 = c.part(0), w2 = c.part(1);
  const long long M = n / w1;
  return 2 * n - M * (2 * w1 + std::max(2 * w2 - M + 1, 0LL));
}

long long packing_number_d3(long long v) {
  if (v < 3) throw invalid_input("packing_number_d3 needs v >= 3");
  const long long base = v * ((v - 1) / 2) / 3;
  return v % 6 == 5 ? base - 1 : base;
}

bool feasibility_certificate(long long M, long long n, const Composition& c) {
  if (M < 1 || n < 1) throw invalid_input("feasibility_certificate needs M, n >= 1");
  const long long w = c.total_weight();
  const long long cap = std::min<long long>(c.num_parts(), M);
  const long long total = M * w;
  if (total > n * cap) return false;
  const long long lo = total / n;
  const long long hi_count = total % n;  // columns at lo+1, rest at lo
  const long long pair_sum = hi_count * choose2(lo + 1) + (n - hi_count) * choose2(lo);
  return pair_sum <= choose2(M);
}

BlockDistribution block_distribution(long long M, const Composition& c, bool at_mu) {
  require_two_parts(c, "block_distribution");
  const DerivedParams d = derived_params(c);
  if (at_mu) {
    if (M != d.mu || 2 * d.s < d.lambda) {
      throw invalid_input("threshold row needs M = mu and 2s >= lambda");
    }
    const long long r = ceil_div(M, d.lambda * (d.lambda - 1));
    return {M * d.w1 + r, M * d.w1 + (1 - d.lambda) * r - M * d.s,
            d.lambda * r + M * d.s};
  }
  if (M < d.mu + 1) throw invalid_input("generic row needs M >= mu+1");
  return {M * d.w1, M * (d.w1 - d.s), M * d.s};
}

std::vector<std::pair<long long, long long>> target_pairs(const Composition& c,
                                                          long long M_max) {
  require_two_parts(c, "target_pairs");
  const DerivedParams d = derived_params(c);
  std::vector<std::pair<long long, long long>> out;
  if (2 * d.s >= d.lambda) {
    out.emplace_back(d.mu, d.mu * d.w1 + ceil_div(d.mu, d.lambda * (d.lambda - 1)));
  }
  for (long long M = d.mu + 1; M <= M_max; ++M) out.emplace_back(M, M * d.w1);
  return out;
}

NcccAnswer nccc_exact(const Composition& c) {
  if (c.num_parts() == 1) return {NcccStatus::exact, 1, std::nullopt};
  const DerivedParams d = derived_params(c);
  const long long lower = nccc_lower(c);

  if (d.lambda == 2) {
    // Coarsening to [[w1, w-w1]] keeps w1 and always exists, so the
    // two-part formula settles every lambda = 2 composition.
    return {NcccStatus::exact, lower, std::nullopt};
  }
  if (d.lambda == 3) {
    std::optional<Composition> target;
    if (c.num_parts() == 3) {
      target = c;
    } else {
      try {
        target = reduce_to_three(c);
      } catch (const unsupported_parameters&) {
        target = std::nullopt;  // alphabet beyond search range: stay honest
      }
    }
    if (!target) return {NcccStatus::lower_bound_only, lower, (d.mu + 1) * d.w1};
    if (is_open_exception(*target)) {
      return {NcccStatus::open_exception, lower, (d.mu + 1) * d.w1};
    }
    return {NcccStatus::exact, lower, std::nullopt};
  }
  // lambda >= 4: outside the constructive range, and no finite-length
  // guarantee to quote as an upper end.
  return {NcccStatus::lower_bound_only, lower, std::nullopt};
}

}  // namespace ccc
