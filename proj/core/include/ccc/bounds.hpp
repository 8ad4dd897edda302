#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccc/composition.hpp"

namespace ccc {

enum class NcccStatus { exact, lower_bound_only, open_exception };

std::string to_string(NcccStatus s);

/// Answer of the N_ccc dispatcher.  `lower` is always the proven lower
/// bound on the stabilization length; for exact answers it is the value
/// itself and `upper` is omitted.  For open cases `upper` carries the
/// smallest multiple-of-w1 length from which optimality is certain.
struct NcccAnswer {
  NcccStatus status;
  long long lower;
  std::optional<long long> upper;
};

/// Block-size histogram of the support packing underlying an optimal
/// code: `count_lambda` blocks of size lambda and `count_lambda_minus_1`
/// of size lambda-1, over n columns in total.
struct BlockDistribution {
  long long n;
  long long count_lambda;
  long long count_lambda_minus_1;
};

/// floor(n / w1): the size bound at distance 2w-1.
long long johnson_upper(long long n, const Composition& c);

/// (mu+1)*w1 - floor(2s/lambda), the sharp lower bound on the
/// stabilization length (needs at least two parts).
long long nccc_lower(const Composition& c);

/// The older bracket (w^2 - w1*(w-1), 4*w1*(w-1)^2 + 1); kept for
/// cross-checking that nccc_lower dominates its lower end.
std::pair<long long, long long> legacy_bounds(const Composition& c);

/// Exact ternary maximum: max{ M : n >= M*(w1 + max(w2-(M-1)/2, 0)) },
/// evaluated with doubled integers to stay exact.  Two parts required.
long long a3_exact(long long n, const Composition& c);

/// Doubled slack 2n - M*(2*w1 + max(2*w2 - M + 1, 0)) with M = floor(n/w1);
/// non-negative exactly when length n meets the Johnson bound.
long long ternary_slack(long long n, const Composition& c);

/// Maximum number of triples on v points with every pair in at most one
/// triple; v >= 3.
long long packing_number_d3(long long v);

/// True iff column counts N_1..N_n exist with sum M*w, each at most
/// min(q-1, M), and sum of C(N_i,2) at most C(M,2).  Only the balanced
/// profile is tested; convexity makes it the minimizer.  A false result
/// certifies that no code of size M and length n exists.
bool feasibility_certificate(long long M, long long n, const Composition& c);

/// Block-size histogram for size M: the generic row needs M >= mu+1,
/// the threshold row (at_mu) needs M = mu and 2s >= lambda.
BlockDistribution block_distribution(long long M, const Composition& c, bool at_mu);

/// The (M, n) pairs requiring a direct construction: (M, M*w1) for
/// mu+1 <= M <= M_max, preceded by the threshold pair
/// (mu, mu*w1 + ceil(mu/(lambda*(lambda-1)))) when 2s >= lambda.
std::vector<std::pair<long long, long long>> target_pairs(const Composition& c,
                                                          long long M_max);

/// Resolves N_ccc for a composition: exact where the constructive
/// machinery reaches (lambda <= 3 and reducible, minus the four open
/// quaternary exceptions), an interval for the exceptions, and
/// lower-bound-only elsewhere.
NcccAnswer nccc_exact(const Composition& c);

}  // namespace ccc
