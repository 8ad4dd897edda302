#pragma once

#include <optional>

#include "ccc/codes.hpp"
#include "ccc/composition.hpp"

namespace ccc {

/// Outcome of an exhaustive search: the exact maximum code size, one
/// witness code of that size, and how many candidate codewords were
/// enumerated.
struct OracleResult {
  long long value = 0;
  std::optional<Code> witness;
  long long search_space = 0;
};

/// Exact maximum size of an (n, 2w-1, c)_q code, computed as a maximum
/// clique over all composition-c words (edges = the support conditions).
/// Deterministic: candidates are enumerated lexicographically, the clique
/// search is rooted at the least word (sound, since columns of any code
/// can be permuted to sort one codeword), and branches stop early against
/// the Johnson and column-counting bounds.  The candidate count is capped
/// at 10^7; larger inputs are rejected rather than attempted.
OracleResult exact_max_code(int q, int n, const Composition& c);

/// Smallest n0 <= n_max such that the oracle meets floor(n/w1) for every
/// n in [n0, n_max], or nullopt if no such tail starts by n_max.  A
/// desk-scale probe: the true stabilization length also needs the
/// infinite tail, which only the constructive results supply.
std::optional<int> empirical_nccc(const Composition& c, int n_max);

}  // namespace ccc
