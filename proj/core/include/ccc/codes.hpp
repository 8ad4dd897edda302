#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/composition.hpp"
#include "ccc/packings.hpp"
#include "ccc/report.hpp"

namespace ccc {

/// A constant-composition code as an M x n matrix over Z_q, one codeword
/// per row.  Valid codes have every row of composition `declared` and
/// pairwise Hamming distance at least 2w-1.
struct Code {
  int q = 2;
  int n = 0;
  std::vector<std::vector<uint8_t>> rows;
  Composition declared;

  int size() const { return static_cast<int>(rows.size()); }
  int declared_distance() const { return static_cast<int>(2 * declared.total_weight() - 1); }
};

/// Checks per-row composition and, for every row pair, the support
/// conditions (C1) |supp intersection| <= 1 and (C2) different symbols on
/// a shared support column.  The minimum Hamming distance is computed
/// independently and cross-checked against the (C1)&(C2) characterization
/// of distance 2w-1; a disagreement would be an internal bug and throws.
VerifyReport verify_code(const Code& c);

/// Reads a balanced packing as a code: column c carries symbol i in row
/// a exactly when tuple c holds a in position i.  The packing is
/// re-verified first; an invalid one is rejected.
Code packing_to_code(const BalancedPacking& p);

/// Appends zero columns up to n_target (composition and distances are
/// untouched).
Code lengthen(const Code& c, int n_target);

/// Splits each coarse symbol class into the fine symbols of its witness
/// group: the v_j positions holding coarse symbol j are relabeled, left
/// to right, with group j's fine symbols in rank order, w_i positions
/// each.  Supports are unchanged, so distances never drop.
Code refine_code(const Code& coarse_code, const Composition& target,
                 const RefinementWitness& witness);

/// Optimal ternary code of size floor(n/w1) for any n at or past the
/// two-part stabilization length 2*w1*w2 + w2.  Uses difference orbits
/// over Z_M; at the threshold (M = 2*w2) the halved orbit of difference
/// w2 plus per-row singleton columns complete the length exactly.
Code construct_ternary(const Composition& c, int n);

/// Optimal quaternary code of size floor(n/w1) for a three-part
/// composition at any supported length: the GDP route for n >= (mu+1)*w1,
/// the Steiner-system route for the equal-weight excluded size, the
/// threshold packing for shorter n, zero-padding in between.  Three-part
/// compositions with w1 >= w2+w3 are built as ternary codes and refined.
Code construct_quaternary(const Composition& c, int n);

/// Front door: dispatches on the number of parts, reducing many-part
/// compositions to the ternary/quaternary machinery and refining back.
/// Only compositions whose stabilization length is exactly known are
/// accepted, and only at lengths n >= that value.  The result is always
/// re-verified.
Code construct_optimal(const Composition& c, int n);

/// Serialized form (bit-exact):
///   line 1: "q <q> n <n> M <M> d <d>"
///   line 2: "comp <w1,w2,...>"
///   lines 3..M+2: n space-separated symbols in [0, q).
std::string format_code(const Code& c);

/// Strict parser for format_code output; any deviation is rejected.
Code parse_code(std::string_view text);

}  // namespace ccc
