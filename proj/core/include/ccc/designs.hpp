#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "ccc/report.hpp"

namespace ccc {

/// Sorted distinct residues mod M; sizes 2 and 3 are the only ones used.
using BaseBlock = std::vector<int>;

/// Base blocks over Z_M whose difference lists repeat no nonzero residue
/// (a generalized difference packing of block type 3^e1 2^e2).
struct GdpDesign {
  int modulus = 0;
  std::vector<BaseBlock> blocks;

  int count_size3() const;
  int count_size2() const;
};

/// Empty slot marker inside an ordered tuple.
inline constexpr int kNoSlot = -1;

/// Ordered 3-tuple over Z_M plus the empty marker; the combinatorial
/// form of one code column.
struct OrderedTriple {
  std::array<int, 3> slot{kNoSlot, kNoSlot, kNoSlot};

  int operator[](size_t i) const { return slot[i]; }
  int& operator[](size_t i) { return slot[i]; }
  friend bool operator==(const OrderedTriple&, const OrderedTriple&) = default;
  friend auto operator<=>(const OrderedTriple&, const OrderedTriple&) = default;
};

std::string to_string(const OrderedTriple& t);

/// All k(k-1) ordered differences b_i - b_j mod M (i != j), in scan order.
std::vector<int> difference_list(const BaseBlock& b, int modulus);

/// Passes iff no nonzero residue repeats across the union of the blocks'
/// difference lists; failure names the repeated difference and blocks.
VerifyReport verify_gdp(const GdpDesign& g);

/// Backtracking search for a perfect (quasi = false, m = 1 or 7 mod 24)
/// or quasi-perfect (quasi = true, m = 13 or 19 mod 24) difference
/// family of triples over Z_m.  Returns (m-1)/6 blocks {0, a, a+b}
/// whose integer differences cover {1..(m-1)/2}, respectively
/// {1..(m-3)/2} union {(m+1)/2}, exactly once.  Deterministic: branches
/// on the largest uncovered difference, most balanced split first, and
/// returns the blocks sorted.
std::vector<BaseBlock> search_pdf3(int modulus, bool quasi);

/// GDP(M, 3^e1 2^e2) for any M >= 6*e1 + 2*e2 + 1 except the single
/// impossible case e1 = 2 or 3 (mod 4) with (M, e2) = (6*e1+2, 0).
/// Size-3 blocks come from a (quasi-)perfect difference family over
/// Z_{6*e1+1}; size-2 blocks are {0, d} with d climbing past its
/// largest difference.
GdpDesign build_gdp(int modulus, int e1, int e2);

/// GDP(mu, 3^{w1-s-1} 2^{s+2}) over Z_mu, mu = 6*w1 - 4*s, carrying the
/// three base blocks {0,1}, {0,2}, {0,mu/2-1} needed by the threshold
/// packing.  Needs w1 > s >= 2 and (w1, s) not in {(4,2), (5,2)}.
GdpDesign build_exgdp(int w1, int s);

/// Steiner triple system of order 3u, u = 2*w1 + 1, as ordered triples.
/// Points (x)_j of Z_u + Z_3 are encoded as j*u + x.  The list holds the
/// u diagonal triples (i_0, i_1, i_2) followed by the full 3u-element
/// orbits of (0_0, (2x)_0, x_1) for x = 1..w1.
std::vector<OrderedTriple> skolem_sts(int w1);

/// One-line debug form "M: {a,b,c} {a,b} ...".
std::string format_gdp(const GdpDesign& g);

}  // namespace ccc
