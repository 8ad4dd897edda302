#pragma once

#include <string>
#include <vector>

#include "ccc/composition.hpp"
#include "ccc/designs.hpp"
#include "ccc/report.hpp"

namespace ccc {

/// Ordered tuples over Z_M plus empty slots, the combinatorial skeleton
/// of a code: (T1) tuple supports form an (M, {lambda, lambda-1})-packing
/// (every row pair in at most one support), and (T2) each element of Z_M
/// occurs in slot i exactly w_i times.
struct BalancedPacking {
  int modulus = 0;  // M: row indices are Z_M
  int arity = 3;    // q - 1
  std::vector<OrderedTriple> tuples;
  Composition declared;
};

/// The M translates of t, adding i to every non-empty slot mod M.
std::vector<OrderedTriple> orbit(const OrderedTriple& t, int modulus);

/// Checks (T1) and (T2); failure pinpoints the duplicated row pair or
/// the (element, position, count) imbalance.
VerifyReport verify_t1_t2(const BalancedPacking& p);

/// Turns a GDP(M, 3^e1 2^e2) into a balanced packing of size M*w1 for a
/// three-part composition with e1 + e2 = w1 and 2*e1 + e2 = w2 + w3:
/// size-3 blocks stay fully ordered, the first w2-e1 pairs become
/// (a,b,*), the remaining w3-e1 become (a,*,c), and all Z_M orbits are
/// taken.
BalancedPacking gdp_to_packing(const GdpDesign& g, const Composition& c);

/// [[w1,w1,w1]]-balanced (6*w1+2, 3)-packing of size 6*w1^2 + 2*w1,
/// built from a Steiner triple system of order 6*w1+3: delete the
/// triples through one point, relabel, and reorder a fixed set of
/// diagonal and orbit triples to restore positional balance.
BalancedPacking equal_weight_packing(int w1);

/// Threshold-length packing: for a three-part composition with
/// w1 > s >= 2 (and (w1,s) not in {(4,2),(5,2)}), a balanced
/// (mu, 3)-packing of size mu*w1 + ceil(mu/6).  Starts from the
/// threshold GDP, replaces {0,1} and {0,mu/2-1} by the triple
/// {0,1,mu/2+1}, then repairs the doubled difference mu/2 with a fixed
/// modification schedule per mu mod 6.
BalancedPacking mu_packing(const Composition& c);

/// Header "M q-1 n" then one tuple per line, "a b c" with '*' for empty
/// slots.
std::string format_packing(const BalancedPacking& p);

}  // namespace ccc
