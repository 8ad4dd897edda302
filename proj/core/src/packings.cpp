#include "ccc/packings.hpp"

#include <algorithm>
#include <stdexcept>

#include "ccc/errors.hpp"

namespace ccc {

std::vector<OrderedTriple> orbit(const OrderedTriple& t, int modulus) {
  if (modulus < 1) throw invalid_input("modulus must be positive");
  for (int v : t.slot) {
    if (v != kNoSlot && (v < 0 || v >= modulus)) {
      throw invalid_input("tuple entry out of range");
    }
  }
  std::vector<OrderedTriple> out;
  out.reserve(static_cast<size_t>(modulus));
  for (int i = 0; i < modulus; ++i) {
    OrderedTriple s = t;
    for (int& v : s.slot) {
      if (v != kNoSlot) v = (v + i) % modulus;
    }
    out.push_back(s);
  }
  return out;
}

VerifyReport verify_t1_t2(const BalancedPacking& p) {
  const int M = p.modulus;
  if (M < 1) return VerifyReport::fail("modulus must be positive");
  if (p.arity != 3 || p.declared.num_parts() != 3) {
    return VerifyReport::fail("packing arity and declared parts must both be 3");
  }
  const DerivedParams d = derived_params(p.declared);

  std::vector<int> owner(static_cast<size_t>(M) * static_cast<size_t>(M), -1);
  std::vector<std::vector<long long>> count(
      3, std::vector<long long>(static_cast<size_t>(M), 0));

  for (size_t ti = 0; ti < p.tuples.size(); ++ti) {
    const OrderedTriple& t = p.tuples[ti];
    std::vector<int> support;
    for (size_t i = 0; i < 3; ++i) {
      const int v = t[i];
      if (v == kNoSlot) continue;
      if (v < 0 || v >= M) return VerifyReport::fail("entry out of range in " + to_string(t));
      count[i][static_cast<size_t>(v)]++;
      support.push_back(v);
    }
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
      return VerifyReport::fail("repeated element in tuple " + to_string(t));
    }
    const long long sz = static_cast<long long>(support.size());
    if (sz != d.lambda && sz != d.lambda - 1) {
      return VerifyReport::fail("support size " + std::to_string(sz) + " of tuple " +
                                to_string(t) + " not in {" + std::to_string(d.lambda) +
                                "," + std::to_string(d.lambda - 1) + "}");
    }
    for (size_t i = 0; i < support.size(); ++i) {
      for (size_t j = i + 1; j < support.size(); ++j) {
        int& o = owner[static_cast<size_t>(support[i]) * static_cast<size_t>(M) +
                       static_cast<size_t>(support[j])];
        if (o >= 0) {
          return VerifyReport::fail(
              "pair {" + std::to_string(support[i]) + "," + std::to_string(support[j]) +
              "} covered by tuples " + to_string(p.tuples[static_cast<size_t>(o)]) +
              " and " + to_string(t));
        }
        o = static_cast<int>(ti);
      }
    }
  }

  for (size_t i = 0; i < 3; ++i) {
    const long long want = p.declared.part(static_cast<int>(i));
    for (int v = 0; v < M; ++v) {
      if (count[i][static_cast<size_t>(v)] != want) {
        return VerifyReport::fail("element " + std::to_string(v) + " occurs " +
                                  std::to_string(count[i][static_cast<size_t>(v)]) +
                                  " times in position " + std::to_string(i + 1) +
                                  ", want " + std::to_string(want));
      }
    }
  }
  return VerifyReport::pass();
}

BalancedPacking gdp_to_packing(const GdpDesign& g, const Composition& c) {
  if (c.num_parts() != 3) throw invalid_input("gdp_to_packing needs a three-part composition");
  const int w1 = c.part(0), w2 = c.part(1), w3 = c.part(2);
  const int e1 = g.count_size3(), e2 = g.count_size2();
  if (e1 + e2 != w1 || 2 * e1 + e2 != w2 + w3 || w3 < e1) {
    throw invalid_input("block type " + std::to_string(e1) + "/" + std::to_string(e2) +
                        " does not fit composition " + c.str());
  }

  BalancedPacking p{g.modulus, 3, {}, c};
  p.tuples.reserve(static_cast<size_t>(g.modulus) * static_cast<size_t>(w1));
  int pairs_as_12 = w2 - e1;  // remaining size-2 blocks become (a,*,c)
  for (const BaseBlock& b : g.blocks) {
    OrderedTriple t;
    if (b.size() == 3) {
      t = {{b[0], b[1], b[2]}};
    } else if (pairs_as_12-- > 0) {
      t = {{b[0], b[1], kNoSlot}};
    } else {
      t = {{b[0], kNoSlot, b[1]}};
    }
    auto orb = orbit(t, g.modulus);
    p.tuples.insert(p.tuples.end(), orb.begin(), orb.end());
  }
  return p;
}

BalancedPacking equal_weight_packing(int w1) {
  if (w1 < 1) throw invalid_input("equal_weight_packing needs w1 >= 1");
  const int u = 2 * w1 + 1;
  const int M = 6 * w1 + 2;
  const int deleted = 3 * u - 1;  // (2w1)_2 encodes past every kept point
  const int iota = w1 / 2, kappa = (w1 + 1) / 2;

  BalancedPacking p{M, 3, {}, Composition({w1, w1, w1})};
  p.tuples.reserve(static_cast<size_t>(6 * w1 * w1 + 2 * w1));

  // Diagonal triples (i_0, i_1, i_2), already in their final slot order:
  // indices below w1 reversed, the rest rotated.
  for (int i = 0; i < w1; ++i) p.tuples.push_back({{2 * u + i, u + i, i}});
  for (int i = w1; i < 2 * w1; ++i) p.tuples.push_back({{u + i, 2 * u + i, i}});

  auto enc = [u](int x, int j) { return j * u + x % u; };
  for (int x = 1; x <= w1; ++x) {
    for (int h = 0; h < 3; ++h) {
      for (int g = 0; g < u; ++g) {
        OrderedTriple t{{enc(g, h), enc(2 * x + g, h), enc(x + g, (h + 1) % 3)}};
        if (t[0] == deleted || t[1] == deleted || t[2] == deleted) continue;
        // Final balancing swap on two fixed odd stretches of the h = 2
        // layer.
        if (h == 2 && g % 2 == 1) {
          const bool swap_kappa = (x == kappa && g <= 2 * iota - 1);
          const bool swap_last = (x == w1 && g >= 2 * kappa + 1);
          if (swap_kappa || swap_last) std::swap(t[0], t[1]);
        }
        p.tuples.push_back(t);
      }
    }
  }
  return p;
}

namespace {

struct MuSchedule {
  std::vector<int> null_slot3;            // translates of the big-triple orbit
  std::vector<int> null_slot2;
  std::vector<OrderedTriple> additions;   // (*, y, z) tuples
  std::vector<std::pair<int, int>> fill;  // (translate of the {0,2} orbit, new slot-3 value)
};

MuSchedule mu_schedule(int M) {
  const int k = M / 6;
  MuSchedule s;
  switch (M % 6) {
    case 0:
      if (k < 2) throw std::logic_error("mu schedule needs k >= 2 for M = 6k");
      for (int i = 0; i < k; ++i) {
        s.null_slot3.push_back(3 * i);
        s.null_slot3.push_back(3 * i + 3 * k - 1);
        s.null_slot2.push_back(3 * i + 3 * k + 1);
        s.additions.push_back({{kNoSlot, 3 * i + 3 * k + 2, 3 * i + 3 * k + 1}});
        s.fill.emplace_back(3 * i + 3 * k - 1, 3 * i);
      }
      return s;
    case 2:
      if (k < 1) throw std::logic_error("mu schedule needs k >= 1 for M = 6k+2");
      for (int i = 0; i < k; ++i) {
        s.null_slot3.push_back(3 * i + 1);
        s.null_slot3.push_back(3 * i + 3 * k);
        s.null_slot2.push_back(3 * i);
        s.additions.push_back({{kNoSlot, 3 * i + 1, 3 * i}});
      }
      s.null_slot2.push_back(6 * k);
      s.additions.push_back({{kNoSlot, 6 * k + 1, 6 * k}});
      for (int i = 0; i + 1 < k; ++i) s.fill.emplace_back(3 * i + 1, 3 * i + 3 * k + 3);
      return s;
    case 4:
      if (k < 1) throw std::logic_error("mu schedule needs k >= 1 for M = 6k+4");
      for (int i = 0; i < k; ++i) {
        s.null_slot3.push_back(3 * i + 1);
        s.fill.emplace_back(3 * i + 1, 3 * i + 3 * k + 4);
      }
      // ceil(M/6) = k+1 additions are needed to restore balance, so the
      // added tuples run one step past the nulled slot-3 stretch.
      for (int i = 0; i <= k; ++i) {
        s.null_slot3.push_back(3 * i + 3 * k + 1);
        s.null_slot2.push_back(3 * i);
        s.additions.push_back({{kNoSlot, 3 * i + 1, 3 * i}});
      }
      return s;
    default:
      throw std::logic_error("mu must be even");
  }
}

}  // namespace

BalancedPacking mu_packing(const Composition& c) {
  if (c.num_parts() != 3) throw invalid_input("mu_packing needs a three-part composition");
  const int w1 = c.part(0), w2 = c.part(1), w3 = c.part(2);
  const int s = 2 * w1 - w2 - w3;
  if (s < 2) throw unsupported_parameters("mu_packing needs s >= 2");
  GdpDesign g = build_exgdp(w1, s);  // rejects s >= w1 and the two open pairs
  const int M = g.modulus;
  const int e1 = g.count_size3();

  // Swap the pairs {0,1} and {0,M/2-1} for the triple {0,1,M/2+1}; its
  // doubled difference M/2 is what the schedule repairs afterwards.
  std::erase(g.blocks, BaseBlock{0, 1});
  std::erase(g.blocks, BaseBlock{0, M / 2 - 1});

  std::vector<OrderedTriple> heads;
  heads.push_back({{0, 1, M / 2 + 1}});
  for (const BaseBlock& b : g.blocks) {
    if (b.size() == 3) heads.push_back({{b[0], b[1], b[2]}});
  }
  // {0,2} leads the (a,b,*) class; it is the orbit the schedule fills.
  int quota2 = w2 - e1 - 1;
  int fill_orbit_base = -1;
  for (const BaseBlock& b : g.blocks) {
    if (b.size() != 2) continue;
    if (quota2-- > 0) {
      if (b == BaseBlock{0, 2}) {
        fill_orbit_base = static_cast<int>(heads.size()) * M;
      }
      heads.push_back({{b[0], b[1], kNoSlot}});
    } else {
      heads.push_back({{b[0], kNoSlot, b[1]}});
    }
  }
  if (fill_orbit_base < 0) throw std::logic_error("mu_packing lost the {0,2} block");

  BalancedPacking p{M, 3, {}, c};
  p.tuples.reserve(static_cast<size_t>(M) * static_cast<size_t>(w1) + size_t(M / 6 + 1));
  for (const OrderedTriple& h : heads) {
    auto orb = orbit(h, M);
    p.tuples.insert(p.tuples.end(), orb.begin(), orb.end());
  }

  const MuSchedule sched = mu_schedule(M);
  for (int j : sched.null_slot3) p.tuples[static_cast<size_t>(j)][2] = kNoSlot;
  for (int j : sched.null_slot2) p.tuples[static_cast<size_t>(j)][1] = kNoSlot;
  for (auto [j, v] : sched.fill) {
    p.tuples[static_cast<size_t>(fill_orbit_base + j)][2] = v;
  }
  p.tuples.insert(p.tuples.end(), sched.additions.begin(), sched.additions.end());
  return p;
}

std::string format_packing(const BalancedPacking& p) {
  std::string out = std::to_string(p.modulus) + " " + std::to_string(p.arity) + " " +
                    std::to_string(p.tuples.size()) + "\n";
  for (const OrderedTriple& t : p.tuples) {
    for (size_t i = 0; i < 3; ++i) {
      if (i) out += ' ';
      out += t[i] == kNoSlot ? std::string("*") : std::to_string(t[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ccc
