#include "ccc/designs.hpp"

#include <algorithm>
#include <bitset>
#include <set>
#include <stdexcept>

#include "ccc/errors.hpp"

namespace ccc {

namespace {

constexpr int kMaxPdfModulus = 255;  // half-difference bitset bound

void check_block(const BaseBlock& b, int modulus) {
  if (b.size() < 2 || b.size() > 3) {
    throw invalid_input("base blocks must have size 2 or 3");
  }
  for (int x : b) {
    if (x < 0 || x >= modulus) throw invalid_input("block element out of range");
  }
  for (size_t i = 0; i + 1 < b.size(); ++i) {
    if (b[i] >= b[i + 1]) throw invalid_input("block elements must be sorted distinct");
  }
}

std::string block_str(const BaseBlock& b) {
  std::string out = "{";
  for (size_t i = 0; i < b.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(b[i]);
  }
  return out + "}";
}

// Integer differences y-x over all unordered element pairs x < y.
std::vector<int> positive_differences(const BaseBlock& b) {
  std::vector<int> out;
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = i + 1; j < b.size(); ++j) out.push_back(b[j] - b[i]);
  }
  return out;
}

// The largest uncovered difference can only be a triple's sum, so branch
// on its split (a, z-a), most balanced first.  That order walks almost
// straight to a solution at every admissible modulus; the small-leg-first
// order stalls hopelessly past m = 79.
bool pdf_backtrack(std::bitset<kMaxPdfModulus>& open, int max_diff,
                   std::vector<BaseBlock>& blocks) {
  int z = -1;
  for (int d = max_diff; d >= 1; --d) {
    if (open[static_cast<size_t>(d)]) {
      z = d;
      break;
    }
  }
  if (z < 0) return true;  // everything covered
  open[static_cast<size_t>(z)] = false;
  for (int a = (z - 1) / 2; a >= 1; --a) {
    if (!open[static_cast<size_t>(a)] || !open[static_cast<size_t>(z - a)]) continue;
    open[static_cast<size_t>(a)] = open[static_cast<size_t>(z - a)] = false;
    blocks.push_back({0, a, z});
    if (pdf_backtrack(open, max_diff, blocks)) return true;
    blocks.pop_back();
    open[static_cast<size_t>(a)] = open[static_cast<size_t>(z - a)] = true;
  }
  open[static_cast<size_t>(z)] = true;
  return false;
}

}  // namespace

int GdpDesign::count_size3() const {
  return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                        [](const BaseBlock& b) { return b.size() == 3; }));
}

int GdpDesign::count_size2() const {
  return static_cast<int>(blocks.size()) - count_size3();
}

std::string to_string(const OrderedTriple& t) {
  std::string out = "(";
  for (size_t i = 0; i < 3; ++i) {
    if (i) out += ',';
    out += t[i] == kNoSlot ? std::string("*") : std::to_string(t[i]);
  }
  return out + ")";
}

std::vector<int> difference_list(const BaseBlock& b, int modulus) {
  if (modulus < 2) throw invalid_input("modulus must be at least 2");
  check_block(b, modulus);
  std::vector<int> out;
  for (size_t i = 0; i < b.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      if (i == j) continue;
      out.push_back(((b[i] - b[j]) % modulus + modulus) % modulus);
    }
  }
  return out;
}

VerifyReport verify_gdp(const GdpDesign& g) {
  if (g.modulus < 1) return VerifyReport::fail("modulus must be positive");
  std::vector<int> owner(static_cast<size_t>(g.modulus), -1);
  for (size_t bi = 0; bi < g.blocks.size(); ++bi) {
    const BaseBlock& b = g.blocks[bi];
    try {
      check_block(b, g.modulus);
    } catch (const invalid_input& e) {
      return VerifyReport::fail(e.what());
    }
    for (int d : difference_list(b, g.modulus)) {
      if (d == 0) return VerifyReport::fail("zero difference in block " + block_str(b));
      int& seen = owner[static_cast<size_t>(d)];
      if (seen >= 0) {
        return VerifyReport::fail("difference " + std::to_string(d) + " repeated by blocks " +
                                  block_str(g.blocks[static_cast<size_t>(seen)]) + " and " +
                                  block_str(b));
      }
      seen = static_cast<int>(bi);
    }
  }
  return VerifyReport::pass();
}

std::vector<BaseBlock> search_pdf3(int modulus, bool quasi) {
  const int r = modulus % 24;
  if (!quasi && r != 1 && r != 7) {
    throw invalid_input("perfect difference family needs m = 1 or 7 (mod 24)");
  }
  if (quasi && r != 13 && r != 19) {
    throw invalid_input("quasi-perfect difference family needs m = 13 or 19 (mod 24)");
  }
  if (modulus > kMaxPdfModulus * 2 - 1) {
    throw unsupported_parameters("difference family search capped at m <= " +
                                 std::to_string(kMaxPdfModulus * 2 - 1));
  }

  const int max_diff = quasi ? (modulus + 1) / 2 : (modulus - 1) / 2;
  std::bitset<kMaxPdfModulus> open;
  for (int d = 1; d <= (modulus - 3) / 2; ++d) open[static_cast<size_t>(d)] = true;
  if (modulus > 1) open[static_cast<size_t>(max_diff)] = true;

  std::vector<BaseBlock> blocks;
  if (!pdf_backtrack(open, max_diff, blocks)) {
    throw search_exhausted("no difference family of triples over Z_" +
                           std::to_string(modulus));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

GdpDesign build_gdp(int modulus, int e1, int e2) {
  if (e1 < 0 || e2 < 0) throw invalid_input("block counts must be non-negative");
  const int m = 6 * e1 + 1;
  if (modulus < m + 2 * e2) {
    throw unsupported_parameters("GDP needs M >= 6*e1 + 2*e2 + 1");
  }
  const bool quasi = e1 % 4 >= 2;
  if (quasi && e2 == 0 && modulus == m + 1) {
    throw unsupported_parameters("no GDP with e1 = 2,3 (mod 4) at (M, e2) = (6*e1+2, 0)");
  }

  GdpDesign g;
  g.modulus = modulus;
  if (e1 > 0) g.blocks = search_pdf3(m, quasi);
  const int half = (m - 1) / 2;
  for (int i = 1; i <= e2; ++i) {
    // The quasi-perfect family leaves (m-1)/2 itself free; start there.
    const int d = (quasi && i == 1) ? half : half + i;
    g.blocks.push_back({0, d});
  }

  if (VerifyReport r = verify_gdp(g); !r.passed) {
    throw std::logic_error("build_gdp produced an invalid design: " + r.failure);
  }
  return g;
}

namespace {

// The four explicit base-block families behind the threshold GDP, split
// on w1 - s mod 4.  Small k has bespoke lists.
std::vector<BaseBlock> exgdp_triples(int w1, int s) {
  const int diff = w1 - s;
  const int k = diff / 4;
  std::vector<BaseBlock> b;
  switch (diff % 4) {
    case 0:
      if (k == 1) {
        if (s == 2) return {{0, 3, 11}, {0, 4, 9}, {0, 6, 16}};
        return {{0, 3, 13}, {0, 4, 12}, {0, 5, 11}};
      }
      b.push_back({0, 6 * k - 1, 18 * k + 2 * s - 1});
      b.push_back({0, 4 * k - 1, 9 * k - 1});
      b.push_back({0, 2 * k, 10 * k - 1});
      b.push_back({0, 4 * k, 10 * k});
      for (int r = 1; r <= k - 1; ++r) b.push_back({0, 2 * k + 2 * r - 1, 7 * k + r - 1});
      for (int r = 1; r <= k - 1; ++r) b.push_back({0, 2 * k + 2 * r, 11 * k + r - 1});
      for (int r = 1; r <= k - 1; ++r) b.push_back({0, 2 * r + 1, 10 * k + r});
      for (int r = 2; r <= k - 1; ++r) b.push_back({0, 2 * r, 6 * k + r});
      return b;
    case 1:
      if (k == 0) return {};
      if (k == 1) return {{0, 3, 14}, {0, 4, 12}, {0, 5, 15}, {0, 6, 13}};
      b.push_back({0, 6 * k, 18 * k + 2 * s + 4});
      b.push_back({0, 4 * k - 1, 9 * k});
      b.push_back({0, 4 * k, 10 * k + 1});
      b.push_back({0, 4 * k + 1, 12 * k + 1});
      b.push_back({0, 2 * k, 12 * k});
      for (int r = 1; r <= k - 1; ++r) b.push_back({0, 2 * k + 2 * r - 1, 7 * k + r});
      for (int r = 1; r <= k - 1; ++r) b.push_back({0, 2 * k + 2 * r, 11 * k + r});
      for (int r = 1; r <= k - 1; ++r) b.push_back({0, 2 * r + 1, 10 * k + r + 1});
      for (int r = 2; r <= k - 1; ++r) b.push_back({0, 2 * r, 6 * k + r + 1});
      return b;
    case 2:
      if (k == 0) return {{0, 3, 7}};  // needs s >= 3; (4,2) is rejected upstream
      b.push_back({0, 4 * k + 1, 10 * k + 6});
      b.push_back({0, 4 * k + 3, 10 * k + 7});
      for (int r = 2; r <= 2 * k + 1; ++r) b.push_back({0, 2 * r, 6 * k + r + 5});
      for (int r = 1; r <= k; ++r) b.push_back({0, 2 * r + 1, 10 * k + r + 7});
      for (int r = 1; r <= k - 1; ++r) b.push_back({0, 2 * k + 2 * r + 1, 11 * k + r + 7});
      return b;
    default:  // diff % 4 == 3
      if (k == 0) return {{0, 3, 8}, {0, 4, 10}};  // needs s >= 3; (5,2) rejected upstream
      b.push_back({0, 4 * k + 1, 10 * k + 9});
      b.push_back({0, 4 * k + 3, 10 * k + 10});
      b.push_back({0, 4 * k + 4, 8 * k + 9});
      for (int r = 2; r <= 2 * k + 1; ++r) b.push_back({0, 2 * r, 6 * k + r + 7});
      for (int r = 1; r <= k - 1; ++r) b.push_back({0, 2 * r + 1, 10 * k + r + 10});
      for (int r = 1; r <= k; ++r) b.push_back({0, 2 * k + 2 * r - 1, 11 * k + r + 9});
      return b;
  }
}

}  // namespace

GdpDesign build_exgdp(int w1, int s) {
  if (s < 2 || w1 <= s) throw unsupported_parameters("build_exgdp needs w1 > s >= 2");
  if ((w1 == 4 || w1 == 5) && s == 2) {
    throw unsupported_parameters("no threshold GDP for (w1, s) = (" + std::to_string(w1) +
                                 ", 2)");
  }
  const int mu = 6 * w1 - 4 * s;
  const int e1 = w1 - s - 1;
  const int e2 = s + 2;

  GdpDesign g;
  g.modulus = mu;
  g.blocks = exgdp_triples(w1, s);
  if (static_cast<int>(g.blocks.size()) != e1) {
    throw std::logic_error("threshold GDP: wrong size-3 block count");
  }

  // Size-2 blocks {0, d} for every half-difference the triples leave
  // uncovered, in increasing order; mu/2 itself can never be used.
  std::vector<bool> covered(static_cast<size_t>(mu / 2 + 1), false);
  for (const BaseBlock& b : g.blocks) {
    for (int d : positive_differences(b)) {
      covered[static_cast<size_t>(std::min(d, mu - d))] = true;
    }
  }
  for (int d = 1; d < mu / 2; ++d) {
    if (!covered[static_cast<size_t>(d)]) g.blocks.push_back({0, d});
  }

  if (g.count_size2() != e2) {
    throw std::logic_error("threshold GDP: wrong size-2 block count");
  }
  for (int d : {1, 2, mu / 2 - 1}) {
    if (std::find(g.blocks.begin(), g.blocks.end(), BaseBlock{0, d}) == g.blocks.end()) {
      throw std::logic_error("threshold GDP: mandatory pair {0," + std::to_string(d) +
                             "} missing");
    }
  }
  if (VerifyReport r = verify_gdp(g); !r.passed) {
    throw std::logic_error("build_exgdp produced an invalid design: " + r.failure);
  }
  return g;
}

std::vector<OrderedTriple> skolem_sts(int w1) {
  if (w1 < 1) throw invalid_input("skolem_sts needs w1 >= 1");
  const int u = 2 * w1 + 1;
  auto enc = [u](int x, int j) { return j * u + ((x % u) + u) % u; };

  std::vector<OrderedTriple> triples;
  triples.reserve(static_cast<size_t>(u) * static_cast<size_t>(3 * w1 + 1));
  for (int i = 0; i < u; ++i) {
    triples.push_back({{enc(i, 0), enc(i, 1), enc(i, 2)}});
  }
  for (int x = 1; x <= w1; ++x) {
    for (int h = 0; h < 3; ++h) {
      for (int g = 0; g < u; ++g) {
        triples.push_back({{enc(g, h), enc(2 * x + g, h), enc(x + g, (h + 1) % 3)}});
      }
    }
  }
  return triples;
}

std::string format_gdp(const GdpDesign& g) {
  std::string out = std::to_string(g.modulus) + ":";
  for (const BaseBlock& b : g.blocks) {
    out += ' ';
    out += block_str(b);
  }
  return out;
}

}  // namespace ccc
