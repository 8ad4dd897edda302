#include "ccc/codes.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "ccc/bounds.hpp"
#include "ccc/errors.hpp"

namespace ccc {

namespace {

bool row_has_composition(const std::vector<uint8_t>& row, const Composition& c, int q) {
  std::vector<long long> hist(static_cast<size_t>(q), 0);
  for (uint8_t v : row) {
    if (v >= q) return false;
    hist[v]++;
  }
  for (int i = 1; i < q; ++i) {
    if (hist[static_cast<size_t>(i)] != c.part(i - 1)) return false;
  }
  return true;
}

Code verified_or_throw(Code code) {
  if (VerifyReport r = verify_code(code); !r.passed) {
    throw std::logic_error("constructed code failed verification: " + r.failure);
  }
  return code;
}

}  // namespace

VerifyReport verify_code(const Code& c) {
  if (c.q < 2) return VerifyReport::fail("alphabet must have at least two symbols");
  if (c.q != c.declared.alphabet()) {
    return VerifyReport::fail("alphabet size does not match the declared composition");
  }
  const int M = c.size();
  const int d_decl = c.declared_distance();

  std::vector<bool> comp_ok(static_cast<size_t>(M), true);
  std::string first_failure;
  for (int r = 0; r < M; ++r) {
    const auto& row = c.rows[static_cast<size_t>(r)];
    if (static_cast<int>(row.size()) != c.n) {
      return VerifyReport::fail("row " + std::to_string(r) + " has wrong length");
    }
    if (!row_has_composition(row, c.declared, c.q)) {
      comp_ok[static_cast<size_t>(r)] = false;
      if (first_failure.empty()) {
        first_failure = "row " + std::to_string(r) + " does not have composition " +
                        c.declared.str();
      }
    }
  }

  int min_dist = d_decl;  // vacuous for fewer than two rows
  bool have_pair = false;
  for (int a = 0; a < M; ++a) {
    for (int b = a + 1; b < M; ++b) {
      const auto& u = c.rows[static_cast<size_t>(a)];
      const auto& v = c.rows[static_cast<size_t>(b)];
      int shared = 0, equal_shared = 0, dist = 0, bad_col = -1;
      for (int x = 0; x < c.n; ++x) {
        const uint8_t ux = u[static_cast<size_t>(x)], vx = v[static_cast<size_t>(x)];
        if (ux != vx) ++dist;
        if (ux != 0 && vx != 0) {
          ++shared;
          if (ux == vx) ++equal_shared;
          if ((shared == 2 || ux == vx) && bad_col < 0) bad_col = x;
        }
      }
      const bool c1c2 = shared <= 1 && equal_shared == 0;
      if (comp_ok[static_cast<size_t>(a)] && comp_ok[static_cast<size_t>(b)] &&
          c1c2 != (dist >= d_decl)) {
        // The characterization and the raw distance must agree on
        // constant-composition rows; disagreement means a bug here.
        throw std::logic_error("distance characterization mismatch on rows " +
                               std::to_string(a) + "," + std::to_string(b));
      }
      if (!have_pair || dist < min_dist) min_dist = dist;
      have_pair = true;
      if (!c1c2 && first_failure.empty()) {
        first_failure = "rows " + std::to_string(a) + " and " + std::to_string(b) +
                        (equal_shared > 0 ? " repeat a symbol in column "
                                          : " share supports at column ") +
                        std::to_string(bad_col);
      }
    }
  }

  if (!first_failure.empty()) return VerifyReport::fail(first_failure, min_dist);
  return VerifyReport::pass(min_dist);
}

Code packing_to_code(const BalancedPacking& p) {
  if (VerifyReport r = verify_t1_t2(p); !r.passed) {
    throw invalid_input("packing fails (T1)/(T2): " + r.failure);
  }
  Code code;
  code.q = p.arity + 1;
  code.n = static_cast<int>(p.tuples.size());
  code.declared = p.declared;
  code.rows.assign(static_cast<size_t>(p.modulus),
                   std::vector<uint8_t>(static_cast<size_t>(code.n), 0));
  for (int col = 0; col < code.n; ++col) {
    const OrderedTriple& t = p.tuples[static_cast<size_t>(col)];
    for (int i = 0; i < p.arity; ++i) {
      if (t[static_cast<size_t>(i)] == kNoSlot) continue;
      code.rows[static_cast<size_t>(t[static_cast<size_t>(i)])][static_cast<size_t>(col)] =
          static_cast<uint8_t>(i + 1);
    }
  }
  return code;
}

Code lengthen(const Code& c, int n_target) {
  if (n_target < c.n) throw invalid_input("lengthen cannot shorten a code");
  Code out = c;
  out.n = n_target;
  for (auto& row : out.rows) row.resize(static_cast<size_t>(n_target), 0);
  return out;
}

Code refine_code(const Code& coarse_code, const Composition& target,
                 const RefinementWitness& witness) {
  const Composition& coarse = coarse_code.declared;
  if (static_cast<int>(witness.size()) != coarse.num_parts()) {
    throw invalid_input("witness group count does not match the coarse composition");
  }
  std::vector<bool> used(static_cast<size_t>(target.num_parts()), false);
  for (int j = 0; j < coarse.num_parts(); ++j) {
    long long sum = 0;
    for (int i : witness[static_cast<size_t>(j)]) {
      if (i < 0 || i >= target.num_parts() || used[static_cast<size_t>(i)]) {
        throw invalid_input("witness is not a partition of the fine parts");
      }
      used[static_cast<size_t>(i)] = true;
      sum += target.part(i);
    }
    if (sum != coarse.part(j)) {
      throw invalid_input("witness group " + std::to_string(j) +
                          " does not sum to the coarse part");
    }
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw invalid_input("witness leaves fine parts unassigned");
  }
  RefinementWitness groups = witness;  // fine symbols are assigned in rank order
  for (auto& g : groups) std::sort(g.begin(), g.end());

  Code out;
  out.q = target.alphabet();
  out.n = coarse_code.n;
  out.declared = target;
  out.rows.reserve(coarse_code.rows.size());
  for (const auto& row : coarse_code.rows) {
    std::vector<uint8_t> fine_row(static_cast<size_t>(out.n), 0);
    std::vector<int> next_in_group(witness.size(), 0);   // fine index within group
    std::vector<int> left_of_symbol(witness.size(), 0);  // positions left for it
    for (int x = 0; x < out.n; ++x) {
      const uint8_t sym = row[static_cast<size_t>(x)];
      if (sym == 0) continue;
      const size_t j = static_cast<size_t>(sym - 1);
      if (j >= witness.size()) throw invalid_input("row symbol outside the coarse alphabet");
      auto& cursor = next_in_group[j];
      auto& left = left_of_symbol[j];
      if (left == 0) {
        if (cursor >= static_cast<int>(groups[j].size())) {
          throw invalid_input("row has more coarse-symbol positions than the witness allows");
        }
        left = target.part(groups[j][static_cast<size_t>(cursor)]);
        ++cursor;
      }
      fine_row[static_cast<size_t>(x)] =
          static_cast<uint8_t>(groups[j][static_cast<size_t>(cursor - 1)] + 1);
      --left;
    }
    out.rows.push_back(std::move(fine_row));
  }
  return out;
}

Code construct_ternary(const Composition& c, int n) {
  if (c.num_parts() != 2) throw invalid_input("construct_ternary needs two parts");
  const int w1 = c.part(0), w2 = c.part(1);
  const long long threshold = nccc_lower(c);  // 2*w1*w2 + w2
  if (n < threshold) {
    throw unsupported_parameters("length " + std::to_string(n) +
                                 " is below the ternary stabilization length " +
                                 std::to_string(threshold));
  }
  const int M = n / w1;

  Code code;
  code.q = 3;
  code.declared = c;
  code.rows.assign(static_cast<size_t>(M), {});
  auto add_column = [&](int row1, int row2) {  // row2 < 0: symbol-1 singleton
    for (int r = 0; r < M; ++r) {
      uint8_t sym = 0;
      if (r == row1) sym = 1;
      if (r == row2) sym = 2;
      code.rows[static_cast<size_t>(r)].push_back(sym);
    }
  };
  auto add_single2 = [&](int row2) {
    for (int r = 0; r < M; ++r) {
      code.rows[static_cast<size_t>(r)].push_back(r == row2 ? 2 : 0);
    }
  };

  if (M >= 2 * w2 + 1) {
    // Cyclic core of length M*w1: one orbit per difference 1..w2 plus
    // w1-w2 singleton orbits.
    for (int d = 1; d <= w2; ++d) {
      for (int i = 0; i < M; ++i) add_column(i, (i + d) % M);
    }
    for (int t = 0; t < w1 - w2; ++t) {
      for (int i = 0; i < M; ++i) add_column(i, -1);
    }
  } else {
    // Threshold core (M = 2*w2, length 2*w1*w2 + w2): full orbits for
    // differences below w2, half an orbit at w2, and singleton columns
    // topping each row up to its weights.
    for (int d = 1; d < w2; ++d) {
      for (int i = 0; i < M; ++i) add_column(i, (i + d) % M);
    }
    for (int i = 0; i < w2; ++i) add_column(i, i + w2);
    for (int a = 0; a < M; ++a) {
      const int sigma1 = w1 - w2 + (a < w2 ? 0 : 1);
      for (int t = 0; t < sigma1; ++t) add_column(a, -1);
    }
    for (int a = 0; a < w2; ++a) add_single2(a);
  }

  code.n = static_cast<int>(code.rows.empty() ? 0 : code.rows.front().size());
  code = lengthen(code, n);
  if (a3_exact(n, c) != M) {
    throw std::logic_error("ternary construction size disagrees with the exact formula");
  }
  return code;
}

Code construct_quaternary(const Composition& c, int n) {
  if (c.num_parts() != 3) throw invalid_input("construct_quaternary needs three parts");
  const int w1 = c.part(0), w2 = c.part(1), w3 = c.part(2);

  if (w1 >= w2 + w3) {
    // Two nonzero symbols suffice structurally: build the coarse ternary
    // code and split its second symbol class.
    const Composition coarse({w1, w2 + w3});
    Code base = construct_ternary(coarse, n);
    return refine_code(base, c, RefinementWitness{{0}, {1, 2}});
  }

  const int s = 2 * w1 - w2 - w3;
  const int mu = 6 * w1 - 4 * s;
  const bool open_pair = (w1 == 4 || w1 == 5) && s == 2;
  const long long threshold = open_pair ? static_cast<long long>(mu + 1) * w1
                                        : nccc_lower(c);
  if (n < threshold) {
    throw unsupported_parameters(
        open_pair ? "no threshold construction for (w1, s) = (" + std::to_string(w1) +
                        ", 2); supported lengths start at " + std::to_string(threshold)
                  : "length " + std::to_string(n) + " is below the stabilization length " +
                        std::to_string(threshold));
  }

  const int M = n / w1;
  BalancedPacking packing;
  if (M >= mu + 1) {
    if (s == 0 && w1 % 4 >= 2 && M == 6 * w1 + 2) {
      // The one size the GDP recipe cannot reach for equal weights.
      packing = equal_weight_packing(w1);
    } else {
      packing = gdp_to_packing(build_gdp(M, w1 - s, s), c);
    }
  } else {
    packing = mu_packing(c);  // M == mu here
  }
  return lengthen(packing_to_code(packing), n);
}

Code construct_optimal(const Composition& c, int n) {
  const NcccAnswer answer = nccc_exact(c);
  if (answer.status != NcccStatus::exact) {
    std::string msg = "no optimal construction known for " + c.str() + " (" +
                      to_string(answer.status) + ", lower bound " +
                      std::to_string(answer.lower);
    if (answer.upper) msg += ", optimal from " + std::to_string(*answer.upper);
    throw unsupported_parameters(msg + ")");
  }
  if (n < answer.lower) {
    throw unsupported_parameters("length " + std::to_string(n) +
                                 " is below the stabilization length " +
                                 std::to_string(answer.lower) + " of " + c.str());
  }

  if (c.num_parts() == 1) {
    const int w1 = c.part(0);
    const int M = n / w1;
    Code code;
    code.q = 2;
    code.n = n;
    code.declared = c;
    code.rows.assign(static_cast<size_t>(M), std::vector<uint8_t>(static_cast<size_t>(n), 0));
    for (int r = 0; r < M; ++r) {
      for (int t = 0; t < w1; ++t) code.rows[static_cast<size_t>(r)][static_cast<size_t>(r * w1 + t)] = 1;
    }
    return verified_or_throw(std::move(code));
  }
  if (c.num_parts() == 2) return verified_or_throw(construct_ternary(c, n));
  if (c.num_parts() == 3) return verified_or_throw(construct_quaternary(c, n));

  const DerivedParams d = derived_params(c);
  Composition coarse = d.lambda == 2
                           ? Composition({c.part(0), static_cast<int>(d.w - d.w1)})
                           : *reduce_to_three(c);  // exactness guarantees a split
  auto witness = is_refinement(c, coarse);
  if (!witness) throw std::logic_error("reduction produced a non-refinement");
  Code base = d.lambda == 2 ? construct_ternary(coarse, n) : construct_quaternary(coarse, n);
  return verified_or_throw(refine_code(base, c, *witness));
}

std::string format_code(const Code& c) {
  std::string out = "q " + std::to_string(c.q) + " n " + std::to_string(c.n) + " M " +
                    std::to_string(c.size()) + " d " + std::to_string(c.declared_distance()) +
                    "\ncomp " + c.declared.str() + "\n";
  for (const auto& row : c.rows) {
    for (size_t x = 0; x < row.size(); ++x) {
      if (x) out += ' ';
      out += std::to_string(static_cast<int>(row[x]));
    }
    out += '\n';
  }
  return out;
}

namespace {

// Strict line splitter: every line must end in '\n', no stragglers.
std::vector<std::string_view> strict_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const size_t nl = text.find('\n');
    if (nl == std::string_view::npos) throw invalid_input("unterminated final line");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t pos = 0;
  while (pos <= line.size()) {
    const size_t sp = line.find(' ', pos);
    toks.push_back(line.substr(pos, sp == std::string_view::npos ? std::string_view::npos
                                                                 : sp - pos));
    if (sp == std::string_view::npos) break;
    pos = sp + 1;
  }
  return toks;
}

long long parse_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
    throw invalid_input("bad integer token '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Code parse_code(std::string_view text) {
  const auto lines = strict_lines(text);
  if (lines.size() < 2) throw invalid_input("code file needs a header and a comp line");

  const auto head = split_tokens(lines[0]);
  if (head.size() != 8 || head[0] != "q" || head[2] != "n" || head[4] != "M" ||
      head[6] != "d") {
    throw invalid_input("header must be 'q <q> n <n> M <M> d <d>'");
  }
  const long long q = parse_int(head[1]), n = parse_int(head[3]), M = parse_int(head[5]),
                  d = parse_int(head[7]);
  if (q < 2 || q > 255 || n < 0 || M < 0) throw invalid_input("header values out of range");

  const auto comp_line = split_tokens(lines[1]);
  if (comp_line.size() != 2 || comp_line[0] != "comp") {
    throw invalid_input("second line must be 'comp <w1,w2,...>'");
  }
  Composition declared = Composition::parse(comp_line[1]);
  if (declared.str() != comp_line[1]) throw invalid_input("composition must be normalized");
  if (declared.alphabet() != q) throw invalid_input("q does not match the composition");
  if (d != 2 * declared.total_weight() - 1) {
    throw invalid_input("d must equal 2w-1 for the declared composition");
  }
  if (static_cast<long long>(lines.size()) != M + 2) {
    throw invalid_input("expected exactly M codeword lines");
  }

  Code code;
  code.q = static_cast<int>(q);
  code.n = static_cast<int>(n);
  code.declared = std::move(declared);
  for (size_t r = 2; r < lines.size(); ++r) {
    const auto toks = split_tokens(lines[r]);
    if (static_cast<long long>(toks.size()) != n) {
      throw invalid_input("row " + std::to_string(r - 2) + " must have n symbols");
    }
    std::vector<uint8_t> row;
    row.reserve(toks.size());
    for (auto tok : toks) {
      const long long v = parse_int(tok);
      if (v < 0 || v >= q) throw invalid_input("symbol out of range");
      row.push_back(static_cast<uint8_t>(v));
    }
    code.rows.push_back(std::move(row));
  }
  return code;
}

}  // namespace ccc
