#include "ccc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "ccc/bounds.hpp"
#include "ccc/errors.hpp"

namespace ccc {

namespace {

constexpr long long kCandidateBudget = 10'000'000;
constexpr int kMaxOracleLength = 64;  // supports fit a word

// Number of composition-c words of length n, saturating past the budget.
long long count_candidates(int n, const Composition& c) {
  long long words = 1;
  int used = 0;
  auto take = [&](int k) {  // words *= C(n - used, k), capped
    for (int i = 1; i <= k; ++i) {
      words = words * (n - used - k + i) / i;  // exact: consecutive binomials
      if (words > 4 * kCandidateBudget) return false;
    }
    used += k;
    return true;
  };
  for (int i = 0; i < c.num_parts(); ++i) {
    if (!take(c.part(i))) return 4 * kCandidateBudget + 1;
  }
  return words;
}

struct Word {
  std::vector<uint8_t> symbols;
  uint64_t support = 0;
};

// All composition-c words in lexicographic order.
void enumerate_words(int n, const Composition& c, std::vector<Word>& out) {
  std::vector<int> remaining(static_cast<size_t>(c.alphabet()), 0);
  remaining[0] = n - static_cast<int>(c.total_weight());
  for (int i = 1; i < c.alphabet(); ++i) remaining[static_cast<size_t>(i)] = c.part(i - 1);

  std::vector<uint8_t> word(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      Word w;
      w.symbols = word;
      for (int x = 0; x < n; ++x) {
        if (word[static_cast<size_t>(x)]) w.support |= uint64_t{1} << x;
      }
      out.push_back(std::move(w));
      return;
    }
    for (int sym = 0; sym < c.alphabet(); ++sym) {
      if (remaining[static_cast<size_t>(sym)] == 0) continue;
      remaining[static_cast<size_t>(sym)]--;
      word[static_cast<size_t>(pos)] = static_cast<uint8_t>(sym);
      self(self, pos + 1);
      remaining[static_cast<size_t>(sym)]++;
    }
    word[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0);
}

bool compatible(const Word& a, const Word& b) {
  uint64_t shared = a.support & b.support;
  const int overlap = std::popcount(shared);
  if (overlap >= 2) return false;
  if (overlap == 1) {
    const int col = std::countr_zero(shared);
    return a.symbols[static_cast<size_t>(col)] != b.symbols[static_cast<size_t>(col)];
  }
  return true;
}

// Least total of sum C(N_i,2) reachable from the current column
// occupancy when the code is extended to M rows; columns are capped at
// min(q-1, M) nonzeros.  Exceeding C(M,2) rules the extension out.
bool extension_feasible(const std::vector<int>& occupancy, long long rows_now,
                        long long M, long long w, int cap_q) {
  const long long cap = std::min<long long>(cap_q, M);
  long long add = (M - rows_now) * w;
  std::vector<long long> level_count(static_cast<size_t>(cap) + 1, 0);
  for (int o : occupancy) level_count[static_cast<size_t>(std::min<long long>(o, cap))]++;
  // Water-filling: raise the lowest columns first (convexity).
  long long pairs = 0;
  for (long long lvl = 0; lvl <= cap; ++lvl) {
    pairs += level_count[static_cast<size_t>(lvl)] * lvl * (lvl - 1) / 2;
  }
  for (long long lvl = 0; lvl < cap && add > 0; ++lvl) {
    const long long movable = std::min(add, level_count[static_cast<size_t>(lvl)]);
    // raising `movable` columns from lvl to lvl+1 costs lvl pairs each
    pairs += movable * lvl;
    level_count[static_cast<size_t>(lvl)] -= movable;
    level_count[static_cast<size_t>(lvl) + 1] += movable;
    add -= movable;
    if (movable > 0) lvl = -1;  // restart at the new lowest level
  }
  if (add > 0) return false;  // not enough column capacity at all
  return pairs <= M * (M - 1) / 2;
}

class CliqueSearch {
 public:
  CliqueSearch(const std::vector<Word>& words, int n, long long w, int cap_q,
               long long stop_at)
      : words_(words), w_(w), cap_q_(cap_q), stop_at_(stop_at),
        occupancy_(static_cast<size_t>(n), 0) {}

  void run() {
    if (words_.empty()) return;
    // Sound rooting: some optimal code contains the least word after
    // column sorting, so every maximal search starts there.
    std::vector<int> pool;
    push_word(0);
    for (size_t v = 1; v < words_.size(); ++v) {
      if (compatible(words_[0], words_[v])) pool.push_back(static_cast<int>(v));
    }
    best_update();
    extend(pool);
    pop_word(0);
  }

  long long best() const { return best_; }
  const std::vector<int>& best_clique() const { return best_clique_; }

 private:
  void push_word(int v) {
    chosen_.push_back(v);
    for (int x = 0; x < static_cast<int>(occupancy_.size()); ++x) {
      if (words_[static_cast<size_t>(v)].support >> x & 1) occupancy_[static_cast<size_t>(x)]++;
    }
  }
  void pop_word(int v) {
    chosen_.pop_back();
    for (int x = 0; x < static_cast<int>(occupancy_.size()); ++x) {
      if (words_[static_cast<size_t>(v)].support >> x & 1) occupancy_[static_cast<size_t>(x)]--;
    }
  }
  void best_update() {
    if (static_cast<long long>(chosen_.size()) > best_) {
      best_ = static_cast<long long>(chosen_.size());
      best_clique_ = chosen_;
    }
  }

  void extend(const std::vector<int>& pool) {
    if (best_ >= stop_at_) return;
    const long long here = static_cast<long long>(chosen_.size());
    if (here + static_cast<long long>(pool.size()) <= best_) return;
    if (!extension_feasible(occupancy_, here, best_ + 1, w_, cap_q_)) return;
    for (size_t pi = 0; pi < pool.size(); ++pi) {
      if (here + static_cast<long long>(pool.size() - pi) <= best_) return;
      if (best_ >= stop_at_) return;
      const int v = pool[pi];
      std::vector<int> next;
      next.reserve(pool.size() - pi);
      for (size_t pj = pi + 1; pj < pool.size(); ++pj) {
        if (compatible(words_[static_cast<size_t>(v)], words_[static_cast<size_t>(pool[pj])])) {
          next.push_back(pool[pj]);
        }
      }
      push_word(v);
      best_update();
      extend(next);
      pop_word(v);
    }
  }

  const std::vector<Word>& words_;
  long long w_;
  int cap_q_;
  long long stop_at_;
  std::vector<int> occupancy_;
  std::vector<int> chosen_;
  long long best_ = 0;
  std::vector<int> best_clique_;
};

}  // namespace

OracleResult exact_max_code(int q, int n, const Composition& c) {
  if (q < c.alphabet()) throw invalid_input("alphabet too small for the composition");
  if (n < 0) throw invalid_input("length must be non-negative");
  if (n > kMaxOracleLength) {
    throw unsupported_parameters("oracle lengths are capped at " +
                                 std::to_string(kMaxOracleLength));
  }
  const long long candidates = count_candidates(n, c);
  if (candidates > kCandidateBudget) {
    throw unsupported_parameters("candidate budget exceeded: > 10^7 words");
  }

  OracleResult result;
  if (n < c.total_weight()) {
    result.search_space = 0;  // no word fits
    return result;
  }

  std::vector<Word> words;
  words.reserve(static_cast<size_t>(candidates));
  enumerate_words(n, c, words);
  result.search_space = static_cast<long long>(words.size());

  // Upper bound: Johnson, tightened by the first column-counting failure.
  long long stop_at = johnson_upper(n, c);
  for (long long M = 1; M <= stop_at; ++M) {
    if (!feasibility_certificate(M, n, c)) {
      stop_at = M - 1;
      break;
    }
  }

  CliqueSearch search(words, n, c.total_weight(), c.num_parts(), stop_at);
  search.run();
  result.value = search.best();

  Code witness;
  witness.q = c.alphabet();
  witness.n = n;
  witness.declared = c;
  for (int v : search.best_clique()) witness.rows.push_back(words[static_cast<size_t>(v)].symbols);
  result.witness = std::move(witness);
  return result;
}

std::optional<int> empirical_nccc(const Composition& c, int n_max) {
  if (n_max < 1) throw invalid_input("n_max must be positive");
  if (count_candidates(n_max, c) > kCandidateBudget) {
    throw unsupported_parameters("candidate budget exceeded at n_max");
  }
  const int w1 = c.largest_part();
  std::optional<int> tail_start;
  for (int n = 1; n <= n_max; ++n) {
    const bool meets = exact_max_code(c.alphabet(), n, c).value == n / w1;
    if (meets && !tail_start) tail_start = n;
    if (!meets) tail_start.reset();
  }
  return tail_start;
}

}  // namespace ccc
