#include "ccc/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "ccc/errors.hpp"

namespace ccc {

namespace {

// Partition searches are exhaustive; cap the alphabet so they stay at
// desk scale instead of going silently slow.
constexpr int kMaxSearchParts = 15;  // q <= 16

}  // namespace

Composition::Composition(std::vector<int> raw) {
  for (int v : raw) {
    if (v < 0) throw invalid_input("composition parts must be non-negative");
  }
  std::erase(raw, 0);
  if (raw.empty()) throw invalid_input("composition needs at least one positive part");
  std::sort(raw.begin(), raw.end(), std::greater<>());
  parts_ = std::move(raw);
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> raw;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
      throw invalid_input("bad composition token '" + std::string(tok) + "'");
    }
    raw.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(raw));
}

long long Composition::total_weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string Composition::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

DerivedParams derived_params(const Composition& c) {
  DerivedParams d{};
  d.w = c.total_weight();
  d.w1 = c.largest_part();
  d.lambda = (d.w + d.w1 - 1) / d.w1;
  d.s = d.lambda * d.w1 - d.w;
  d.mu = d.lambda * (d.lambda - 1) * d.w1 - 2 * (d.lambda - 1) * d.s;
  return d;
}

namespace {

// First valid assignment of fine parts to coarse groups in lexicographic
// order of the assignment vector; capacity pruning keeps it cheap.
bool assign(const std::vector<int>& fine, const std::vector<int>& coarse,
            std::vector<int>& load, std::vector<int>& pick, size_t i) {
  if (i == fine.size()) {
    for (size_t g = 0; g < coarse.size(); ++g) {
      if (load[g] != coarse[g]) return false;
    }
    return true;
  }
  for (size_t g = 0; g < coarse.size(); ++g) {
    if (load[g] + fine[i] > coarse[g]) continue;
    load[g] += fine[i];
    pick[i] = static_cast<int>(g);
    if (assign(fine, coarse, load, pick, i + 1)) return true;
    load[g] -= fine[i];
  }
  return false;
}

}  // namespace

std::optional<RefinementWitness> is_refinement(const Composition& fine,
                                               const Composition& coarse) {
  if (fine.num_parts() <= coarse.num_parts()) {
    throw invalid_input("refinement requires strictly more parts on the fine side");
  }
  if (fine.num_parts() > kMaxSearchParts) {
    throw unsupported_parameters("partition search limited to alphabets q <= 16");
  }
  if (fine.total_weight() != coarse.total_weight()) return std::nullopt;

  std::vector<int> load(static_cast<size_t>(coarse.num_parts()), 0);
  std::vector<int> pick(static_cast<size_t>(fine.num_parts()), -1);
  if (!assign(fine.parts(), coarse.parts(), load, pick, 0)) return std::nullopt;

  RefinementWitness witness(static_cast<size_t>(coarse.num_parts()));
  for (int i = 0; i < fine.num_parts(); ++i) {
    witness[static_cast<size_t>(pick[static_cast<size_t>(i)])].push_back(i);
  }
  return witness;
}

std::optional<Composition> reduce_to_three(const Composition& c) {
  const DerivedParams d = derived_params(c);
  if (d.lambda != 3) {
    throw unsupported_parameters("reduce_to_three needs lambda = 3, got lambda = " +
                                 std::to_string(d.lambda));
  }
  if (c.num_parts() < 3) throw invalid_input("reduce_to_three needs at least three parts");
  if (c.num_parts() > kMaxSearchParts) {
    throw unsupported_parameters("partition search limited to alphabets q <= 16");
  }

  const auto& parts = c.parts();
  const int w1 = c.largest_part();
  const size_t k = parts.size();
  // Two-group split of parts 2..q-1, assignment vector explored
  // lexicographically (group 0 first).
  std::vector<int> pick(k, 0);
  long long sum[2] = {0, 0};
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == k) return sum[0] >= 1 && sum[1] >= 1;
    for (int g = 0; g < 2; ++g) {
      if (sum[g] + parts[i] > w1) continue;
      sum[g] += parts[i];
      pick[i] = g;
      if (go(i + 1)) return true;
      sum[g] -= parts[i];
    }
    return false;
  };
  if (!go(1)) return std::nullopt;
  return Composition({w1, static_cast<int>(sum[0]), static_cast<int>(sum[1])});
}

}  // namespace ccc
