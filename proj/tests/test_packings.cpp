#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "ccc/bounds.hpp"
#include "ccc/errors.hpp"
#include "ccc/packings.hpp"
#include "paper_data.hpp"

using namespace ccc;

namespace {

int support_size(const OrderedTriple& t) {
  int n = 0;
  for (int v : t.slot) n += v != kNoSlot;
  return n;
}

std::map<int, long long> support_histogram(const BalancedPacking& p) {
  std::map<int, long long> h;
  for (const auto& t : p.tuples) h[support_size(t)]++;
  return h;
}

std::vector<Composition> admissible_mu_compositions(int max_w1) {
  std::vector<Composition> out;
  for (int w1 = 3; w1 <= max_w1; ++w1) {
    for (int w2 = w1; w2 >= 1; --w2) {
      for (int w3 = w2; w3 >= 1; --w3) {
        const int s = 2 * w1 - w2 - w3;
        if (s < 2 || s >= w1) continue;
        if ((w1 == 4 || w1 == 5) && s == 2) continue;
        out.push_back(Composition({w1, w2, w3}));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("orbits translate non-empty slots") {
  auto orb = orbit({{0, 2, kNoSlot}}, 10);
  REQUIRE(orb.size() == 10);
  CHECK(orb[1] == OrderedTriple{{1, 3, kNoSlot}});
  CHECK(orb[9] == OrderedTriple{{9, 1, kNoSlot}});

  orb = orbit({{0, 1, 6}}, 10);
  CHECK(orb[4] == OrderedTriple{{4, 5, 0}});

  orb = orbit({{kNoSlot, kNoSlot, 0}}, 3);
  CHECK(orb == std::vector<OrderedTriple>{
                   {{kNoSlot, kNoSlot, 0}}, {{kNoSlot, kNoSlot, 1}}, {{kNoSlot, kNoSlot, 2}}});
}

TEST_CASE("the published 18-tuple packing satisfies (T1) and (T2)") {
  CHECK(verify_t1_t2(paper_data::example1_packing()).passed);
}

TEST_CASE("a doubled difference shows up as a duplicated pair") {
  BalancedPacking p{10, 3, orbit({{0, 1, 6}}, 10), Composition({1, 1, 1})};
  auto r = verify_t1_t2(p);
  CHECK(!r.passed);
  CHECK(r.failure.find("pair") != std::string::npos);
}

TEST_CASE("deleting any single tuple breaks positional balance") {
  const BalancedPacking good = paper_data::example1_packing();
  for (size_t i = 0; i < good.tuples.size(); ++i) {
    BalancedPacking damaged = good;
    damaged.tuples.erase(damaged.tuples.begin() + static_cast<long>(i));
    CHECK(!verify_t1_t2(damaged).passed);
  }
}

TEST_CASE("gdp_to_packing on worked examples") {
  auto p = gdp_to_packing(build_gdp(9, 1, 1), Composition({2, 2, 1}));
  CHECK(p.tuples.size() == 18);
  CHECK(verify_t1_t2(p).passed);
  auto hist = support_histogram(p);
  const auto dist = block_distribution(9, Composition({2, 2, 1}), false);
  CHECK(hist[3] == dist.count_lambda);
  CHECK(hist[2] == dist.count_lambda_minus_1);

  p = gdp_to_packing(GdpDesign{7, {{0, 1, 3}}}, Composition({1, 1, 1}));
  CHECK(p.tuples.size() == 7);
  CHECK(verify_t1_t2(p).passed);

  CHECK_THROWS_AS(gdp_to_packing(build_gdp(9, 1, 1), Composition({2, 1, 1})),
                  invalid_input);
}

TEST_CASE("gdp_to_packing output size is always M * w1") {
  for (int e1 = 0; e1 <= 4; ++e1) {
    for (int e2 = (e1 ? 0 : 1); e2 <= 4; ++e2) {
      const int w1 = e1 + e2;
      for (int w2 = w1; w2 >= 1; --w2) {
        const int w3 = 2 * e1 + e2 - w2;
        if (w3 < 1 || w3 > w2 || w3 < e1) continue;
        const int M = 6 * e1 + 2 * e2 + 1;
        if (e1 % 4 >= 2 && e2 == 0) continue;
        auto p = gdp_to_packing(build_gdp(M, e1, e2), Composition({w1, w2, w3}));
        CHECK(p.tuples.size() == static_cast<size_t>(M) * w1);
        CHECK(verify_t1_t2(p).passed);
      }
    }
  }
}

TEST_CASE("equal-weight packing reproduces the published w1 = 2 end state") {
  auto p = equal_weight_packing(2);
  CHECK(p.modulus == 14);
  REQUIRE(p.tuples.size() == 28);
  CHECK(verify_t1_t2(p).passed);

  auto expected = paper_data::reordered_steiner_w1_2();
  auto got = p.tuples;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("equal-weight packings are optimal triple packings (w1 <= 20)") {
  for (int w1 = 1; w1 <= 20; ++w1) {
    auto p = equal_weight_packing(w1);
    CHECK(p.modulus == 6 * w1 + 2);
    CHECK(p.tuples.size() == static_cast<size_t>(6 * w1 * w1 + 2 * w1));
    CHECK(static_cast<long long>(p.tuples.size()) == packing_number_d3(6 * w1 + 2));
    CHECK(verify_t1_t2(p).passed);
    for (const auto& t : p.tuples) CHECK(support_size(t) == 3);
  }
}

TEST_CASE("threshold packing reproduces the published modification list") {
  auto p = mu_packing(Composition({3, 2, 2}));
  CHECK(p.modulus == 10);
  REQUIRE(p.tuples.size() == 32);
  CHECK(verify_t1_t2(p).passed);

  auto has = [&](OrderedTriple t) {
    return std::find(p.tuples.begin(), p.tuples.end(), t) != p.tuples.end();
  };
  // the two added tuples and the one rewritten tuple
  CHECK(has({{kNoSlot, 1, 0}}));
  CHECK(has({{kNoSlot, 4, 3}}));
  CHECK(has({{1, 3, 7}}));
  // a few of the emptied slots
  CHECK(has({{0, kNoSlot, 6}}));
  CHECK(has({{4, 5, kNoSlot}}));
  CHECK(has({{7, 8, kNoSlot}}));
  // their pre-modification forms are gone
  CHECK(!has({{0, 1, 6}}));
  CHECK(!has({{1, 3, kNoSlot}}));
  CHECK(!has({{4, 5, 0}}));

  auto hist = support_histogram(p);
  const auto dist = block_distribution(10, Composition({3, 2, 2}), true);
  CHECK(hist[3] == dist.count_lambda);
  CHECK(hist[2] == dist.count_lambda_minus_1);
}

TEST_CASE("threshold packing across every admissible composition (w1 <= 15)") {
  for (const Composition& c : admissible_mu_compositions(15)) {
    CAPTURE(c.str());
    const auto d = derived_params(c);
    auto p = mu_packing(c);
    REQUIRE(p.modulus == d.mu);
    const auto dist = block_distribution(d.mu, c, true);
    REQUIRE(static_cast<long long>(p.tuples.size()) == dist.n);
    CHECK(verify_t1_t2(p).passed);
    auto hist = support_histogram(p);
    CHECK(hist[3] == dist.count_lambda);
    CHECK(hist[2] == dist.count_lambda_minus_1);
  }
}

TEST_CASE("threshold packing rejections") {
  CHECK_THROWS_AS(mu_packing(Composition({4, 3, 3})), unsupported_parameters);
  CHECK_THROWS_AS(mu_packing(Composition({5, 4, 4})), unsupported_parameters);
  CHECK_THROWS_AS(mu_packing(Composition({2, 2, 1})), unsupported_parameters);  // s = 1
  CHECK_THROWS_AS(mu_packing(Composition({3, 3, 3})), unsupported_parameters);  // s = 0
}

TEST_CASE("constructions are deterministic") {
  CHECK(equal_weight_packing(3).tuples == equal_weight_packing(3).tuples);
  CHECK(mu_packing(Composition({3, 2, 2})).tuples == mu_packing(Composition({3, 2, 2})).tuples);
  auto g = build_gdp(15, 1, 3);
  CHECK(gdp_to_packing(g, Composition({4, 4, 1})).tuples ==
        gdp_to_packing(g, Composition({4, 4, 1})).tuples);
}

TEST_CASE("packing text form") {
  BalancedPacking p{3, 3, {{{0, 1, kNoSlot}}, {{2, kNoSlot, 1}}}, Composition({1, 1, 1})};
  CHECK(format_packing(p) == "3 3 2\n0 1 *\n2 * 1\n");
}
