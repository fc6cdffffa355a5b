#include <doctest.h>

#include "relrole/report.hpp"
#include "support.hpp"

using namespace relrole;
using namespace relrole::testing;

namespace {
  WeightMatrix wm(std::vector<std::vector<char const*>> const& rows) {
    WeightMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = q(rows[i][j]);
      }
    }
    return m;
  }

  bool leq(WeightMatrix const& a, WeightMatrix const& b) {
    for (std::size_t t = 0; t < a.values().size(); ++t) {
      if (a.values()[t] > b.values()[t]) {
        return false;
      }
    }
    return true;
  }

  Rational max_entry(WeightMatrix const& a) {
    Rational m = 0;
    for (auto const& v : a.values()) {
      m = std::max(m, v);
    }
    return m;
  }

  std::vector<WeightMatrix> monks_gens() {
    return monks().matrices();
  }
}  // namespace

TEST_CASE("max-times product") {
  auto n = monks().relation(1).matrix;
  CHECK(max_times(n, n) == wm({{"0.0475", "0.05"}, {"0.038", "0.0475"}}));
  CHECK(round_matrix(max_times(n, n), 2) == wm({{"0.05", "0.05"}, {"0.04", "0.05"}}));
  CHECK(max_times(n, WeightMatrix::identity(2)) == n);
  CHECK(max_times(WeightMatrix::identity(2), n) == n);
  CHECK_THROWS_AS(max_times(n, WeightMatrix(3)), InputError);
}

TEST_CASE("round_matrix") {
  auto a = wm({{"0.0475", "0.038"}, {"0.00171875", "1"}});
  CHECK(round_matrix(a, 2) == wm({{"0.05", "0.04"}, {"0", "1"}}));
  CHECK(round_matrix(a, 2, RoundingRule::half_up) == wm({{"0.05", "0.04"}, {"0", "1"}}));
  CHECK(round_matrix(a, 12) == a);
}

TEST_CASE("max-times agrees with a naive implementation") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 4;
    auto        a = random_weight(rng, n, 1 + trial % 13);
    auto        b = random_weight(rng, n, 7);
    CHECK(max_times(a, b) == naive_max_times(a, b));
  }
}

TEST_CASE("max-times properties") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_weight(rng, 3, 9);
    auto b = random_weight(rng, 3, 10);
    auto c = random_weight(rng, 3, 7);
    // associativity, exact
    CHECK(max_times(max_times(a, b), c) == max_times(a, max_times(b, c)));
    // monotonicity: a <= a + something, b <= b + something
    WeightMatrix a2 = a, b2 = b;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        a2(i, j) = std::max(a(i, j), c(i, j));
        b2(i, j) = std::max(b(i, j), c(j, i));
      }
    }
    CHECK(leq(max_times(a, b), max_times(a2, b2)));
    auto ab = max_times(a, b);
    CHECK(ab.in_unit_interval());
    CHECK(max_entry(ab) <= std::min(max_entry(a), max_entry(b)));
    // Boolean specialization
    auto x = random_bool(rng, 4, 0.4), y = random_bool(rng, 4, 0.4);
    CHECK(max_times(WeightMatrix(x), WeightMatrix(y)) == WeightMatrix(bool_product(x, y)));
  }
}

TEST_CASE("monks truncated semigroup with two-digit rounding") {
  auto s = generate_truncated(monks_gens(), 18, RoundingPolicy::per_step(2));
  REQUIRE(s.size() == 10);
  std::vector<std::string> names{"P", "N"};
  std::vector<std::string> words;
  for (std::size_t e = 0; e < s.size(); ++e) {
    words.push_back(word_label(s.word(e), names));
  }
  CHECK(words
        == std::vector<std::string>{"P", "N", "PP", "PN", "NP", "NN", "PPP", "PPN", "NPP", "PPPP"});
  CHECK(s.element(2) == wm({{"0.03", "0.06"}, {"0.03", "0.06"}}));
  CHECK(s.element(3) == wm({{"0.05", "0.05"}, {"0.05", "0.05"}}));
  CHECK(s.element(4) == wm({{"0.03", "0.06"}, {"0.02", "0.05"}}));
  CHECK(s.element(5) == wm({{"0.05", "0.05"}, {"0.04", "0.05"}}));
  CHECK(s.element(6) == wm({{"0.01", "0.02"}, {"0.01", "0.02"}}));
  CHECK(s.element(7) == wm({{"0.01", "0.01"}, {"0.01", "0.01"}}));
  CHECK(s.element(8) == wm({{"0.01", "0.02"}, {"0.01", "0.01"}}));
  CHECK(s.element(9).is_zero());
  CHECK(s.zero_index() == 9u);
  CHECK_FALSE(s.zero_is_sink());

  auto rep = truncated_report(s);
  CHECK(rep.all == 10);
  CHECK(rep.non_generator == 8);
  CHECK(rep.non_generator_nonzero == 7);
  CHECK(rep.census == std::vector<std::size_t>{2, 4, 3, 1});
  CHECK(rep.stabilization_depth == 4);
  CHECK(rep.zero_reached);

  // Same elements from k = 4 on.
  for (std::size_t k = 4; k <= 18; ++k) {
    CHECK(generate_truncated(monks_gens(), k, RoundingPolicy::per_step(2)).elements()
          == s.elements());
  }
  // Zero absorbs, every 4-fold product is zero.
  for (std::size_t x = 0; x < s.size(); ++x) {
    CHECK(s.product(x, 9) == 9);
    CHECK(s.product(9, x) == 9);
  }
  for (unsigned w = 0; w < 16; ++w) {
    Word word{w & 1U, (w >> 1) & 1U, (w >> 2) & 1U, (w >> 3) & 1U};
    CHECK(s.evaluate(word) == 9);
  }
}

TEST_CASE("monks with the half-up rule") {
  // Half-up keeps 0.005 as 0.01, so a nonzero 4-fold product survives.
  auto s = generate_truncated(monks_gens(),
                              18,
                              RoundingPolicy::per_step(2, RoundingRule::half_up));
  CHECK(s.size() == 12);
  CHECK(s.find(wm({{"0", "0.01"}, {"0", "0.01"}})).has_value());
}

TEST_CASE("monks without rounding") {
  // distinct matrices of words of length <= k, k = 1..18
  std::vector<std::size_t> distinct{2,   6,   14,  29,  53,   88,   137,  201,  284,
                                    386, 512, 661, 839, 1044, 1283, 1553, 1862, 2206};
  for (std::size_t k = 1; k <= distinct.size(); ++k) {
    auto s   = generate_truncated(monks_gens(), k, RoundingPolicy::none());
    auto rep = truncated_report(s);
    CHECK(rep.all - (rep.zero_sink ? 1 : 0) == distinct[k - 1]);
    CHECK_FALSE(rep.zero_reached);
  }
  auto s   = generate_truncated(monks_gens(), 18, RoundingPolicy::none());
  auto rep = truncated_report(s);
  CHECK(rep.census
        == std::vector<std::size_t>{2,   4,   8,   15,  24,  35,  49,  64,  83,
                                    102, 126, 149, 178, 205, 239, 270, 309, 344});
  CHECK(rep.all == 2207);
  CHECK(rep.non_generator == 2205);
  CHECK(rep.non_generator_nonzero == 2204);
  CHECK(rep.zero_sink);
  CHECK(rep.stabilization_depth == 18);
}

TEST_CASE("k = 1 gives the generators and zero") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_weight(rng, 3, 10);
    auto b = trial % 2 ? a : random_weight(rng, 3, 10);
    auto s = generate_truncated({a, b}, 1, RoundingPolicy::per_step(1));
    std::size_t distinct = round_matrix(a, 1) == round_matrix(b, 1) ? 1 : 2;
    CHECK(s.size() == distinct + 1);
    CHECK(s.zero_is_sink());
    CHECK(s.product(0, 0) == *s.zero_index());
  }
}

TEST_CASE("truncation zeroes long products") {
  auto s = generate_truncated(monks_gens(), 2, RoundingPolicy::none());
  // P, N, PP, PN, NP, NN and the sink
  REQUIRE(s.size() == 7);
  CHECK(s.zero_is_sink());
  CHECK(s.length(6) == 3);
  CHECK(s.word(6).empty());
  CHECK(s.product(0, 1) == 3);
  CHECK(s.product(2, 0) == 6);
  CHECK(s.product(6, 0) == 6);
  CHECK(s.evaluate({0, 0, 0}) == 6);
  auto j = truncated_json(s, {"P", "N"});
  CHECK(j["zero_is_truncation_sink"] == true);
  CHECK(j["counts"]["all"] == 7);
}

TEST_CASE("invariants of truncated semigroups") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t  k      = 1 + trial % 6;
    unsigned     digits = trial % 3;
    auto         policy = trial % 4 == 3 ? RoundingPolicy::none() : RoundingPolicy::per_step(digits);
    std::vector<WeightMatrix> gens{random_weight(rng, 2 + trial % 2, 10),
                                   random_weight(rng, 2 + trial % 2, 10)};
    auto s = generate_truncated(gens, k, policy);
    for (std::size_t e = 0; e < s.size(); ++e) {
      CHECK(s.element(e).in_unit_interval());
      if (policy.mode == RoundingMode::per_step) {
        CHECK(round_matrix(s.element(e), digits) == s.element(e));
      }
      if (s.zero_index() == e && s.zero_is_sink()) {
        continue;
      }
      CHECK(s.length(e) <= k);
      CHECK(s.length(e) == s.word(e).size());
      CHECK(s.evaluate(s.word(e)) == e);
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        auto xy = s.product(x, y);
        REQUIRE(xy < s.size());
        if (s.length(x) + s.length(y) > k) {
          CHECK(xy == *s.zero_index());
        }
      }
    }
    // every (k+1)-fold product is zero
    Word w(k + 1, 0);
    auto z = s.evaluate(w);
    if (s.zero_index()) {
      CHECK(z == *s.zero_index());
    }
  }
}

TEST_CASE("Boolean generators reproduce the Boolean semigroup") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BoolMatrix> gens{random_bool(rng, 4, 0.35), random_bool(rng, 4, 0.35)};
    auto b = generate_semigroup(gens);
    std::size_t maxlen = 0;
    for (auto const& w : b.words()) {
      maxlen = std::max(maxlen, w.size());
    }
    std::size_t k = 2 * maxlen;
    auto t = generate_truncated({WeightMatrix(gens[0]), WeightMatrix(gens[1])},
                                k,
                                RoundingPolicy::none());
    CHECK_FALSE(t.zero_is_sink());
    REQUIRE(t.size() == b.size());
    std::vector<std::size_t> census(maxlen, 0);
    for (std::size_t e = 0; e < b.size(); ++e) {
      CHECK(t.element(e) == WeightMatrix(b.element(e)));
      CHECK(t.word(e) == b.word(e));
      ++census[b.word(e).size() - 1];
    }
    CHECK(truncated_report(t).census == census);
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        CHECK(t.product(x, y) == b.product(x, y));
      }
    }
  }
}

TEST_CASE("per-step rounding terminates without truncation") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<WeightMatrix> gens{random_weight(rng, 3, 20), random_weight(rng, 3, 20)};
    auto s   = generate_truncated(gens, 1000, RoundingPolicy::per_step(1));
    auto rep = truncated_report(s);
    CHECK(rep.stabilization_depth < 1000);
    CHECK_FALSE(s.zero_is_sink());
  }
}

TEST_CASE("truncated closure is deterministic across threads") {
  auto a = generate_truncated(monks_gens(), 14, RoundingPolicy::none(), {100000, 1, 1024});
  auto b = generate_truncated(monks_gens(), 14, RoundingPolicy::none(), {100000, 4, 1024});
  CHECK(truncated_json(a, {"P", "N"}).dump() == truncated_json(b, {"P", "N"}).dump());
}

TEST_CASE("truncated error paths") {
  auto gens = monks_gens();
  CHECK_THROWS_AS(generate_truncated(gens, 0, RoundingPolicy::none()), InputError);
  CHECK_THROWS_AS(generate_truncated({}, 3, RoundingPolicy::none()), InputError);
  CHECK_THROWS_AS(generate_truncated({gens[0], WeightMatrix(3)}, 3, RoundingPolicy::none()),
                  InputError);
  CHECK_THROWS_AS(generate_truncated({WeightMatrix{{2}}}, 3, RoundingPolicy::none()),
                  InputError);
  CHECK_THROWS_AS(generate_truncated(gens, 3, RoundingPolicy::per_step(13)), InputError);
  try {
    generate_truncated(gens, 18, RoundingPolicy::none(), {100, 1, 1024});
    FAIL("expected CapExceeded");
  } catch (CapExceeded const& e) {
    CHECK(e.elements_reached() == 101);
    CHECK(e.word_length() == 7);
  }
}

TEST_CASE("listing groups products by length") {
  auto s    = generate_truncated(monks_gens(), 18, RoundingPolicy::per_step(2));
  auto text = truncated_listing(s, {"P", "N"});
  CHECK(text.find("4-fold products") < text.find("3-fold products"));
  CHECK(text.find("NN = [[0.05, 0.05], [0.04, 0.05]]") != std::string::npos);
  CHECK(text.find("stabilization depth: 4") != std::string::npos);
  auto j = truncated_json(s, {"P", "N"});
  CHECK(j["counts"]["excluding_generators"] == 8);
  CHECK(j["stabilization_depth"] == 4);
  CHECK(j["elements"][5] == ordered_json::parse(R"([["0.05","0.05"],["0.04","0.05"]])"));
}
