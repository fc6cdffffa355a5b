#include <doctest.h>

#include <fstream>
#include <sstream>

#include "relrole/io.hpp"
#include "relrole/partition.hpp"
#include "support.hpp"

using namespace relrole;
using namespace relrole::testing;

namespace {
  template <typename F>
  InputError::Kind input_error_kind(F&& f) {
    try {
      f();
    } catch (InputError const& e) {
      return e.kind();
    }
    FAIL("expected an InputError");
    return InputError::Kind::io;
  }

  void write_text(std::filesystem::path const& p, std::string const& text) {
    std::ofstream(p) << text;
  }
}  // namespace

TEST_CASE("parse_rational") {
  CHECK(*parse_rational("0.11") == Rational(11, 100));
  CHECK(*parse_rational("1") == 1);
  CHECK(*parse_rational(" 0.5 ") == Rational(1, 2));
  CHECK(*parse_rational("2/3") == Rational(2, 3));
  CHECK(*parse_rational(".25") == Rational(1, 4));
  CHECK_FALSE(parse_rational("-0.1"));
  CHECK_FALSE(parse_rational("abc"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("1/0"));
}

TEST_CASE("exact and fixed decimal strings") {
  CHECK(to_exact_string(Rational(1, 2)) == "0.5");
  CHECK(to_exact_string(Rational(0)) == "0");
  CHECK(to_exact_string(Rational(19, 400)) == "0.0475");
  CHECK(to_exact_string(Rational(2, 3)) == "2/3");
  CHECK(to_fixed_string(Rational(1, 5), 2) == "0.20");
  CHECK(to_fixed_string(Rational(1), 2) == "1.00");
}

TEST_CASE("round_decimal rules") {
  // 0.0475 -> 0.05, 0.038 -> 0.04, 0.00171875 -> 0.00
  for (auto rule : {RoundingRule::half_even, RoundingRule::half_up}) {
    CHECK(round_decimal(q("0.0475"), 2, rule) == q("0.05"));
    CHECK(round_decimal(q("0.038"), 2, rule) == q("0.04"));
    CHECK(round_decimal(q("0.00171875"), 2, rule) == 0);
    CHECK(round_decimal(q("0.0449"), 2, rule) == q("0.04"));
  }
  CHECK(round_decimal(q("0.005"), 2, RoundingRule::half_even) == 0);
  CHECK(round_decimal(q("0.005"), 2, RoundingRule::half_up) == q("0.01"));
  CHECK(round_decimal(q("0.015"), 2, RoundingRule::half_even) == q("0.02"));
  CHECK(round_decimal(q("0.025"), 2, RoundingRule::half_even) == q("0.02"));
  CHECK(round_decimal(Rational(2, 3), 3) == q("0.667"));
  CHECK(round_decimal(q("0.5"), 0) == 0);
  CHECK(round_decimal(q("0.5"), 0, RoundingRule::half_up) == 1);
}

TEST_CASE("BoolMatrix basics") {
  auto a = bm({"010", "001", "000"});
  CHECK(a.count() == 2);
  CHECK_FALSE(a.is_zero());
  CHECK(a.multiply(a) == bm({"001", "000", "000"}));
  CHECK(a.multiply(a).multiply(a).is_zero());
  CHECK(BoolMatrix::identity(3).multiply(a) == a);
  CHECK_THROWS_AS(a.multiply(BoolMatrix(4)), InputError);

  // Wider than one 64-bit word per row.
  BoolMatrix big(130);
  big.set(0, 129);
  big.set(129, 64);
  auto sq = big.multiply(big);
  CHECK(sq.get(0, 64));
  CHECK(sq.count() == 1);
  CHECK(big.hash() != sq.hash());
}

TEST_CASE("WeightMatrix basics") {
  WeightMatrix w{{q("0.5"), 0}, {1, q("0.25")}};
  CHECK_FALSE(w.is_boolean());
  CHECK(w.in_unit_interval());
  CHECK_THROWS_AS(w.to_bool(), InputError);
  WeightMatrix b(bm({"10", "01"}));
  CHECK(b == WeightMatrix::identity(2));
  CHECK(b.to_bool() == BoolMatrix::identity(2));
  CHECK(WeightMatrix(2).is_zero());
  WeightMatrix bad{{2, 0}, {0, 0}};
  CHECK_FALSE(bad.in_unit_interval());
}

TEST_CASE("graph validation") {
  auto m = bm({"01", "10"});
  CHECK(input_error_kind([&] { MultirelationalGraph({"a", "b"}, {}); })
        == InputError::Kind::no_relations);
  CHECK(input_error_kind([&] { MultirelationalGraph({"a", "a"}, {{"R", m}}); })
        == InputError::Kind::duplicate_node);
  CHECK(input_error_kind([&] { MultirelationalGraph({"a", "b"}, {{"R", m}, {"R", m}}); })
        == InputError::Kind::duplicate_relation);
  CHECK(input_error_kind([&] { MultirelationalGraph({"a", "b", "c"}, {{"R", m}}); })
        == InputError::Kind::dimension_mismatch);
  CHECK(input_error_kind([&] {
          WeightedMultirelationalGraph({"a", "b"}, {{"W", WeightMatrix{{2, 0}, {0, 0}}}});
        })
        == InputError::Kind::entry_out_of_range);

  auto g = fig1();
  CHECK(g.num_nodes() == 6);
  CHECK(g.relation_names() == std::vector<std::string>{"H", "L"});
  CHECK(g.relation_index("L") == 1);
  CHECK(*g.find_node("5") == 4);
  CHECK_FALSE(g.find_relation("X"));
  CHECK(input_error_kind([&] { g.relation_index("X"); })
        == InputError::Kind::unknown_relation);
  CHECK(to_boolean(to_weighted(g)) == g);
}

TEST_CASE("partition canonical form") {
  std::vector<std::size_t> ids{7, 3, 3, 7, 1};
  auto                     p = Partition::from_assignment(ids);
  CHECK(p.num_blocks() == 3);
  CHECK(p.blocks() == std::vector<std::vector<std::size_t>>{{0, 3}, {1, 2}, {4}});
  CHECK(p.block_labels() == std::vector<std::string>{"B1", "B2", "B3"});
  // Idempotent: rebuilding from its own assignment changes nothing.
  auto again = Partition::from_assignment(p.assignment());
  CHECK(again == p);
  CHECK(again.assignment() == p.assignment());
  CHECK(Partition::from_blocks({{4}, {2, 1}, {3, 0}}, 5) == p);

  CHECK(Partition::singletons(3).is_singletons());
  CHECK(Partition::whole(3).num_blocks() == 1);
  CHECK_THROWS_AS(Partition::from_blocks({{0, 1}, {1, 2}}, 3), InputError);
  CHECK_THROWS_AS(Partition::from_blocks({{0}, {2}}, 3), InputError);
  CHECK_THROWS_AS(Partition::from_blocks({{0, 1}, {}, {2}}, 3), InputError);
}

TEST_CASE("refinement and quotient maps") {
  auto fine   = Partition::from_blocks({{0}, {1, 2}, {3, 4, 5}}, 6);
  auto coarse = Partition::from_blocks({{0, 1, 2}, {3, 4, 5}}, 6);
  CHECK(refine_check(fine, coarse));
  CHECK_FALSE(refine_check(coarse, fine));
  CHECK(refine_check(Partition::singletons(6), fine));
  CHECK(refine_check(fine, Partition::whole(6)));

  NestedHierarchy h({fine, coarse});
  CHECK(h.num_levels() == 2);
  CHECK(h.num_maps() == 3);
  CHECK(h.level(0).is_singletons());
  CHECK(h.quotient_map(1, 2).assignment == std::vector<std::size_t>{0, 0, 1});
  CHECK(h.quotient_map(0, 2) == compose_quotients(h.quotient_map(0, 1), h.quotient_map(1, 2)));
  CHECK(h.quotient_map(1, 1).assignment == std::vector<std::size_t>{0, 1, 2});
  CHECK(h.relative_partition(1, 2).blocks()
        == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});

  auto straddle = Partition::from_blocks({{0, 1}, {2, 3, 4, 5}}, 6);
  try {
    NestedHierarchy bad({fine, straddle});
    FAIL("expected NestingError");
  } catch (NestingError const& e) {
    CHECK(e.level() == 2);
    CHECK(e.block() == "B2");
  }
}

TEST_CASE("matrix CSV errors name file and line") {
  auto read = [](std::string const& text, std::size_t n) {
    std::istringstream in(text);
    return read_matrix_csv(in, "m.csv", n);
  };
  CHECK(read("0,1\n1,0\n", 2) == WeightMatrix(bm({"01", "10"})));
  CHECK(read("0.5,1/3\n\n0,0\n", 2)(0, 1) == Rational(1, 3));
  CHECK(input_error_kind([&] { read("0,1,0\n1,0,0\n", 2); })
        == InputError::Kind::non_square);
  CHECK(input_error_kind([&] { read("0,1\n1,0\n", 3); })
        == InputError::Kind::dimension_mismatch);
  CHECK(input_error_kind([&] { read("0,1\n1\n", 2); })
        == InputError::Kind::dimension_mismatch);
  CHECK(input_error_kind([&] { read("0,1.5\n1,0\n", 2); })
        == InputError::Kind::entry_out_of_range);
  CHECK(input_error_kind([&] { read("0,-1\n1,0\n", 2); })
        == InputError::Kind::entry_out_of_range);
  CHECK(input_error_kind([&] { read("0,x\n1,0\n", 2); }) == InputError::Kind::parse);
  try {
    read("0,1\n0,x\n", 2);
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).find("m.csv:2") != std::string::npos);
  }
}

TEST_CASE("manifest loading") {
  auto dir = scratch_dir("manifest");
  write_text(dir / "a.csv", "0,1\n0,0\n");
  write_text(dir / "w.csv", "0,0.5\n0,0\n");

  write_text(dir / "ok.json",
             R"({"nodes":["x","y"],"relations":[{"name":"A","file":"a.csv"}]})");
  auto g = load_graph(dir / "ok.json");
  CHECK(std::holds_alternative<MultirelationalGraph>(g));

  write_text(dir / "w.json",
             R"({"nodes":["x","y"],"relations":[{"name":"A","file":"a.csv"},{"name":"W","file":"w.csv"}]})");
  auto wg = load_graph(dir / "w.json");
  REQUIRE(std::holds_alternative<WeightedMultirelationalGraph>(wg));
  CHECK(std::get<WeightedMultirelationalGraph>(wg).relation(1).matrix(0, 1) == Rational(1, 2));

  write_text(dir / "one.csv", "1\n");
  write_text(dir / "one.json", R"({"nodes":["x"],"relations":[{"name":"A","file":"one.csv"}]})");
  auto one = std::get<MultirelationalGraph>(load_graph(dir / "one.json"));
  CHECK(one.num_nodes() == 1);
  CHECK(one.relation(0).matrix.get(0, 0));

  write_text(dir / "dup.json",
             R"({"nodes":["x","y"],"relations":[{"name":"A","file":"a.csv"},{"name":"A","file":"a.csv"}]})");
  CHECK(input_error_kind([&] { load_graph(dir / "dup.json"); })
        == InputError::Kind::duplicate_relation);
  write_text(dir / "none.json", R"({"nodes":["x","y"],"relations":[]})");
  CHECK(input_error_kind([&] { load_graph(dir / "none.json"); })
        == InputError::Kind::no_relations);
  write_text(dir / "size.json",
             R"({"nodes":["x","y","z"],"relations":[{"name":"A","file":"a.csv"}]})");
  CHECK(input_error_kind([&] { load_graph(dir / "size.json"); })
        == InputError::Kind::dimension_mismatch);
  write_text(dir / "missing.json",
             R"({"nodes":["x","y"],"relations":[{"name":"A","file":"nope.csv"}]})");
  CHECK(input_error_kind([&] { load_graph(dir / "missing.json"); })
        == InputError::Kind::io);
  write_text(dir / "broken.json", "{");
  CHECK(input_error_kind([&] { load_graph(dir / "broken.json"); })
        == InputError::Kind::parse);
  std::filesystem::remove_all(dir);
}

TEST_CASE("partition files") {
  std::vector<std::string> nodes{"a", "b", "c"};
  auto p = parse_partition(R"({"a":"X","b":"Y","c":"X"})", "p", nodes);
  CHECK(p.blocks() == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
  CHECK(p.block_labels() == std::vector<std::string>{"X", "Y"});
  CHECK(parse_partition(R"({"a":1,"b":2,"c":1})", "p", nodes) == p);
  CHECK(input_error_kind([&] { parse_partition(R"({"a":"X","b":"Y"})", "p", nodes); })
        == InputError::Kind::missing_node);
  CHECK(input_error_kind([&] {
          parse_partition(R"({"a":"X","b":"Y","c":"X","d":"Z"})", "p", nodes);
        })
        == InputError::Kind::unknown_node);
  CHECK(input_error_kind([&] { parse_partition(R"({"a":"X","b":"","c":"X"})", "p", nodes); })
        == InputError::Kind::empty_block_label);
  CHECK(parse_partition(partition_to_json(p, nodes), "p", nodes) == p);
}

TEST_CASE("round trip save and load") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    auto dir = scratch_dir("roundtrip");
    auto g   = random_graph(rng, 1 + trial, 2);
    save_graph(g, dir);
    CHECK(std::get<MultirelationalGraph>(load_graph(dir / "manifest.json")) == g);

    std::vector<Relation<WeightMatrix>> rels{
        {"W", random_weight(rng, 3, 7)}, {"V", random_weight(rng, 3, 10)}};
    rels[0].matrix(0, 0) = Rational(1, 2);  // never all-Boolean
    WeightedMultirelationalGraph w({"p", "q", "r"}, rels);
    save_graph(w, dir, "w.json", "w_");
    CHECK(std::get<WeightedMultirelationalGraph>(load_graph(dir / "w.json")) == w);
    std::filesystem::remove_all(dir);
  }
}

TEST_CASE("bundled data files match the embedded fixtures") {
  std::filesystem::path root = RELROLE_SOURCE_DIR;
  for (auto const& name : fixtures::names()) {
    auto f   = fixtures::get(name);
    auto dir = root / "data" / "fixtures" / name;
    CHECK(load_graph(dir / "manifest.json") == f.graph);
    if (f.partition) {
      CHECK(load_partition(dir / "partition.json", node_labels_of(f.graph)) == *f.partition);
    }
  }
  CHECK_THROWS_AS(fixtures::get("nope"), InputError);
}
