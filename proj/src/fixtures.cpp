#include "relrole/fixtures.hpp"

#include "relrole/error.hpp"

namespace relrole::fixtures {

  namespace {
    BoolMatrix rows(std::vector<std::string> const& r) {
      BoolMatrix m(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = 0; j < r.size(); ++j) {
          m.set(i, j, r[i][j] == '1');
        }
      }
      return m;
    }

    Fixture fig1() {
      auto h = rows({"011000",
                     "000100",
                     "000011",
                     "000000",
                     "000000",
                     "000000"});
      auto l = rows({"100000",
                     "011000",
                     "011000",
                     "000111",
                     "000111",
                     "000111"});
      MultirelationalGraph g({"1", "2", "3", "4", "5", "6"},
                             {{"H", std::move(h)}, {"L", std::move(l)}});
      std::vector<std::size_t> ids{0, 1, 1, 2, 2, 2};
      return {"fig1",
              "six-node family graph with relations H and L",
              std::move(g),
              Partition::from_assignment(ids, {"B1", "B2", "B3"})};
    }

    Fixture monks_density() {
      auto q = [](char const* s) { return *parse_rational(s); };
      WeightMatrix p{{q("0.11"), q("0.25")}, {q("0.11"), q("0.25")}};
      WeightMatrix n{{q("0.17"), q("0.25")}, {q("0.19"), q("0.20")}};
      WeightedMultirelationalGraph g({"B1", "B2"},
                                     {{"P", std::move(p)}, {"N", std::move(n)}});
      return {"monks-density",
              "2x2 density matrices of the monks positive/negative relations, "
              "two decimal digits",
              std::move(g),
              std::nullopt};
    }
  }  // namespace

  std::vector<std::string> names() {
    return {"fig1", "monks-density"};
  }

  Fixture get(std::string const& name) {
    if (name == "fig1") {
      return fig1();
    }
    if (name == "monks-density") {
      return monks_density();
    }
    throw InputError("cli",
                     InputError::Kind::invalid_argument,
                     "unknown fixture \"" + name + "\"");
  }

  void write(Fixture const& f, std::filesystem::path const& dir) {
    std::visit([&](auto const& g) { save_graph(g, dir); }, f.graph);
    if (f.partition) {
      save_partition(*f.partition, node_labels_of(f.graph), dir / "partition.json");
    }
  }

}  // namespace relrole::fixtures
