#ifndef RELROLE_FIXTURES_HPP_
#define RELROLE_FIXTURES_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "relrole/io.hpp"
#include "relrole/partition.hpp"

namespace relrole::fixtures {

  struct Fixture {
    std::string              name;
    std::string              description;
    AnyGraph                 graph;
    std::optional<Partition> partition;  // suggested blockmodel, if any
  };

  // "fig1": six-node family graph with relations H and L, plus the
  //         partition {1},{2,3},{4,5,6}.
  // "monks-density": 2x2 density generators P and N of the monks data.
  std::vector<std::string> names();

  // Throws InputError(invalid_argument) for an unknown name.
  Fixture get(std::string const& name);

  // Writes manifest.json, one CSV per relation and partition.json (when the
  // fixture has one) into `dir`.
  void write(Fixture const& f, std::filesystem::path const& dir);

}  // namespace relrole::fixtures

#endif  // RELROLE_FIXTURES_HPP_
