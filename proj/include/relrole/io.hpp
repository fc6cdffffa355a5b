#ifndef RELROLE_IO_HPP_
#define RELROLE_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "relrole/graph.hpp"
#include "relrole/partition.hpp"

namespace relrole {

  using AnyGraph = std::variant<MultirelationalGraph, WeightedMultirelationalGraph>;

  // Manifest: {"nodes": [...], "relations": [{"name": ..., "file": ...}]}.
  // Matrix files are resolved relative to the manifest's directory. The
  // weighted variant is returned iff some entry lies strictly inside (0,1).
  AnyGraph load_graph(std::filesystem::path const& manifest_path);

  // One matrix per line-oriented CSV stream; `source` names it in errors.
  WeightMatrix read_matrix_csv(std::istream&      in,
                               std::string const& source,
                               std::size_t        expected_size);

  void write_matrix_csv(std::ostream& out, BoolMatrix const& m);
  void write_matrix_csv(std::ostream& out, WeightMatrix const& m);

  // Writes `<dir>/<manifest_name>` and one `<relation>.csv` per relation.
  template <typename Matrix>
  void save_graph(BasicGraph<Matrix> const&    g,
                  std::filesystem::path const& dir,
                  std::string const&           manifest_name = "manifest.json",
                  std::string const&           file_prefix   = "");

  // {"node_label": "block_label", ...}, total over the graph's nodes.
  Partition load_partition(std::filesystem::path const&    path,
                           std::vector<std::string> const& node_labels);
  Partition parse_partition(std::string const&              json_text,
                            std::string const&              source,
                            std::vector<std::string> const& node_labels);

  std::string partition_to_json(Partition const&                p,
                                std::vector<std::string> const& node_labels);
  void        save_partition(Partition const&                p,
                             std::vector<std::string> const& node_labels,
                             std::filesystem::path const&    path);

  // Partitions listed fine to coarse.
  NestedHierarchy load_hierarchy(std::vector<std::filesystem::path> const& paths,
                                 std::vector<std::string> const& node_labels);

  std::vector<std::string> const& node_labels_of(AnyGraph const& g);

}  // namespace relrole

#endif  // RELROLE_IO_HPP_
