#include "relrole/graph.hpp"

#include <set>

#include "relrole/error.hpp"

namespace relrole {

  namespace {
    [[noreturn]] void fail(InputError::Kind kind, std::string const& what) {
      throw InputError("relgraph-core", kind, what);
    }

    void check_entries(BoolMatrix const&, std::string const&) {}

    void check_entries(WeightMatrix const& m, std::string const& name) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
          auto const& x = m(i, j);
          if (x < 0 || x > 1) {
            fail(InputError::Kind::entry_out_of_range,
                 "relation \"" + name + "\": entry (" + std::to_string(i + 1)
                     + "," + std::to_string(j + 1) + ") = "
                     + to_exact_string(x) + " is outside [0,1]");
          }
        }
      }
    }
  }  // namespace

  template <typename Matrix>
  BasicGraph<Matrix>::BasicGraph(std::vector<std::string>      node_labels,
                                 std::vector<Relation<Matrix>> relations)
      : _nodes(std::move(node_labels)), _relations(std::move(relations)) {
    if (_relations.empty()) {
      fail(InputError::Kind::no_relations, "a graph needs at least one relation");
    }
    std::set<std::string> seen_nodes;
    for (auto const& label : _nodes) {
      if (!seen_nodes.insert(label).second) {
        fail(InputError::Kind::duplicate_node,
             "duplicate node label \"" + label + "\"");
      }
    }
    std::set<std::string> seen;
    for (auto const& rel : _relations) {
      if (!seen.insert(rel.name).second) {
        fail(InputError::Kind::duplicate_relation,
             "duplicate relation name \"" + rel.name + "\"");
      }
      if (rel.matrix.size() != _nodes.size()) {
        fail(InputError::Kind::dimension_mismatch,
             "relation \"" + rel.name + "\" is "
                 + std::to_string(rel.matrix.size()) + "x"
                 + std::to_string(rel.matrix.size()) + " but the graph has "
                 + std::to_string(_nodes.size()) + " nodes");
      }
      check_entries(rel.matrix, rel.name);
    }
  }

  template <typename Matrix>
  std::vector<Matrix> BasicGraph<Matrix>::matrices() const {
    std::vector<Matrix> out;
    out.reserve(_relations.size());
    for (auto const& rel : _relations) {
      out.push_back(rel.matrix);
    }
    return out;
  }

  template <typename Matrix>
  std::vector<std::string> BasicGraph<Matrix>::relation_names() const {
    std::vector<std::string> out;
    for (auto const& rel : _relations) {
      out.push_back(rel.name);
    }
    return out;
  }

  template <typename Matrix>
  std::optional<std::size_t>
  BasicGraph<Matrix>::find_relation(std::string const& name) const {
    for (std::size_t s = 0; s < _relations.size(); ++s) {
      if (_relations[s].name == name) {
        return s;
      }
    }
    return std::nullopt;
  }

  template <typename Matrix>
  std::optional<std::size_t>
  BasicGraph<Matrix>::find_node(std::string const& label) const {
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      if (_nodes[i] == label) {
        return i;
      }
    }
    return std::nullopt;
  }

  template <typename Matrix>
  std::size_t BasicGraph<Matrix>::relation_index(std::string const& name) const {
    if (auto s = find_relation(name)) {
      return *s;
    }
    fail(InputError::Kind::unknown_relation,
         "unknown relation \"" + name + "\"");
  }

  template class BasicGraph<BoolMatrix>;
  template class BasicGraph<WeightMatrix>;

  WeightedMultirelationalGraph to_weighted(MultirelationalGraph const& g) {
    std::vector<Relation<WeightMatrix>> rels;
    for (auto const& rel : g.relations()) {
      rels.push_back({rel.name, WeightMatrix(rel.matrix)});
    }
    return WeightedMultirelationalGraph(g.node_labels(), std::move(rels));
  }

  MultirelationalGraph to_boolean(WeightedMultirelationalGraph const& g) {
    std::vector<Relation<BoolMatrix>> rels;
    for (auto const& rel : g.relations()) {
      rels.push_back({rel.name, rel.matrix.to_bool()});
    }
    return MultirelationalGraph(g.node_labels(), std::move(rels));
  }

}  // namespace relrole
