#ifndef RELROLE_GRAPH_HPP_
#define RELROLE_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relrole/matrix.hpp"

namespace relrole {

  template <typename Matrix>
  struct Relation {
    std::string name;
    Matrix      matrix;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  // A node set with r labelled square relation matrices, all interpreted in
  // node_labels order. Validated on construction and immutable afterwards.
  template <typename Matrix>
  class BasicGraph {
   public:
    using matrix_type = Matrix;

    BasicGraph(std::vector<std::string>      node_labels,
               std::vector<Relation<Matrix>> relations);

    std::size_t num_nodes() const noexcept {
      return _nodes.size();
    }
    std::size_t num_relations() const noexcept {
      return _relations.size();
    }

    std::vector<std::string> const& node_labels() const noexcept {
      return _nodes;
    }
    std::vector<Relation<Matrix>> const& relations() const noexcept {
      return _relations;
    }
    Relation<Matrix> const& relation(std::size_t s) const {
      return _relations.at(s);
    }

    std::vector<Matrix>      matrices() const;
    std::vector<std::string> relation_names() const;

    std::optional<std::size_t> find_relation(std::string const& name) const;
    std::optional<std::size_t> find_node(std::string const& label) const;

    // Throws InputError(unknown_relation).
    std::size_t relation_index(std::string const& name) const;

    friend bool operator==(BasicGraph const&, BasicGraph const&) = default;

   private:
    std::vector<std::string>      _nodes;
    std::vector<Relation<Matrix>> _relations;
  };

  using MultirelationalGraph         = BasicGraph<BoolMatrix>;
  using WeightedMultirelationalGraph = BasicGraph<WeightMatrix>;

  extern template class BasicGraph<BoolMatrix>;
  extern template class BasicGraph<WeightMatrix>;

  WeightedMultirelationalGraph to_weighted(MultirelationalGraph const& g);

  // Throws InputError if some entry is not 0 or 1.
  MultirelationalGraph to_boolean(WeightedMultirelationalGraph const& g);

}  // namespace relrole

#endif  // RELROLE_GRAPH_HPP_
