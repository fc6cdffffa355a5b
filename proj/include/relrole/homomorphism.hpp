#ifndef RELROLE_HOMOMORPHISM_HPP_
#define RELROLE_HOMOMORPHISM_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "relrole/graph.hpp"
#include "relrole/partition.hpp"
#include "relrole/semigroup.hpp"

namespace relrole {

  struct SemigroupHom {
    std::shared_ptr<Semigroup const> source;
    std::shared_ptr<Semigroup const> target;
    std::vector<std::size_t>         mapping;  // source index -> target index
    bool                             surjective = false;
  };

  // The homomorphism SG(G) -> SG(G/P) induced by a perfect partition: each
  // element is sent to the target element with the same word. Every image
  // is checked against the density of the source matrix and the
  // homomorphism property is checked on every pair.
  //
  // Throws NotPerfectError when some density is not Boolean and
  // InternalError if a check fails.
  SemigroupHom induced_hom(MultirelationalGraph const& g,
                           Partition const&            p,
                           SemigroupOptions const&     opts = {});

  // Same, for semigroups already generated from G and its quotient by P
  // (with the relations in the same order).
  SemigroupHom induced_hom(std::shared_ptr<Semigroup const> source,
                           std::shared_ptr<Semigroup const> target,
                           Partition const&                 p);

  // second after first. Throws InputError if first.target != second.source.
  SemigroupHom compose(SemigroupHom const& first, SemigroupHom const& second);

  struct FunctorLevel {
    std::size_t          level = 0;  // 0 is the input graph
    std::size_t          num_nodes = 0;
    std::size_t          semigroup_size = 0;
    bool                 has_zero = false;
    MultirelationalGraph graph;
  };

  struct FunctorMap {
    std::size_t from = 0;
    std::size_t to   = 0;
    bool        surjective = false;
    // density of G_from over the direct partition equals G_to
    bool        graph_matches = false;
  };

  struct FunctorTriple {
    std::size_t i = 0, k = 0, j = 0;
    std::size_t mismatches = 0;

    bool passed() const noexcept {
      return mismatches == 0;
    }
  };

  struct FunctorialityReport {
    std::vector<FunctorLevel>  levels;
    std::vector<FunctorMap>    maps;
    std::vector<FunctorTriple> triples;

    bool passed() const noexcept;
  };

  // Builds G_0 = G, G_1, ..., G_p level by level, generates every
  // semigroup, computes SG(pi_{i,j}) directly for all i < j and checks
  // SG(pi_{i,j}) = SG(pi_{k,j}) o SG(pi_{i,k}) for every i < k < j.
  // Throws NotPerfectError naming the first level whose blockmodel over
  // the previous level is not perfect.
  FunctorialityReport check_functoriality(MultirelationalGraph const& g,
                                          NestedHierarchy const&      h,
                                          SemigroupOptions const&     opts = {});

}  // namespace relrole

#endif  // RELROLE_HOMOMORPHISM_HPP_
