#ifndef RELROLE_BLOCKMODEL_HPP_
#define RELROLE_BLOCKMODEL_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "relrole/graph.hpp"
#include "relrole/partition.hpp"

namespace relrole {

  // Node order that makes every block contiguous: blocks in canonical order,
  // members ascending.
  std::vector<std::size_t> block_order(Partition const& p);

  BoolMatrix   permuted_matrix(BoolMatrix const& a, Partition const& p);
  WeightMatrix permuted_matrix(WeightMatrix const& a, Partition const& p);

  // Entry (I,J) is the number of ones in block (I,J) divided by |B_I||B_J|;
  // diagonal blocks include self-ties. For weighted input the entries are
  // summed instead of counted.
  WeightMatrix density_matrix(BoolMatrix const& a, Partition const& p);
  WeightMatrix density_matrix(WeightMatrix const& a, Partition const& p);

  struct DensityBlockmodel {
    Partition                    partition;
    WeightedMultirelationalGraph graph;  // one node per block
    bool                         is_perfect = false;
    bool                         weighted_input = false;

    // Requires is_perfect.
    MultirelationalGraph quotient() const;
  };

  template <typename Matrix>
  std::pair<DensityBlockmodel, QuotientMap>
  density_blockmodel(BasicGraph<Matrix> const& g, Partition const& p);

  struct DefaultDelta {
    Rational delta;
    bool     zero_matrix = false;  // delta is 0, which image_matrix rejects
  };

  // Fraction of ones in `a`.
  DefaultDelta default_delta(BoolMatrix const& a);

  // 1 iff entry >= delta. Throws InputError unless 0 < delta <= 1.
  BoolMatrix image_matrix(WeightMatrix const& d, Rational const& delta);

  // 1 iff entry > 0.
  BoolMatrix lean_fit(WeightMatrix const& d);

}  // namespace relrole

#endif  // RELROLE_BLOCKMODEL_HPP_
