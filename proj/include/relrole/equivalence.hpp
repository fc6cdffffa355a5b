#ifndef RELROLE_EQUIVALENCE_HPP_
#define RELROLE_EQUIVALENCE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "relrole/graph.hpp"
#include "relrole/partition.hpp"

namespace relrole {

  // Tie pattern of one node: for each relation in order, row i followed by
  // column i. Length 2*r*n.
  struct ProfileVector {
    std::size_t         node = 0;
    std::vector<double> values;
  };

  template <typename Matrix>
  ProfileVector profile_vector(BasicGraph<Matrix> const&       g,
                               std::size_t                     i,
                               std::vector<std::size_t> const& relations = {});

  // The pair of vectors actually compared for nodes a.node and b.node. With
  // ignore_self, for each relation, entries at positions k not in {i,j} are
  // paired directly and the remaining ones as A(i,i)~A(j,j), A(i,j)~A(j,i).
  // Without it the raw profiles are returned.
  std::pair<std::vector<double>, std::vector<double>>
  aligned_profiles(ProfileVector const& a,
                   ProfileVector const& b,
                   std::size_t          n,
                   bool                 ignore_self = true);

  // Coarsest partition whose blocks are structurally equivalent over the
  // selected relations (all if empty), under the ignore_self convention.
  template <typename Matrix>
  Partition structural_partition(BasicGraph<Matrix> const&       g,
                                 std::vector<std::size_t> const& relations = {});

  enum class Metric { euclidean, cosine_distance };

  struct DistanceMatrix {
    Metric              metric = Metric::euclidean;
    std::size_t         n      = 0;
    std::vector<double> values;
    // Pairs where one aligned vector was all zero under the cosine metric.
    std::vector<std::pair<std::size_t, std::size_t>> zero_profile_pairs;

    double operator()(std::size_t i, std::size_t j) const {
      return values[i * n + j];
    }
  };

  struct DistanceOptions {
    std::vector<std::size_t> relations;  // empty = all
    unsigned                 threads = 1;
  };

  template <typename Matrix>
  DistanceMatrix distance_matrix(BasicGraph<Matrix> const& g,
                                 Metric                    metric,
                                 DistanceOptions const&    opts = {});

  struct NumBlocks {
    std::size_t k;
  };
  struct Threshold {
    double t;
  };
  using ClusterTarget = std::variant<NumBlocks, Threshold>;

  // Complete-linkage agglomerative clustering. Throws InputError for a
  // block count outside [1,n] or a negative threshold.
  Partition agglomerate(DistanceMatrix const& d, ClusterTarget target);

}  // namespace relrole

#endif  // RELROLE_EQUIVALENCE_HPP_
