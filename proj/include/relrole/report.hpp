#ifndef RELROLE_REPORT_HPP_
#define RELROLE_REPORT_HPP_

// JSON and text renderings shared by the CLI and the tests. Weighted
// entries are always written as exact decimal strings and keys keep a fixed
// order, so identical inputs give byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "relrole/blockmodel.hpp"
#include "relrole/equivalence.hpp"
#include "relrole/homomorphism.hpp"
#include "relrole/semigroup.hpp"
#include "relrole/truncated.hpp"

namespace relrole {

  using ordered_json = nlohmann::ordered_json;

  ordered_json to_json(BoolMatrix const& m);    // ["0110", ...]
  ordered_json to_json(WeightMatrix const& m);  // [["0.11", "0.25"], ...]

  ordered_json words_json(std::vector<Word> const& words,
                          std::vector<std::string> const& names);

  ordered_json semigroup_json(Semigroup const&                s,
                              std::vector<std::string> const& names);

  ordered_json truncated_json(TruncatedSemigroup const&       s,
                              std::vector<std::string> const& names);

  // Elements grouped by word length, longest first, each with every word of
  // that length that evaluates to it (when there are at most `max_words`
  // such words to enumerate; otherwise just the shortest word).
  std::string truncated_listing(TruncatedSemigroup const&       s,
                                std::vector<std::string> const& names,
                                std::size_t max_words = 1U << 16);

  std::string matrix_text(WeightMatrix const& m, std::optional<unsigned> digits = {});
  std::string matrix_text(BoolMatrix const& m);

  ordered_json blockmodel_json(DensityBlockmodel const& bm);

  ordered_json distance_json(DistanceMatrix const& d,
                             std::vector<std::string> const& node_labels);

  ordered_json hom_json(SemigroupHom const& hom,
                        std::vector<std::string> const& names);

  ordered_json functoriality_json(FunctorialityReport const& rep);

  char const* to_string(Metric m);
  char const* to_string(RoundingMode m);
  char const* to_string(RoundingRule r);

}  // namespace relrole

#endif  // RELROLE_REPORT_HPP_
