#ifndef RELROLE_TRUNCATED_HPP_
#define RELROLE_TRUNCATED_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relrole/closure.hpp"
#include "relrole/matrix.hpp"

namespace relrole {

  // (A ▽ B)(i,j) = max_k A(i,k) * B(k,j).
  // Throws InputError(dimension_mismatch) for different sizes.
  WeightMatrix max_times(WeightMatrix const& a, WeightMatrix const& b);

  WeightMatrix round_matrix(WeightMatrix const& a,
                            unsigned            digits,
                            RoundingRule        rule = RoundingRule::half_even);

  enum class RoundingMode { none, per_step };

  struct RoundingPolicy {
    RoundingMode mode   = RoundingMode::per_step;
    unsigned     digits = 2;
    RoundingRule rule   = RoundingRule::half_even;

    static RoundingPolicy none() {
      return {RoundingMode::none, 0, RoundingRule::half_even};
    }
    static RoundingPolicy per_step(unsigned     digits,
                                   RoundingRule rule = RoundingRule::half_even) {
      return {RoundingMode::per_step, digits, rule};
    }

    static constexpr unsigned max_digits = 12;
  };

  struct TruncatedOptions {
    std::size_t cap         = 100'000;
    unsigned    threads     = 1;
    std::size_t table_limit = 1024;
  };

  // The k-truncated semigroup: matrices of words of length <= k under ▽
  // (rounded after every product under per_step), plus the zero matrix.
  // A product whose operands' shortest words have total length > k is zero.
  class TruncatedSemigroup {
   public:
    TruncatedSemigroup(detail::Closure<WeightMatrix> closure,
                       std::size_t                   k,
                       RoundingPolicy                policy,
                       std::size_t                   table_limit);

    std::size_t k() const noexcept {
      return _k;
    }
    RoundingPolicy const& policy() const noexcept {
      return _policy;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::size_t num_generators() const noexcept {
      return _generator_indices.size();
    }
    std::vector<WeightMatrix> const& elements() const noexcept {
      return _elements;
    }
    WeightMatrix const& element(std::size_t e) const {
      return _elements.at(e);
    }
    // Shortest lexicographically least word; empty for an adjoined zero.
    Word const& word(std::size_t e) const {
      return _words.at(e);
    }
    // Length of word(e); k + 1 for an adjoined zero.
    std::size_t length(std::size_t e) const {
      return _lengths.at(e);
    }
    std::vector<std::size_t> const& generator_indices() const noexcept {
      return _generator_indices;
    }
    std::optional<std::size_t> zero_index() const noexcept {
      return _zero;
    }
    // The zero matrix was adjoined as a truncation sink, not reached by a word.
    bool zero_is_sink() const noexcept {
      return _sink;
    }
    bool is_generator(std::size_t e) const;

    // x * y evaluated as the concatenated word: x's matrix multiplied by the
    // generators of y's word in order; zero once the length exceeds k.
    std::size_t product(std::size_t x, std::size_t y) const;

    // UNDEFINED for words longer than k (which evaluate to zero only if a
    // zero element exists).
    std::size_t evaluate(Word const& w) const;

    std::optional<std::size_t> find(WeightMatrix const& m) const;

    bool has_table() const noexcept {
      return !_table.empty();
    }
    std::vector<std::size_t> const& table() const noexcept {
      return _table;
    }

   private:
    std::size_t                _k;
    RoundingPolicy             _policy;
    std::vector<WeightMatrix>  _elements;
    std::vector<Word>          _words;
    std::vector<std::size_t>   _lengths;
    std::vector<std::size_t>   _generator_indices;
    std::vector<std::size_t>   _right;
    std::vector<std::size_t>   _table;
    std::optional<std::size_t> _zero;
    bool                       _sink = false;
  };

  // Throws InputError for k = 0, mismatched dimensions, entries outside
  // [0,1] or digits > 12; CapExceeded past opts.cap elements.
  TruncatedSemigroup generate_truncated(std::vector<WeightMatrix> const& generators,
                                        std::size_t                      k,
                                        RoundingPolicy                   policy,
                                        TruncatedOptions const&          opts = {});

  struct TruncatedReport {
    std::size_t all           = 0;
    std::size_t non_generator = 0;
    std::size_t non_generator_nonzero = 0;
    // census[l - 1]: elements whose shortest word has length l
    std::vector<std::size_t> census;
    // least k' whose words of length <= k' already reach every element
    std::size_t stabilization_depth = 0;
    bool        zero_reached        = false;
    bool        zero_sink           = false;
  };

  TruncatedReport truncated_report(TruncatedSemigroup const& s);

}  // namespace relrole

#endif  // RELROLE_TRUNCATED_HPP_
