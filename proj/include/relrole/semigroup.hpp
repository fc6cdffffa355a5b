#ifndef RELROLE_SEMIGROUP_HPP_
#define RELROLE_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relrole/closure.hpp"
#include "relrole/graph.hpp"
#include "relrole/matrix.hpp"

namespace relrole {

  // Throws InputError(dimension_mismatch) for different sizes.
  BoolMatrix bool_product(BoolMatrix const& a, BoolMatrix const& b);

  // Is there a compound relation from i to j following `word` (relation
  // names in the order they are applied)? The word [H, L] evaluates to the
  // matrix product A_H * A_L.
  bool compound_exists(MultirelationalGraph const&     g,
                       std::size_t                     i,
                       std::size_t                     j,
                       std::vector<std::string> const& word);

  struct SemigroupOptions {
    std::size_t cap         = 100'000;
    unsigned    threads     = 1;
    std::size_t table_limit = 1024;  // no table above this many elements
  };

  // The semigroup generated by Boolean matrices under Boolean product.
  // No identity is adjoined.
  class Semigroup {
   public:
    Semigroup(detail::Closure<BoolMatrix> closure, std::size_t table_limit);

    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::size_t num_generators() const noexcept {
      return _generator_indices.size();
    }
    std::size_t dimension() const noexcept {
      return _elements.front().size();
    }

    std::vector<BoolMatrix> const& elements() const noexcept {
      return _elements;
    }
    BoolMatrix const& element(std::size_t e) const {
      return _elements.at(e);
    }
    std::vector<Word> const& words() const noexcept {
      return _words;
    }
    Word const& word(std::size_t e) const {
      return _words.at(e);
    }
    std::vector<std::size_t> const& generator_indices() const noexcept {
      return _generator_indices;
    }
    std::optional<std::size_t> zero_index() const noexcept {
      return _zero;
    }

    // Index of x * y.
    std::size_t product(std::size_t x, std::size_t y) const;

    // Index of the element a nonempty word evaluates to.
    std::size_t evaluate(Word const& w) const;

    std::optional<std::size_t> find(BoolMatrix const& m) const;

    bool has_table() const noexcept {
      return !_table.empty();
    }
    // Row-major |S| x |S|; empty when size() exceeded the table limit.
    std::vector<std::size_t> const& table() const noexcept {
      return _table;
    }

   private:
    std::vector<BoolMatrix>    _elements;
    std::vector<Word>          _words;
    std::vector<std::size_t>   _generator_indices;
    std::vector<std::size_t>   _right;
    std::vector<std::size_t>   _table;
    std::optional<std::size_t> _zero;
  };

  // Throws CapExceeded when more than opts.cap elements are found.
  Semigroup generate_semigroup(std::vector<BoolMatrix> const& generators,
                               SemigroupOptions const&        opts = {});

  // Label of a word over relation names: plain concatenation when every name
  // is a single character ("HL"), otherwise names joined by '.'.
  std::string word_label(Word const& w, std::vector<std::string> const& names);

  // Element label used in tables: "0" for the zero matrix, else its word.
  std::string element_label(Semigroup const&                semigroup,
                            std::size_t                     e,
                            std::vector<std::string> const& names);

  // Text table in the given row/column order (all elements if empty).
  std::string multiplication_table(Semigroup const&                semigroup,
                                   std::vector<std::string> const& names,
                                   std::vector<std::size_t> const& order = {});

  // Word-label lookup: the element whose label is `label`.
  std::optional<std::size_t> find_by_label(Semigroup const&                semigroup,
                                           std::string const&              label,
                                           std::vector<std::string> const& names);

}  // namespace relrole

#endif  // RELROLE_SEMIGROUP_HPP_
