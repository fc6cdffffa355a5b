#include "relrole/semigroup.hpp"

#include <algorithm>
#include <sstream>

#include "relrole/error.hpp"

namespace relrole {

  namespace {
    constexpr char const* kModule = "semigroup";
  }

  BoolMatrix bool_product(BoolMatrix const& a, BoolMatrix const& b) {
    return a.multiply(b);
  }

  bool compound_exists(MultirelationalGraph const&     g,
                       std::size_t                     i,
                       std::size_t                     j,
                       std::vector<std::string> const& word) {
    if (word.empty()) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "a compound relation needs a word of length at least 1");
    }
    if (i >= g.num_nodes() || j >= g.num_nodes()) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "node index out of range");
    }
    BoolMatrix m = g.relation(g.relation_index(word.front())).matrix;
    for (std::size_t t = 1; t < word.size(); ++t) {
      m = bool_product(m, g.relation(g.relation_index(word[t])).matrix);
    }
    return m.get(i, j);
  }

  Semigroup::Semigroup(detail::Closure<BoolMatrix> c, std::size_t table_limit)
      : _elements(std::move(c.elements)),
        _words(std::move(c.words)),
        _generator_indices(std::move(c.generator_indices)),
        _right(std::move(c.right)) {
    for (std::size_t e = 0; e < _elements.size(); ++e) {
      if (_elements[e].is_zero()) {
        _zero = e;
        break;
      }
    }
    std::size_t const n = _elements.size();
    if (n <= table_limit) {
      std::vector<std::size_t> table(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          table[x * n + y] = product(x, y);
        }
      }
      _table = std::move(table);
    }
  }

  std::size_t Semigroup::product(std::size_t x, std::size_t y) const {
    std::size_t const n = _elements.size();
    if (!_table.empty()) {
      return _table[x * n + y];
    }
    std::size_t const r   = _generator_indices.size();
    std::size_t       cur = x;
    for (auto g : _words.at(y)) {
      cur = _right[cur * r + g];
    }
    return cur;
  }

  std::size_t Semigroup::evaluate(Word const& w) const {
    if (w.empty()) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "cannot evaluate the empty word");
    }
    std::size_t const r = _generator_indices.size();
    for (auto g : w) {
      if (g >= r) {
        throw InputError(kModule,
                         InputError::Kind::unknown_relation,
                         "generator index " + std::to_string(g)
                             + " out of range");
      }
    }
    std::size_t cur = _generator_indices[w.front()];
    for (std::size_t t = 1; t < w.size(); ++t) {
      cur = _right[cur * r + w[t]];
    }
    return cur;
  }

  std::optional<std::size_t> Semigroup::find(BoolMatrix const& m) const {
    auto it = std::find(_elements.begin(), _elements.end(), m);
    if (it == _elements.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  Semigroup generate_semigroup(std::vector<BoolMatrix> const& generators,
                               SemigroupOptions const&        opts) {
    if (generators.empty()) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "at least one generator is required");
    }
    for (auto const& g : generators) {
      if (g.size() != generators.front().size()) {
        throw InputError(kModule,
                         InputError::Kind::dimension_mismatch,
                         "generators have different dimensions");
      }
    }
    auto step = [&](BoolMatrix const& e, std::size_t g) {
      return e.multiply(generators[g]);
    };
    auto closure = detail::run_closure<BoolMatrix, BoolMatrixHash>(
        generators, step, {opts.cap, 0, opts.threads}, kModule);
    return Semigroup(std::move(closure), opts.table_limit);
  }

  std::string word_label(Word const& w, std::vector<std::string> const& names) {
    bool single = std::all_of(names.begin(), names.end(), [](auto const& s) {
      return s.size() == 1;
    });
    std::string out;
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (!single && t > 0) {
        out += '.';
      }
      out += names.at(w[t]);
    }
    return out;
  }

  std::string element_label(Semigroup const&                s,
                            std::size_t                     e,
                            std::vector<std::string> const& names) {
    if (s.zero_index() == e) {
      return "0";
    }
    return word_label(s.word(e), names);
  }

  std::optional<std::size_t> find_by_label(Semigroup const&                s,
                                           std::string const&              label,
                                           std::vector<std::string> const& names) {
    for (std::size_t e = 0; e < s.size(); ++e) {
      if (element_label(s, e, names) == label) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::string multiplication_table(Semigroup const&                s,
                                   std::vector<std::string> const& names,
                                   std::vector<std::size_t> const& order_in) {
    std::vector<std::size_t> order = order_in;
    if (order.empty()) {
      for (std::size_t e = 0; e < s.size(); ++e) {
        order.push_back(e);
      }
    }
    std::vector<std::string> labels;
    std::size_t              width = 1;
    for (std::size_t e = 0; e < s.size(); ++e) {
      labels.push_back(element_label(s, e, names));
      width = std::max(width, labels.back().size());
    }
    auto pad = [&](std::string const& t) {
      return t + std::string(width - std::min(width, t.size()), ' ');
    };
    std::ostringstream os;
    os << pad("*") << " |";
    for (auto y : order) {
      os << ' ' << pad(labels[y]);
    }
    os << '\n' << std::string(width, '-') << "-+"
       << std::string(order.size() * (width + 1), '-') << '\n';
    for (auto x : order) {
      os << pad(labels[x]) << " |";
      for (auto y : order) {
        os << ' ' << pad(labels[s.product(x, y)]);
      }
      os << '\n';
    }
    return os.str();
  }

}  // namespace relrole
