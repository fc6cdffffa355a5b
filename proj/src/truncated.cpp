#include "relrole/truncated.hpp"

#include <algorithm>

#include "relrole/error.hpp"

namespace relrole {

  namespace {
    constexpr char const* kModule = "trunc-semigroup";
  }

  WeightMatrix max_times(WeightMatrix const& a, WeightMatrix const& b) {
    if (a.size() != b.size()) {
      throw InputError(kModule,
                       InputError::Kind::dimension_mismatch,
                       "cannot multiply matrices of sizes "
                           + std::to_string(a.size()) + " and "
                           + std::to_string(b.size()));
    }
    std::size_t const n = a.size();
    WeightMatrix      c(n);
    Rational          t;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        auto const& aik = a(i, k);
        if (aik == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          t = aik * b(k, j);
          if (t > c(i, j)) {
            c(i, j) = t;
          }
        }
      }
    }
    return c;
  }

  WeightMatrix round_matrix(WeightMatrix const& a,
                            unsigned            digits,
                            RoundingRule        rule) {
    WeightMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        out(i, j) = round_decimal(a(i, j), digits, rule);
      }
    }
    return out;
  }

  TruncatedSemigroup::TruncatedSemigroup(detail::Closure<WeightMatrix> c,
                                         std::size_t                   k,
                                         RoundingPolicy                policy,
                                         std::size_t                   table_limit)
      : _k(k),
        _policy(policy),
        _elements(std::move(c.elements)),
        _words(std::move(c.words)),
        _generator_indices(std::move(c.generator_indices)),
        _right(std::move(c.right)) {
    std::size_t longest = 0;
    for (std::size_t e = 0; e < _elements.size(); ++e) {
      _lengths.push_back(_words[e].size());
      longest = std::max(longest, _lengths.back());
      if (!_zero && _elements[e].is_zero()) {
        _zero = e;
      }
    }
    // some product of two elements is truncated
    if (!_zero && 2 * longest > _k) {
      std::size_t const r = _generator_indices.size();
      _zero               = _elements.size();
      _sink               = true;
      _elements.emplace_back(_elements.front().size());
      _words.emplace_back();
      _lengths.push_back(_k + 1);
      _right.resize(_right.size() + r, *_zero);
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

  bool TruncatedSemigroup::is_generator(std::size_t e) const {
    return std::find(_generator_indices.begin(), _generator_indices.end(), e)
           != _generator_indices.end();
  }

  std::size_t TruncatedSemigroup::product(std::size_t x, std::size_t y) const {
    std::size_t const n = _elements.size();
    if (!_table.empty()) {
      return _table[x * n + y];
    }
    if (_lengths.at(x) + _lengths.at(y) > _k) {
      return *_zero;
    }
    std::size_t const r   = _generator_indices.size();
    std::size_t       cur = x;
    for (auto g : _words[y]) {
      cur = _right[cur * r + g];
    }
    return cur;
  }

  std::size_t TruncatedSemigroup::evaluate(Word const& w) const {
    std::size_t const r = _generator_indices.size();
    if (w.empty()) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "cannot evaluate the empty word");
    }
    for (auto g : w) {
      if (g >= r) {
        throw InputError(kModule,
                         InputError::Kind::unknown_relation,
                         "generator index " + std::to_string(g)
                             + " out of range");
      }
    }
    if (w.size() > _k) {
      return _zero.value_or(UNDEFINED);
    }
    std::size_t cur = _generator_indices[w.front()];
    for (std::size_t t = 1; t < w.size(); ++t) {
      cur = _right[cur * r + w[t]];
    }
    return cur;
  }

  std::optional<std::size_t> TruncatedSemigroup::find(WeightMatrix const& m) const {
    auto it = std::find(_elements.begin(), _elements.end(), m);
    if (it == _elements.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  TruncatedSemigroup generate_truncated(std::vector<WeightMatrix> const& generators,
                                        std::size_t                      k,
                                        RoundingPolicy                   policy,
                                        TruncatedOptions const&          opts) {
    if (k == 0) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "truncation depth k must be at least 1");
    }
    if (generators.empty()) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "at least one generator is required");
    }
    if (policy.mode == RoundingMode::per_step
        && policy.digits > RoundingPolicy::max_digits) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "rounding digits must be at most "
                           + std::to_string(RoundingPolicy::max_digits));
    }
    std::vector<WeightMatrix> gens;
    for (auto const& g : generators) {
      if (g.size() != generators.front().size()) {
        throw InputError(kModule,
                         InputError::Kind::dimension_mismatch,
                         "generators have different dimensions");
      }
      if (!g.in_unit_interval()) {
        throw InputError(kModule,
                         InputError::Kind::entry_out_of_range,
                         "generator entries must lie in [0,1]");
      }
      gens.push_back(policy.mode == RoundingMode::per_step
                         ? round_matrix(g, policy.digits, policy.rule)
                         : g);
    }
    auto step = [&](WeightMatrix const& e, std::size_t g) {
      auto m = max_times(e, gens[g]);
      return policy.mode == RoundingMode::per_step
                 ? round_matrix(m, policy.digits, policy.rule)
                 : m;
    };
    auto closure = detail::run_closure<WeightMatrix, WeightMatrixHash>(
        gens, step, {opts.cap, k, opts.threads}, kModule);
    return TruncatedSemigroup(std::move(closure), k, policy, opts.table_limit);
  }

  TruncatedReport truncated_report(TruncatedSemigroup const& s) {
    TruncatedReport rep;
    rep.zero_sink    = s.zero_is_sink();
    rep.zero_reached = s.zero_index().has_value() && !s.zero_is_sink();
    rep.all          = s.size();
    for (std::size_t e = 0; e < s.size(); ++e) {
      bool gen = s.is_generator(e);
      rep.non_generator += !gen;
      rep.non_generator_nonzero += !gen && s.zero_index() != e;
      if (s.zero_is_sink() && s.zero_index() == e) {
        continue;
      }
      std::size_t l = s.length(e);
      if (rep.census.size() < l) {
        rep.census.resize(l, 0);
      }
      ++rep.census[l - 1];
      rep.stabilization_depth = std::max(rep.stabilization_depth, l);
    }
    return rep;
  }

}  // namespace relrole
