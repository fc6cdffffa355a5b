#ifndef RELROLE_TESTS_SUPPORT_HPP_
#define RELROLE_TESTS_SUPPORT_HPP_

// Helpers shared by the test binaries: small builders, a seeded RNG and
// naive reference implementations that do not reuse library code.

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <map>
#include <string>
#include <vector>

#include "relrole/blockmodel.hpp"
#include "relrole/fixtures.hpp"
#include "relrole/graph.hpp"
#include "relrole/semigroup.hpp"
#include "relrole/truncated.hpp"

namespace relrole::testing {

  using Rows = std::vector<std::string>;

  inline BoolMatrix bm(Rows const& rows) {
    BoolMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        m.set(i, j, rows[i][j] == '1');
      }
    }
    return m;
  }

  inline Rational q(char const* s) {
    return *parse_rational(s);
  }

  inline MultirelationalGraph fig1() {
    return std::get<MultirelationalGraph>(fixtures::get("fig1").graph);
  }

  inline WeightedMultirelationalGraph monks() {
    return std::get<WeightedMultirelationalGraph>(fixtures::get("monks-density").graph);
  }

  inline Partition fig1_partition() {
    return *fixtures::get("fig1").partition;
  }

  inline std::filesystem::path scratch_dir(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path()
               / ("relrole-test-" + name + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
  }

  // --- random inputs -------------------------------------------------------

  inline BoolMatrix random_bool(std::mt19937_64& rng, std::size_t n, double p = 0.3) {
    std::bernoulli_distribution coin(p);
    BoolMatrix                  m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.set(i, j, coin(rng));
      }
    }
    return m;
  }

  // Entries a/den with 0 <= a <= den.
  inline WeightMatrix random_weight(std::mt19937_64& rng,
                                    std::size_t      n,
                                    int              den = 20) {
    std::uniform_int_distribution<int> d(0, den);
    WeightMatrix                       m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = Rational(d(rng), den);
      }
    }
    return m;
  }

  inline MultirelationalGraph random_graph(std::mt19937_64& rng,
                                           std::size_t      n,
                                           std::size_t      r,
                                           double           p = 0.3) {
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < n; ++i) {
      nodes.push_back("v" + std::to_string(i));
    }
    std::vector<Relation<BoolMatrix>> rels;
    for (std::size_t s = 0; s < r; ++s) {
      rels.push_back({"R" + std::to_string(s), random_bool(rng, n, p)});
    }
    return {nodes, rels};
  }

  // Replaces every node of `t` by a block of random size in [1, max_block]:
  // ties between blocks are all present or all absent, so the blocks form a
  // perfect blockmodel whose image is `t`.
  struct BlowUp {
    MultirelationalGraph     graph;
    Partition                partition;
    std::vector<std::size_t> ids;  // template node of each new node
  };

  inline BlowUp blow_up(MultirelationalGraph const& t,
                        std::mt19937_64&            rng,
                        std::size_t                 max_block) {
    std::uniform_int_distribution<std::size_t> size(1, max_block);
    std::vector<std::size_t>                   ids;
    for (std::size_t b = 0; b < t.num_nodes(); ++b) {
      ids.insert(ids.end(), size(rng), b);
    }
    std::shuffle(ids.begin(), ids.end(), rng);
    std::size_t const        n = ids.size();
    std::vector<std::string> nodes;
    for (std::size_t i = 0; i < n; ++i) {
      nodes.push_back("u" + std::to_string(i));
    }
    std::vector<Relation<BoolMatrix>> rels;
    for (auto const& rel : t.relations()) {
      BoolMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m.set(i, j, rel.matrix.get(ids[i], ids[j]));
        }
      }
      rels.push_back({rel.name, m});
    }
    // Block numbering by first occurrence may differ from the template's.
    return {MultirelationalGraph(nodes, rels), Partition::from_assignment(ids), ids};
  }

  // --- naive oracles -------------------------------------------------------

  using Dense = std::vector<std::vector<int>>;

  inline Dense dense(BoolMatrix const& m) {
    Dense d(m.size(), std::vector<int>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        d[i][j] = m.get(i, j);
      }
    }
    return d;
  }

  inline Dense naive_product(Dense const& a, Dense const& b) {
    std::size_t n = a.size();
    Dense       c(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (a[i][k] && b[k][j]) {
            c[i][j] = 1;
          }
        }
      }
    }
    return c;
  }

  // Every distinct matrix of a word of length 1..max_len, with the first
  // word reaching it. Words are enumerated one by one in (length, lex)
  // order, so the recorded word is the lex-least shortest one.
  inline std::map<Dense, Word> brute_force_elements(std::vector<BoolMatrix> const& gens,
                                                    std::size_t max_len) {
    std::map<Dense, Word>                  seen;
    std::vector<std::pair<Dense, Word>>    layer;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      layer.push_back({dense(gens[g]), Word{static_cast<std::uint32_t>(g)}});
    }
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
      std::vector<std::pair<Dense, Word>> next;
      for (auto const& [m, w] : layer) {
        seen.emplace(m, w);
        if (len < max_len) {
          for (std::size_t g = 0; g < gens.size(); ++g) {
            Word v = w;
            v.push_back(static_cast<std::uint32_t>(g));
            next.push_back({naive_product(m, dense(gens[g])), std::move(v)});
          }
        }
      }
      layer = std::move(next);
    }
    return seen;
  }

  inline WeightMatrix naive_max_times(WeightMatrix const& a, WeightMatrix const& b) {
    std::size_t  n = a.size();
    WeightMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational best = 0;
        for (std::size_t k = 0; k < n; ++k) {
          Rational v = a(i, k) * b(k, j);
          if (v > best) {
            best = v;
          }
        }
        c(i, j) = best;
      }
    }
    return c;
  }

}  // namespace relrole::testing

#endif  // RELROLE_TESTS_SUPPORT_HPP_
