#ifndef RELROLE_CLOSURE_HPP_
#define RELROLE_CLOSURE_HPP_

// Breadth-first enumeration of the elements generated by a finite set of
// generators under right multiplication. Shared by the Boolean and the
// truncated semigroups.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <thread>
#include <unordered_map>
#include <vector>

#include "relrole/error.hpp"

namespace relrole {

  using Word = std::vector<std::uint32_t>;

  inline constexpr std::size_t UNDEFINED = std::numeric_limits<std::size_t>::max();

  namespace detail {

    struct ClosureOptions {
      std::size_t cap        = 100'000;
      std::size_t max_length = 0;  // 0 = unbounded
      unsigned    threads    = 1;
    };

    template <typename Elem>
    struct Closure {
      std::vector<Elem>        elements;
      std::vector<Word>        words;
      std::vector<std::size_t> generator_indices;
      // right[e * r + g]: index of element e times generator g, UNDEFINED
      // when e sits at the length limit.
      std::vector<std::size_t> right;
      std::size_t              num_generators = 0;
    };

    // Elements are appended in order of (word length, lexicographic word),
    // so every stored word is the lexicographically least among the
    // shortest words evaluating to its element. The order depends only on
    // the inputs, never on `threads`.
    template <typename Elem, typename Hash, typename Step>
    Closure<Elem> run_closure(std::vector<Elem> const& gens,
                              Step const&              step,
                              ClosureOptions const&    opts,
                              char const*              module) {
      Closure<Elem> c;
      std::size_t const r = gens.size();
      c.num_generators    = r;
      std::unordered_map<std::size_t, std::vector<std::size_t>> index;
      Hash const                                                hasher{};

      auto find = [&](Elem const& e, std::size_t h) -> std::size_t {
        auto it = index.find(h);
        if (it != index.end()) {
          for (auto i : it->second) {
            if (c.elements[i] == e) {
              return i;
            }
          }
        }
        return UNDEFINED;
      };
      auto add = [&](Elem e, std::size_t h, Word w, std::size_t length) {
        index[h].push_back(c.elements.size());
        c.elements.push_back(std::move(e));
        c.words.push_back(std::move(w));
        c.right.resize(c.right.size() + r, UNDEFINED);
        if (c.elements.size() > opts.cap) {
          throw CapExceeded(module, c.elements.size(), length);
        }
        return c.elements.size() - 1;
      };

      std::vector<std::size_t> frontier;
      for (std::size_t g = 0; g < r; ++g) {
        auto h = hasher(gens[g]);
        auto i = find(gens[g], h);
        if (i == UNDEFINED) {
          i = add(gens[g], h, Word{static_cast<std::uint32_t>(g)}, 1);
          frontier.push_back(i);
        }
        c.generator_indices.push_back(i);
      }

      unsigned const threads = std::max(1U, opts.threads);
      std::size_t    length  = 1;
      std::size_t const chunk = 4096;
      while (!frontier.empty()
             && (opts.max_length == 0 || length < opts.max_length)) {
        std::vector<std::size_t> next;
        for (std::size_t start = 0; start < frontier.size(); start += chunk) {
          std::size_t const stop  = std::min(frontier.size(), start + chunk);
          std::size_t const total = (stop - start) * r;
          std::vector<Elem>        products(total);
          std::vector<std::size_t> hashes(total);
          auto work = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t t = lo; t < hi; ++t) {
              products[t] = step(c.elements[frontier[start + t / r]], t % r);
              hashes[t]   = hasher(products[t]);
            }
          };
          if (threads == 1 || total < 64) {
            work(0, total);
          } else {
            std::vector<std::thread> pool;
            std::size_t const per = (total + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
              std::size_t lo = t * per, hi = std::min(total, lo + per);
              if (lo < hi) {
                pool.emplace_back(work, lo, hi);
              }
            }
            for (auto& th : pool) {
              th.join();
            }
          }
          for (std::size_t t = 0; t < total; ++t) {
            std::size_t const src = frontier[start + t / r];
            std::size_t const g   = t % r;
            std::size_t       i   = find(products[t], hashes[t]);
            if (i == UNDEFINED) {
              Word w = c.words[src];
              w.push_back(static_cast<std::uint32_t>(g));
              i = add(std::move(products[t]), hashes[t], std::move(w), length + 1);
              next.push_back(i);
            }
            c.right[src * r + g] = i;
          }
        }
        frontier = std::move(next);
        ++length;
      }
      return c;
    }

  }  // namespace detail
}  // namespace relrole

#endif  // RELROLE_CLOSURE_HPP_
