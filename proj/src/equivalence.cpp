#include "relrole/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "relrole/error.hpp"

namespace relrole {

  namespace {
    constexpr char const* kModule = "equivalence";

    double entry(BoolMatrix const& m, std::size_t i, std::size_t j) {
      return m.get(i, j) ? 1.0 : 0.0;
    }

    double entry(WeightMatrix const& m, std::size_t i, std::size_t j) {
      return m(i, j).convert_to<double>();
    }

    template <typename Matrix>
    std::vector<std::size_t> selected(BasicGraph<Matrix> const&       g,
                                      std::vector<std::size_t> const& relations) {
      if (relations.empty()) {
        std::vector<std::size_t> all(g.num_relations());
        for (std::size_t s = 0; s < all.size(); ++s) {
          all[s] = s;
        }
        return all;
      }
      for (auto s : relations) {
        if (s >= g.num_relations()) {
          throw InputError(kModule,
                           InputError::Kind::unknown_relation,
                           "relation index " + std::to_string(s)
                               + " out of range");
        }
      }
      return relations;
    }

    template <typename Matrix>
    std::vector<ProfileVector> all_profiles(BasicGraph<Matrix> const&       g,
                                            std::vector<std::size_t> const& rel) {
      std::vector<ProfileVector> out;
      out.reserve(g.num_nodes());
      for (std::size_t i = 0; i < g.num_nodes(); ++i) {
        out.push_back(profile_vector(g, i, rel));
      }
      return out;
    }
  }  // namespace

  template <typename Matrix>
  ProfileVector profile_vector(BasicGraph<Matrix> const&       g,
                               std::size_t                     i,
                               std::vector<std::size_t> const& relations) {
    std::size_t n = g.num_nodes();
    if (i >= n) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "node index " + std::to_string(i) + " out of range");
    }
    ProfileVector p{i, {}};
    for (auto s : selected(g, relations)) {
      auto const& m = g.relation(s).matrix;
      for (std::size_t k = 0; k < n; ++k) {
        p.values.push_back(entry(m, i, k));
      }
      for (std::size_t k = 0; k < n; ++k) {
        p.values.push_back(entry(m, k, i));
      }
    }
    return p;
  }

  std::pair<std::vector<double>, std::vector<double>>
  aligned_profiles(ProfileVector const& a,
                   ProfileVector const& b,
                   std::size_t          n,
                   bool                 ignore_self) {
    if (a.values.size() != b.values.size() || n == 0
        || a.values.size() % (2 * n) != 0) {
      throw InputError(kModule,
                       InputError::Kind::dimension_mismatch,
                       "profiles have incompatible lengths");
    }
    if (!ignore_self) {
      return {a.values, b.values};
    }
    std::size_t const i = a.node, j = b.node;
    std::pair<std::vector<double>, std::vector<double>> out;
    auto& [x, y] = out;
    for (std::size_t base = 0; base < a.values.size(); base += 2 * n) {
      auto row_a = a.values.begin() + base, col_a = row_a + n;
      auto row_b = b.values.begin() + base, col_b = row_b + n;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) {
          continue;
        }
        x.push_back(row_a[k]);
        y.push_back(row_b[k]);
        x.push_back(col_a[k]);
        y.push_back(col_b[k]);
      }
      x.push_back(row_a[i]);  // A(i,i)
      y.push_back(row_b[j]);  // A(j,j)
      if (i != j) {
        x.push_back(row_a[j]);  // A(i,j)
        y.push_back(row_b[i]);  // A(j,i)
      }
    }
    return out;
  }

  template <typename Matrix>
  Partition structural_partition(BasicGraph<Matrix> const&       g,
                                 std::vector<std::size_t> const& relations) {
    auto        rel      = selected(g, relations);
    auto        profiles = all_profiles(g, rel);
    std::size_t n        = g.num_nodes();
    // Each node joins the block of the first earlier representative it
    // matches; the relation is an equivalence so this is the coarsest one.
    std::vector<std::size_t> ids(n);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = reps.size();
      for (std::size_t b = 0; b < reps.size(); ++b) {
        auto [x, y] = aligned_profiles(profiles[reps[b]], profiles[i], n);
        if (x == y) {
          ids[i] = b;
          break;
        }
      }
      if (ids[i] == reps.size()) {
        reps.push_back(i);
      }
    }
    return Partition::from_assignment(ids);
  }

  template <typename Matrix>
  DistanceMatrix distance_matrix(BasicGraph<Matrix> const& g,
                                 Metric                    metric,
                                 DistanceOptions const&    opts) {
    auto        rel      = selected(g, opts.relations);
    auto        profiles = all_profiles(g, rel);
    std::size_t n        = g.num_nodes();

    DistanceMatrix d{metric, n, std::vector<double>(n * n, 0.0), {}};
    std::vector<char> zero_flag(n * n, 0);

    auto fill_row = [&](std::size_t i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        auto [x, y] = aligned_profiles(profiles[i], profiles[j], n);
        double v    = 0.0;
        if (metric == Metric::euclidean) {
          double s = 0.0;
          for (std::size_t t = 0; t < x.size(); ++t) {
            s += (x[t] - y[t]) * (x[t] - y[t]);
          }
          v = std::sqrt(s);
        } else if (x != y) {
          double dot = 0.0, nx = 0.0, ny = 0.0;
          for (std::size_t t = 0; t < x.size(); ++t) {
            dot += x[t] * y[t];
            nx += x[t] * x[t];
            ny += y[t] * y[t];
          }
          if (nx == 0.0 || ny == 0.0) {
            v                     = 1.0;
            zero_flag[i * n + j] = 1;
          } else {
            v = std::clamp(1.0 - dot / (std::sqrt(nx) * std::sqrt(ny)), 0.0, 1.0);
          }
        } else if (std::all_of(x.begin(), x.end(), [](double t) { return t == 0.0; })) {
          zero_flag[i * n + j] = 1;
        }
        d.values[i * n + j] = v;
        d.values[j * n + i] = v;
      }
    };

    unsigned threads = std::max(1U, std::min<unsigned>(opts.threads, n));
    if (threads == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        fill_row(i);
      }
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < n; i += threads) {
            fill_row(i);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (zero_flag[i * n + j]) {
          d.zero_profile_pairs.emplace_back(i, j);
        }
      }
    }
    return d;
  }

  Partition agglomerate(DistanceMatrix const& d, ClusterTarget target) {
    std::size_t const n = d.n;
    if (auto const* nb = std::get_if<NumBlocks>(&target)) {
      if (nb->k < 1 || nb->k > n) {
        throw InputError(kModule,
                         InputError::Kind::invalid_argument,
                         "number of blocks must lie in [1, "
                             + std::to_string(n) + "], got "
                             + std::to_string(nb->k));
      }
    } else if (!(std::get<Threshold>(target).t >= 0.0)) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "threshold must be nonnegative");
    }

    // clusters kept sorted by minimum member; link(a,b) is complete linkage
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < n; ++i) {
      clusters.push_back({i});
    }
    std::vector<std::vector<double>> link(n, std::vector<double>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        link[a][b] = d(a, b);
      }
    }

    while (clusters.size() > 1) {
      if (auto const* nb = std::get_if<NumBlocks>(&target);
          nb && clusters.size() <= nb->k) {
        break;
      }
      std::size_t best_a = 0, best_b = 1;
      double      best   = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < clusters.size(); ++a) {
        for (std::size_t b = a + 1; b < clusters.size(); ++b) {
          if (link[a][b] < best) {
            best   = link[a][b];
            best_a = a;
            best_b = b;
          }
        }
      }
      if (auto const* th = std::get_if<Threshold>(&target); th && best > th->t) {
        break;
      }
      auto& into = clusters[best_a];
      into.insert(into.end(), clusters[best_b].begin(), clusters[best_b].end());
      std::sort(into.begin(), into.end());
      for (std::size_t c = 0; c < clusters.size(); ++c) {
        double m          = std::max(link[best_a][c], link[best_b][c]);
        link[best_a][c]   = m;
        link[c][best_a]   = m;
      }
      link[best_a][best_a] = 0.0;
      clusters.erase(clusters.begin() + best_b);
      link.erase(link.begin() + best_b);
      for (auto& row : link) {
        row.erase(row.begin() + best_b);
      }
    }
    return Partition::from_blocks(std::move(clusters), n);
  }

  template ProfileVector profile_vector(MultirelationalGraph const&,
                                        std::size_t,
                                        std::vector<std::size_t> const&);
  template ProfileVector profile_vector(WeightedMultirelationalGraph const&,
                                        std::size_t,
                                        std::vector<std::size_t> const&);
  template Partition structural_partition(MultirelationalGraph const&,
                                          std::vector<std::size_t> const&);
  template Partition structural_partition(WeightedMultirelationalGraph const&,
                                          std::vector<std::size_t> const&);
  template DistanceMatrix distance_matrix(MultirelationalGraph const&,
                                          Metric,
                                          DistanceOptions const&);
  template DistanceMatrix distance_matrix(WeightedMultirelationalGraph const&,
                                          Metric,
                                          DistanceOptions const&);

}  // namespace relrole
