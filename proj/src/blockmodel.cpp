#include "relrole/blockmodel.hpp"

#include "relrole/error.hpp"

namespace relrole {

  namespace {
    constexpr char const* kModule = "blockmodel";

    void check_size(std::size_t n, Partition const& p) {
      if (n != p.size()) {
        throw InputError(kModule,
                         InputError::Kind::dimension_mismatch,
                         "partition covers " + std::to_string(p.size())
                             + " nodes but the matrix is "
                             + std::to_string(n) + "x" + std::to_string(n));
      }
    }

    Rational weight(BoolMatrix const& a, std::size_t i, std::size_t j) {
      return a.get(i, j) ? 1 : 0;
    }

    Rational const& weight(WeightMatrix const& a, std::size_t i, std::size_t j) {
      return a(i, j);
    }

    template <typename Matrix>
    WeightMatrix density(Matrix const& a, Partition const& p) {
      check_size(a.size(), p);
      std::size_t  m = p.num_blocks();
      WeightMatrix out(m);
      for (std::size_t bi = 0; bi < m; ++bi) {
        for (std::size_t bj = 0; bj < m; ++bj) {
          Rational sum = 0;
          for (auto i : p.block(bi)) {
            for (auto j : p.block(bj)) {
              sum += weight(a, i, j);
            }
          }
          out(bi, bj) = sum / (p.block(bi).size() * p.block(bj).size());
        }
      }
      return out;
    }
  }  // namespace

  std::vector<std::size_t> block_order(Partition const& p) {
    std::vector<std::size_t> order;
    order.reserve(p.size());
    for (auto const& block : p.blocks()) {
      order.insert(order.end(), block.begin(), block.end());
    }
    return order;
  }

  BoolMatrix permuted_matrix(BoolMatrix const& a, Partition const& p) {
    check_size(a.size(), p);
    auto       order = block_order(p);
    BoolMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        out.set(i, j, a.get(order[i], order[j]));
      }
    }
    return out;
  }

  WeightMatrix permuted_matrix(WeightMatrix const& a, Partition const& p) {
    check_size(a.size(), p);
    auto         order = block_order(p);
    WeightMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        out(i, j) = a(order[i], order[j]);
      }
    }
    return out;
  }

  WeightMatrix density_matrix(BoolMatrix const& a, Partition const& p) {
    return density(a, p);
  }

  WeightMatrix density_matrix(WeightMatrix const& a, Partition const& p) {
    return density(a, p);
  }

  MultirelationalGraph DensityBlockmodel::quotient() const {
    if (!is_perfect) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "blockmodel is not perfect; its densities are not Boolean");
    }
    return to_boolean(graph);
  }

  template <typename Matrix>
  std::pair<DensityBlockmodel, QuotientMap>
  density_blockmodel(BasicGraph<Matrix> const& g, Partition const& p) {
    check_size(g.num_nodes(), p);
    std::vector<Relation<WeightMatrix>> rels;
    bool                                perfect = true;
    for (auto const& rel : g.relations()) {
      auto d  = density_matrix(rel.matrix, p);
      perfect = perfect && d.is_boolean();
      rels.push_back({rel.name, std::move(d)});
    }
    DensityBlockmodel bm{
        p,
        WeightedMultirelationalGraph(p.block_labels(), std::move(rels)),
        perfect,
        std::is_same_v<Matrix, WeightMatrix>};
    return {std::move(bm), QuotientMap::of(p)};
  }

  template std::pair<DensityBlockmodel, QuotientMap>
  density_blockmodel(MultirelationalGraph const&, Partition const&);
  template std::pair<DensityBlockmodel, QuotientMap>
  density_blockmodel(WeightedMultirelationalGraph const&, Partition const&);

  DefaultDelta default_delta(BoolMatrix const& a) {
    std::size_t n = a.size();
    if (n == 0) {
      return {Rational(0), true};
    }
    std::size_t ones = a.count();
    return {Rational(ones, n * n), ones == 0};
  }

  BoolMatrix image_matrix(WeightMatrix const& d, Rational const& delta) {
    if (delta <= 0 || delta > 1) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "image threshold must lie in (0,1], got "
                           + to_exact_string(delta));
    }
    BoolMatrix out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        out.set(i, j, d(i, j) >= delta);
      }
    }
    return out;
  }

  BoolMatrix lean_fit(WeightMatrix const& d) {
    BoolMatrix out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        out.set(i, j, d(i, j) > 0);
      }
    }
    return out;
  }

}  // namespace relrole
