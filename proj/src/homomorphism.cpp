#include "relrole/homomorphism.hpp"

#include <algorithm>

#include "relrole/blockmodel.hpp"
#include "relrole/error.hpp"

namespace relrole {

  namespace {
    constexpr char const* kModule = "semigroup";

    std::string describe_imperfect(DensityBlockmodel const& bm) {
      for (auto const& rel : bm.graph.relations()) {
        auto const& m = rel.matrix;
        for (std::size_t i = 0; i < m.size(); ++i) {
          for (std::size_t j = 0; j < m.size(); ++j) {
            if (m(i, j) != 0 && m(i, j) != 1) {
              return "relation \"" + rel.name + "\" has density "
                     + to_exact_string(m(i, j)) + " between blocks "
                     + bm.partition.block_labels()[i] + " and "
                     + bm.partition.block_labels()[j];
            }
          }
        }
      }
      return "densities are Boolean";
    }
  }  // namespace

  SemigroupHom induced_hom(std::shared_ptr<Semigroup const> source,
                           std::shared_ptr<Semigroup const> target,
                           Partition const&                 p) {
    if (source->num_generators() != target->num_generators()) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "source and target have different numbers of generators");
    }
    if (p.size() != source->dimension() || p.num_blocks() != target->dimension()) {
      throw InputError(kModule,
                       InputError::Kind::dimension_mismatch,
                       "partition does not map the source nodes onto the "
                       "target nodes");
    }
    SemigroupHom hom{source, target, {}, false};
    hom.mapping.reserve(source->size());
    std::vector<bool> hit(target->size(), false);
    for (std::size_t e = 0; e < source->size(); ++e) {
      std::size_t image = target->evaluate(source->word(e));
      auto        block = density_matrix(source->element(e), p);
      if (!block.is_boolean()) {
        throw NotPerfectError(1,
                              "element " + std::to_string(e)
                                  + " has a non-Boolean density; the "
                                    "partition is not perfect");
      }
      if (block.to_bool() != target->element(image)) {
        throw InternalError(kModule,
                            "word-image mismatch for source element "
                                + std::to_string(e));
      }
      hom.mapping.push_back(image);
      hit[image] = true;
    }
    for (std::size_t x = 0; x < source->size(); ++x) {
      for (std::size_t y = 0; y < source->size(); ++y) {
        if (hom.mapping[source->product(x, y)]
            != target->product(hom.mapping[x], hom.mapping[y])) {
          throw InternalError(kModule,
                              "homomorphism property fails at ("
                                  + std::to_string(x) + ","
                                  + std::to_string(y) + ")");
        }
      }
    }
    hom.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return hom;
  }

  SemigroupHom induced_hom(MultirelationalGraph const& g,
                           Partition const&            p,
                           SemigroupOptions const&     opts) {
    auto [bm, q] = density_blockmodel(g, p);
    if (!bm.is_perfect) {
      throw NotPerfectError(1,
                            "blockmodel is not perfect: "
                                + describe_imperfect(bm));
    }
    auto source = std::make_shared<Semigroup const>(
        generate_semigroup(g.matrices(), opts));
    auto target = std::make_shared<Semigroup const>(
        generate_semigroup(bm.quotient().matrices(), opts));
    return induced_hom(std::move(source), std::move(target), p);
  }

  SemigroupHom compose(SemigroupHom const& first, SemigroupHom const& second) {
    if (first.target != second.source) {
      throw InputError(kModule,
                       InputError::Kind::invalid_argument,
                       "homomorphisms are not composable");
    }
    SemigroupHom out{first.source, second.target, {}, false};
    std::vector<bool> hit(out.target->size(), false);
    for (auto e : first.mapping) {
      out.mapping.push_back(second.mapping[e]);
      hit[out.mapping.back()] = true;
    }
    out.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return out;
  }

  bool FunctorialityReport::passed() const noexcept {
    return std::all_of(triples.begin(),
                       triples.end(),
                       [](auto const& t) { return t.passed(); })
           && std::all_of(maps.begin(), maps.end(), [](auto const& m) {
                return m.surjective && m.graph_matches;
              });
  }

  FunctorialityReport check_functoriality(MultirelationalGraph const& g,
                                          NestedHierarchy const&      h,
                                          SemigroupOptions const&     opts) {
    if (h.base_size() != g.num_nodes()) {
      throw InputError(kModule,
                       InputError::Kind::dimension_mismatch,
                       "hierarchy covers " + std::to_string(h.base_size())
                           + " nodes but the graph has "
                           + std::to_string(g.num_nodes()));
    }
    std::size_t const p = h.num_levels();
    FunctorialityReport report;

    std::vector<MultirelationalGraph> graphs{g};
    for (std::size_t j = 1; j <= p; ++j) {
      auto [bm, q] = density_blockmodel(graphs.back(), h.relative_partition(j - 1, j));
      if (!bm.is_perfect) {
        throw NotPerfectError(j,
                              "level " + std::to_string(j)
                                  + " is not a perfect blockmodel of level "
                                  + std::to_string(j - 1) + ": "
                                  + describe_imperfect(bm));
      }
      graphs.push_back(bm.quotient());
    }

    std::vector<std::shared_ptr<Semigroup const>> sgs;
    for (std::size_t j = 0; j <= p; ++j) {
      sgs.push_back(std::make_shared<Semigroup const>(
          generate_semigroup(graphs[j].matrices(), opts)));
      report.levels.push_back({j,
                               graphs[j].num_nodes(),
                               sgs[j]->size(),
                               sgs[j]->zero_index().has_value(),
                               graphs[j]});
    }

    // homs[i][j] for i < j, computed directly from the partition i -> j
    std::vector<std::vector<SemigroupHom>> homs(p + 1,
                                                std::vector<SemigroupHom>(p + 1));
    for (std::size_t i = 0; i <= p; ++i) {
      for (std::size_t j = i + 1; j <= p; ++j) {
        auto rel   = h.relative_partition(i, j);
        homs[i][j] = induced_hom(sgs[i], sgs[j], rel);
        auto [bm, q] = density_blockmodel(graphs[i], rel);
        bool same = bm.is_perfect && bm.quotient().matrices() == graphs[j].matrices();
        report.maps.push_back({i, j, homs[i][j].surjective, same});
      }
    }
    for (std::size_t i = 0; i <= p; ++i) {
      for (std::size_t k = i + 1; k <= p; ++k) {
        for (std::size_t j = k + 1; j <= p; ++j) {
          auto        composite = compose(homs[i][k], homs[k][j]);
          std::size_t bad       = 0;
          for (std::size_t e = 0; e < composite.mapping.size(); ++e) {
            bad += composite.mapping[e] != homs[i][j].mapping[e];
          }
          report.triples.push_back({i, k, j, bad});
        }
      }
    }
    return report;
  }

}  // namespace relrole
