#include "relrole/report.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace relrole {

  char const* to_string(Metric m) {
    return m == Metric::euclidean ? "euclidean" : "cosine_distance";
  }

  char const* to_string(RoundingMode m) {
    return m == RoundingMode::none ? "none" : "per_step";
  }

  char const* to_string(RoundingRule r) {
    return r == RoundingRule::half_even ? "half_even" : "half_up";
  }

  ordered_json to_json(BoolMatrix const& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::string row;
      for (std::size_t j = 0; j < m.size(); ++j) {
        row += m.get(i, j) ? '1' : '0';
      }
      rows.push_back(row);
    }
    return rows;
  }

  ordered_json to_json(WeightMatrix const& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < m.size(); ++j) {
        row.push_back(to_exact_string(m(i, j)));
      }
      rows.push_back(row);
    }
    return rows;
  }

  ordered_json words_json(std::vector<Word> const&        words,
                          std::vector<std::string> const& names) {
    ordered_json out = ordered_json::array();
    for (auto const& w : words) {
      ordered_json letters = ordered_json::array();
      for (auto g : w) {
        letters.push_back(names.at(g));
      }
      out.push_back(letters);
    }
    return out;
  }

  ordered_json semigroup_json(Semigroup const& s, std::vector<std::string> const& names) {
    ordered_json j;
    j["generators"] = names;
    j["size"]       = s.size();
    j["size_without_zero"] = s.size() - (s.zero_index() ? 1 : 0);
    j["zero_index"] = s.zero_index() ? ordered_json(*s.zero_index()) : ordered_json(nullptr);
    j["generator_indices"] = s.generator_indices();
    j["words"]             = words_json(s.words(), names);
    ordered_json labels    = ordered_json::array();
    ordered_json elements  = ordered_json::array();
    for (std::size_t e = 0; e < s.size(); ++e) {
      labels.push_back(element_label(s, e, names));
      elements.push_back(to_json(s.element(e)));
    }
    j["labels"]   = labels;
    j["elements"] = elements;
    if (s.has_table()) {
      ordered_json table = ordered_json::array();
      for (std::size_t x = 0; x < s.size(); ++x) {
        ordered_json row = ordered_json::array();
        for (std::size_t y = 0; y < s.size(); ++y) {
          row.push_back(s.product(x, y));
        }
        table.push_back(row);
      }
      j["table"] = table;
    } else {
      j["table"] = nullptr;
    }
    return j;
  }

  ordered_json truncated_json(TruncatedSemigroup const&       s,
                              std::vector<std::string> const& names) {
    auto         rep = truncated_report(s);
    ordered_json j;
    j["k"]      = s.k();
    j["policy"] = {{"mode", to_string(s.policy().mode)},
                   {"digits", s.policy().mode == RoundingMode::none
                                  ? ordered_json(nullptr)
                                  : ordered_json(s.policy().digits)},
                   {"rule", s.policy().mode == RoundingMode::none
                                ? ordered_json(nullptr)
                                : ordered_json(to_string(s.policy().rule))}};
    j["generators"] = names;
    j["counts"]     = {{"all", rep.all},
                       {"excluding_generators", rep.non_generator},
                       {"excluding_generators_and_zero", rep.non_generator_nonzero}};
    j["census"]              = rep.census;
    j["stabilization_depth"] = rep.stabilization_depth;
    j["zero_index"] = s.zero_index() ? ordered_json(*s.zero_index()) : ordered_json(nullptr);
    j["zero_is_truncation_sink"] = s.zero_is_sink();
    j["generator_indices"]       = s.generator_indices();
    std::vector<Word> words;
    std::vector<std::size_t> lengths;
    ordered_json elements = ordered_json::array();
    for (std::size_t e = 0; e < s.size(); ++e) {
      words.push_back(s.word(e));
      lengths.push_back(s.length(e));
      elements.push_back(to_json(s.element(e)));
    }
    j["words"]    = words_json(words, names);
    j["lengths"]  = lengths;
    j["elements"] = elements;
    if (s.has_table()) {
      ordered_json table = ordered_json::array();
      for (std::size_t x = 0; x < s.size(); ++x) {
        ordered_json row = ordered_json::array();
        for (std::size_t y = 0; y < s.size(); ++y) {
          row.push_back(s.product(x, y));
        }
        table.push_back(row);
      }
      j["table"] = table;
    } else {
      j["table"] = nullptr;
    }
    return j;
  }

  std::string matrix_text(WeightMatrix const& m, std::optional<unsigned> digits) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.size(); ++j) {
        os << (j ? ", " : "")
           << (digits ? to_fixed_string(m(i, j), *digits) : to_exact_string(m(i, j)));
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

  std::string matrix_text(BoolMatrix const& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        os << (j ? " " : "") << (m.get(i, j) ? 1 : 0);
      }
      os << '\n';
    }
    return os.str();
  }

  std::string truncated_listing(TruncatedSemigroup const&       s,
                                std::vector<std::string> const& names,
                                std::size_t                     max_words) {
    auto rep = truncated_report(s);
    std::optional<unsigned> digits;
    if (s.policy().mode == RoundingMode::per_step) {
      digits = s.policy().digits;
    }
    std::size_t const r = s.num_generators();
    std::ostringstream os;
    os << "k = " << s.k() << ", rounding " << to_string(s.policy().mode);
    if (digits) {
      os << " (" << *digits << " digits, " << to_string(s.policy().rule) << ")";
    }
    os << "\nelements: " << rep.all << " (excluding generators: "
       << rep.non_generator << ", excluding generators and zero: "
       << rep.non_generator_nonzero << ")\n"
       << "stabilization depth: " << rep.stabilization_depth << '\n';

    for (std::size_t l = rep.census.size(); l >= 1; --l) {
      os << '\n' << l << "-fold products (" << rep.census[l - 1] << " new):\n";
      // enumerate all words of length l when affordable
      double total = std::pow(static_cast<double>(r), static_cast<double>(l));
      std::map<std::size_t, std::vector<Word>> by_element;
      if (total <= static_cast<double>(max_words)) {
        Word w(l, 0);
        while (true) {
          auto e = s.evaluate(w);
          if (e != UNDEFINED && s.length(e) == l) {
            by_element[e].push_back(w);
          }
          std::size_t pos = l;
          while (pos > 0 && w[pos - 1] + 1 == r) {
            w[--pos] = 0;
          }
          if (pos == 0) {
            break;
          }
          ++w[pos - 1];
        }
      } else {
        for (std::size_t e = 0; e < s.size(); ++e) {
          if (s.length(e) == l) {
            by_element[e].push_back(s.word(e));
          }
        }
      }
      for (auto const& [e, ws] : by_element) {
        os << "  ";
        for (std::size_t t = 0; t < ws.size(); ++t) {
          os << (t ? " = " : "") << word_label(ws[t], names);
        }
        os << " = " << matrix_text(s.element(e), digits) << '\n';
      }
    }
    if (s.zero_is_sink()) {
      os << "\nzero matrix adjoined for products longer than " << s.k() << '\n';
    }
    return os.str();
  }

  ordered_json blockmodel_json(DensityBlockmodel const& bm) {
    ordered_json j;
    j["is_perfect"]     = bm.is_perfect;
    j["weighted_input"] = bm.weighted_input;
    j["blocks"]         = ordered_json::array();
    for (std::size_t b = 0; b < bm.partition.num_blocks(); ++b) {
      j["blocks"].push_back({{"label", bm.partition.block_labels()[b]},
                             {"size", bm.partition.block(b).size()}});
    }
    j["densities"] = ordered_json::object();
    for (auto const& rel : bm.graph.relations()) {
      j["densities"][rel.name] = to_json(rel.matrix);
    }
    return j;
  }

  ordered_json distance_json(DistanceMatrix const&           d,
                             std::vector<std::string> const& node_labels) {
    ordered_json j;
    j["metric"] = to_string(d.metric);
    j["nodes"]  = node_labels;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < d.n; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t k = 0; k < d.n; ++k) {
        row.push_back(d(i, k));
      }
      rows.push_back(row);
    }
    j["values"] = rows;
    ordered_json flagged = ordered_json::array();
    for (auto [a, b] : d.zero_profile_pairs) {
      flagged.push_back({node_labels[a], node_labels[b]});
    }
    j["zero_profile_pairs"] = flagged;
    return j;
  }

  ordered_json hom_json(SemigroupHom const& hom, std::vector<std::string> const& names) {
    ordered_json j;
    j["source_size"] = hom.source->size();
    j["target_size"] = hom.target->size();
    j["surjective"]  = hom.surjective;
    j["homomorphism_verified"] = true;
    ordered_json map = ordered_json::array();
    for (std::size_t e = 0; e < hom.mapping.size(); ++e) {
      map.push_back({{"source", element_label(*hom.source, e, names)},
                     {"target", element_label(*hom.target, hom.mapping[e], names)}});
    }
    j["mapping"] = map;
    return j;
  }

  ordered_json functoriality_json(FunctorialityReport const& rep) {
    ordered_json j;
    j["passed"] = rep.passed();
    j["levels"] = ordered_json::array();
    for (auto const& l : rep.levels) {
      j["levels"].push_back({{"level", l.level},
                             {"nodes", l.num_nodes},
                             {"semigroup_size", l.semigroup_size},
                             {"has_zero", l.has_zero}});
    }
    j["maps"] = ordered_json::array();
    for (auto const& m : rep.maps) {
      j["maps"].push_back({{"from", m.from},
                           {"to", m.to},
                           {"surjective", m.surjective},
                           {"graph_matches", m.graph_matches}});
    }
    j["triples"] = ordered_json::array();
    for (auto const& t : rep.triples) {
      j["triples"].push_back({{"i", t.i},
                              {"k", t.k},
                              {"j", t.j},
                              {"passed", t.passed()},
                              {"mismatches", t.mismatches}});
    }
    return j;
  }

}  // namespace relrole
