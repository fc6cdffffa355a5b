#include "relrole/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "relrole/error.hpp"

namespace relrole {

  namespace {
    std::string default_label(std::size_t b) {
      return "B" + std::to_string(b + 1);
    }

    std::string describe(std::vector<std::size_t> const& block) {
      std::ostringstream os;
      os << '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        os << (i ? "," : "") << block[i] + 1;
      }
      os << '}';
      return os.str();
    }
  }  // namespace

  Partition Partition::from_assignment(std::span<std::size_t const> ids,
                                       std::vector<std::string> const& labels_by_id) {
    // first occurrence order == ascending minimum member
    std::map<std::size_t, std::size_t> canon;
    Partition                          p;
    p._assignment.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto [it, inserted] = canon.emplace(ids[i], p._blocks.size());
      if (inserted) {
        p._blocks.emplace_back();
        p._labels.push_back(labels_by_id.empty() ? default_label(it->second)
                                                 : labels_by_id.at(ids[i]));
      }
      p._blocks[it->second].push_back(i);
      p._assignment[i] = it->second;
    }
    return p;
  }

  Partition Partition::from_blocks(std::vector<std::vector<std::size_t>> blocks,
                                   std::size_t                           n) {
    std::vector<std::size_t> ids(n, n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw InputError("relgraph-core",
                         InputError::Kind::invalid_argument,
                         "partition block " + std::to_string(b + 1)
                             + " is empty");
      }
      for (auto i : blocks[b]) {
        if (i >= n) {
          throw InputError("relgraph-core",
                           InputError::Kind::unknown_node,
                           "node index " + std::to_string(i)
                               + " out of range");
        }
        if (ids[i] != n) {
          throw InputError("relgraph-core",
                           InputError::Kind::duplicate_node,
                           "node " + std::to_string(i + 1)
                               + " appears in two blocks");
        }
        ids[i] = b;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (ids[i] == n) {
        throw InputError("relgraph-core",
                         InputError::Kind::missing_node,
                         "node " + std::to_string(i + 1)
                             + " is not in any block");
      }
    }
    return from_assignment(ids);
  }

  Partition Partition::singletons(std::size_t n) {
    std::vector<std::size_t> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
      ids[i] = i;
    }
    return from_assignment(ids);
  }

  Partition Partition::whole(std::size_t n) {
    std::vector<std::size_t> ids(n, 0);
    return from_assignment(ids);
  }

  Partition Partition::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != num_blocks()) {
      throw InputError("relgraph-core",
                       InputError::Kind::invalid_argument,
                       "expected " + std::to_string(num_blocks())
                           + " block labels");
    }
    Partition p = *this;
    p._labels   = std::move(labels);
    return p;
  }

  QuotientMap QuotientMap::of(Partition const& p) {
    return QuotientMap{p.size(), p.num_blocks(), p.assignment()};
  }

  bool refine_check(Partition const& fine, Partition const& coarse) {
    if (fine.size() != coarse.size()) {
      throw InputError("blockmodel",
                       InputError::Kind::dimension_mismatch,
                       "partitions are over sets of different sizes ("
                           + std::to_string(fine.size()) + " and "
                           + std::to_string(coarse.size()) + ")");
    }
    for (auto const& block : fine.blocks()) {
      auto target = coarse.block_of(block.front());
      for (auto i : block) {
        if (coarse.block_of(i) != target) {
          return false;
        }
      }
    }
    return true;
  }

  QuotientMap compose_quotients(QuotientMap const& first,
                                QuotientMap const& second) {
    if (first.target_size != second.source_size) {
      throw InputError("blockmodel",
                       InputError::Kind::dimension_mismatch,
                       "cannot compose quotient maps: first has "
                           + std::to_string(first.target_size)
                           + " targets, second has "
                           + std::to_string(second.source_size) + " sources");
    }
    QuotientMap out{first.source_size, second.target_size, {}};
    out.assignment.reserve(first.assignment.size());
    for (auto b : first.assignment) {
      out.assignment.push_back(second.assignment.at(b));
    }
    return out;
  }

  NestedHierarchy::NestedHierarchy(std::vector<Partition> levels) {
    if (levels.empty()) {
      throw InputError("relgraph-core",
                       InputError::Kind::invalid_argument,
                       "a hierarchy needs at least one level");
    }
    std::size_t n = levels.front().size();
    _levels.push_back(Partition::singletons(n));
    for (std::size_t j = 0; j < levels.size(); ++j) {
      auto const& coarse = levels[j];
      auto const& fine   = _levels.back();
      if (coarse.size() != n) {
        throw InputError("relgraph-core",
                         InputError::Kind::dimension_mismatch,
                         "hierarchy level " + std::to_string(j + 1)
                             + " covers " + std::to_string(coarse.size())
                             + " nodes, expected " + std::to_string(n));
      }
      for (std::size_t b = 0; b < fine.num_blocks(); ++b) {
        auto const& block  = fine.block(b);
        auto        target = coarse.block_of(block.front());
        for (auto i : block) {
          if (coarse.block_of(i) != target) {
            std::string name = j == 0 ? describe(block) : fine.block_labels()[b];
            throw NestingError(
                j + 1,
                name,
                "hierarchy level " + std::to_string(j + 1)
                    + " does not coarsen level " + std::to_string(j)
                    + ": block " + name + " " + describe(block)
                    + " is split between blocks "
                    + coarse.block_labels()[target] + " and "
                    + coarse.block_labels()[coarse.block_of(i)]);
          }
        }
      }
      _levels.push_back(coarse);
    }
  }

  Partition const& NestedHierarchy::level(std::size_t j) const {
    return _levels.at(j);
  }

  QuotientMap NestedHierarchy::quotient_map(std::size_t i, std::size_t j) const {
    if (i > j || j >= _levels.size()) {
      throw InputError("relgraph-core",
                       InputError::Kind::invalid_argument,
                       "no quotient map from level " + std::to_string(i)
                           + " to level " + std::to_string(j));
    }
    auto const& from = _levels[i];
    auto const& to   = _levels[j];
    QuotientMap q{from.num_blocks(), to.num_blocks(), {}};
    for (auto const& block : from.blocks()) {
      q.assignment.push_back(to.block_of(block.front()));
    }
    return q;
  }

  Partition NestedHierarchy::relative_partition(std::size_t i,
                                                std::size_t j) const {
    auto q = quotient_map(i, j);
    return Partition::from_assignment(q.assignment, _levels[j].block_labels());
  }

}  // namespace relrole
