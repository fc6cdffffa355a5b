#ifndef RELROLE_PARTITION_HPP_
#define RELROLE_PARTITION_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace relrole {

  // A partition of {0, ..., n-1} into nonempty blocks. Blocks are always
  // held in canonical order (sorted by minimum member) with members
  // ascending, so two partitions of the same set compare equal iff they
  // group the nodes identically. Block labels ride along for output only.
  class Partition {
   public:
    Partition() = default;

    // `ids[i]` is an arbitrary block identifier for node i. If
    // `labels_by_id` is nonempty it must be indexed by those identifiers.
    static Partition from_assignment(std::span<std::size_t const> ids,
                                     std::vector<std::string> const& labels_by_id
                                     = {});

    // Throws InputError unless `blocks` covers {0..n-1} exactly once.
    static Partition from_blocks(std::vector<std::vector<std::size_t>> blocks,
                                 std::size_t                           n);

    static Partition singletons(std::size_t n);
    static Partition whole(std::size_t n);

    std::size_t size() const noexcept {
      return _assignment.size();
    }
    std::size_t num_blocks() const noexcept {
      return _blocks.size();
    }

    std::vector<std::vector<std::size_t>> const& blocks() const noexcept {
      return _blocks;
    }
    std::vector<std::size_t> const& block(std::size_t b) const {
      return _blocks.at(b);
    }
    std::size_t block_of(std::size_t node) const {
      return _assignment.at(node);
    }
    std::vector<std::size_t> const& assignment() const noexcept {
      return _assignment;
    }
    std::vector<std::string> const& block_labels() const noexcept {
      return _labels;
    }

    Partition with_labels(std::vector<std::string> labels) const;

    bool is_singletons() const noexcept {
      return num_blocks() == size();
    }

    friend bool operator==(Partition const& a, Partition const& b) {
      return a._blocks == b._blocks;
    }

   private:
    std::vector<std::vector<std::size_t>> _blocks;
    std::vector<std::size_t>              _assignment;
    std::vector<std::string>              _labels;
  };

  // Surjective map from source nodes onto target blocks.
  struct QuotientMap {
    std::size_t              source_size = 0;
    std::size_t              target_size = 0;
    std::vector<std::size_t> assignment;

    static QuotientMap of(Partition const& p);

    friend bool operator==(QuotientMap const&, QuotientMap const&) = default;
  };

  // True iff every block of `fine` lies inside a block of `coarse`.
  // Throws InputError if the partitions are over different sets.
  bool refine_check(Partition const& fine, Partition const& coarse);

  // second after first. Throws InputError unless
  // first.target_size == second.source_size.
  QuotientMap compose_quotients(QuotientMap const& first,
                                QuotientMap const& second);

  // Levels P_1, ..., P_p over a common node set, each coarsening the one
  // before; P_0 is the implicit singleton partition.
  class NestedHierarchy {
   public:
    // Throws NestingError naming the first fine block that straddles two
    // coarse blocks.
    explicit NestedHierarchy(std::vector<Partition> levels);

    // p, the number of partitions given; level 0 is not counted.
    std::size_t num_levels() const noexcept {
      return _levels.size() - 1;
    }
    std::size_t base_size() const noexcept {
      return _levels.front().size();
    }

    // 0 <= j <= num_levels(); j = 0 is the singleton partition.
    Partition const& level(std::size_t j) const;

    // The map pi_{i,j} from blocks of level i to blocks of level j, i <= j.
    QuotientMap quotient_map(std::size_t i, std::size_t j) const;

    // Blocks of level i grouped by the level-j block containing them.
    Partition relative_partition(std::size_t i, std::size_t j) const;

    std::size_t num_maps() const noexcept {
      return num_levels() * (num_levels() + 1) / 2;
    }

   private:
    std::vector<Partition> _levels;  // _levels[0] is P_0
  };

}  // namespace relrole

#endif  // RELROLE_PARTITION_HPP_
