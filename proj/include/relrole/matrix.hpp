#ifndef RELROLE_MATRIX_HPP_
#define RELROLE_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "relrole/decimal.hpp"

namespace relrole {

  // Square Boolean matrix, bit-packed by row.
  class BoolMatrix {
   public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n);

    static BoolMatrix identity(std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }

    bool get(std::size_t i, std::size_t j) const noexcept {
      return (_bits[i * _stride + (j >> 6)] >> (j & 63)) & 1U;
    }

    void set(std::size_t i, std::size_t j, bool value = true) noexcept {
      auto& w = _bits[i * _stride + (j >> 6)];
      if (value) {
        w |= std::uint64_t{1} << (j & 63);
      } else {
        w &= ~(std::uint64_t{1} << (j & 63));
      }
    }

    std::size_t count() const noexcept;
    bool        is_zero() const noexcept;

    // Standard Boolean product: (this * other)(i,j) = OR_k this(i,k) AND other(k,j).
    BoolMatrix multiply(BoolMatrix const& other) const;

    std::size_t hash() const noexcept;

    friend bool operator==(BoolMatrix const&, BoolMatrix const&) = default;

   private:
    std::size_t                _n      = 0;
    std::size_t                _stride = 0;
    std::vector<std::uint64_t> _bits;
  };

  // Square matrix of exact rationals; the library keeps entries in [0,1].
  class WeightMatrix {
   public:
    WeightMatrix() = default;
    explicit WeightMatrix(std::size_t n);
    explicit WeightMatrix(BoolMatrix const& b);
    WeightMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static WeightMatrix identity(std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }

    Rational const& operator()(std::size_t i, std::size_t j) const noexcept {
      return _v[i * _n + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) noexcept {
      return _v[i * _n + j];
    }

    std::vector<Rational> const& values() const noexcept {
      return _v;
    }

    bool is_boolean() const noexcept;
    bool is_zero() const noexcept;
    bool in_unit_interval() const noexcept;

    // Requires is_boolean().
    BoolMatrix to_bool() const;

    std::size_t hash() const noexcept;

    friend bool operator==(WeightMatrix const&, WeightMatrix const&) = default;

   private:
    std::size_t           _n = 0;
    std::vector<Rational> _v;
  };

  struct BoolMatrixHash {
    std::size_t operator()(BoolMatrix const& m) const noexcept {
      return m.hash();
    }
  };

  struct WeightMatrixHash {
    std::size_t operator()(WeightMatrix const& m) const noexcept {
      return m.hash();
    }
  };

}  // namespace relrole

#endif  // RELROLE_MATRIX_HPP_
