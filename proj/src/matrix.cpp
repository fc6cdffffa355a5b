#include "relrole/matrix.hpp"

#include <bit>

#include "relrole/error.hpp"

namespace relrole {

  BoolMatrix::BoolMatrix(std::size_t n)
      : _n(n), _stride((n + 63) / 64), _bits(n * ((n + 63) / 64), 0) {}

  BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.set(i, i);
    }
    return m;
  }

  std::size_t BoolMatrix::count() const noexcept {
    std::size_t c = 0;
    for (auto w : _bits) {
      c += std::popcount(w);
    }
    return c;
  }

  bool BoolMatrix::is_zero() const noexcept {
    for (auto w : _bits) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  BoolMatrix BoolMatrix::multiply(BoolMatrix const& other) const {
    if (other._n != _n) {
      throw InputError("semigroup",
                       InputError::Kind::dimension_mismatch,
                       "cannot multiply " + std::to_string(_n) + "x"
                           + std::to_string(_n) + " by "
                           + std::to_string(other._n) + "x"
                           + std::to_string(other._n) + " Boolean matrix");
    }
    BoolMatrix out(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      std::uint64_t* dst = out._bits.data() + i * _stride;
      for (std::size_t k = 0; k < _n; ++k) {
        if (get(i, k)) {
          std::uint64_t const* src = other._bits.data() + k * _stride;
          for (std::size_t w = 0; w < _stride; ++w) {
            dst[w] |= src[w];
          }
        }
      }
    }
    return out;
  }

  std::size_t BoolMatrix::hash() const noexcept {
    std::size_t h = 1469598103934665603ULL ^ _n;
    for (auto w : _bits) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  WeightMatrix::WeightMatrix(std::size_t n) : _n(n), _v(n * n) {}

  WeightMatrix::WeightMatrix(BoolMatrix const& b) : WeightMatrix(b.size()) {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        if (b.get(i, j)) {
          (*this)(i, j) = 1;
        }
      }
    }
  }

  WeightMatrix::WeightMatrix(
      std::initializer_list<std::initializer_list<Rational>> rows)
      : WeightMatrix(rows.size()) {
    std::size_t i = 0;
    for (auto const& row : rows) {
      if (row.size() != _n) {
        throw InputError("relgraph-core",
                         InputError::Kind::non_square,
                         "matrix literal is not square");
      }
      std::size_t j = 0;
      for (auto const& x : row) {
        (*this)(i, j++) = x;
      }
      ++i;
    }
  }

  WeightMatrix WeightMatrix::identity(std::size_t n) {
    WeightMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  bool WeightMatrix::is_boolean() const noexcept {
    for (auto const& x : _v) {
      if (x != 0 && x != 1) {
        return false;
      }
    }
    return true;
  }

  bool WeightMatrix::is_zero() const noexcept {
    for (auto const& x : _v) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  bool WeightMatrix::in_unit_interval() const noexcept {
    for (auto const& x : _v) {
      if (x < 0 || x > 1) {
        return false;
      }
    }
    return true;
  }

  BoolMatrix WeightMatrix::to_bool() const {
    BoolMatrix b(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        auto const& x = (*this)(i, j);
        if (x == 1) {
          b.set(i, j);
        } else if (x != 0) {
          throw InputError("relgraph-core",
                           InputError::Kind::invalid_argument,
                           "matrix entry (" + std::to_string(i) + ","
                               + std::to_string(j) + ") = "
                               + to_exact_string(x) + " is not Boolean");
        }
      }
    }
    return b;
  }

  std::size_t WeightMatrix::hash() const noexcept {
    std::size_t h = 1469598103934665603ULL ^ _n;
    for (auto const& x : _v) {
      h ^= hash_value(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

}  // namespace relrole
