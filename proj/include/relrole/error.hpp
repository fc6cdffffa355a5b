#ifndef RELROLE_ERROR_HPP_
#define RELROLE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relrole {

  // Base for every error raised by the library. `module()` names the
  // component that raised it so the CLI can prefix diagnostics.
  class Error : public std::runtime_error {
   public:
    Error(std::string module, std::string const& what)
        : std::runtime_error(what), _module(std::move(module)) {}

    std::string const& module() const noexcept {
      return _module;
    }

   private:
    std::string _module;
  };

  // Malformed or inconsistent input. CLI exit code 1.
  class InputError : public Error {
   public:
    enum class Kind {
      io,
      parse,
      non_square,
      dimension_mismatch,
      entry_out_of_range,
      duplicate_relation,
      no_relations,
      unknown_node,
      missing_node,
      duplicate_node,
      empty_block_label,
      unknown_relation,
      invalid_argument,
    };

    InputError(std::string module, Kind kind, std::string const& what)
        : Error(std::move(module), what), _kind(kind) {}

    Kind kind() const noexcept {
      return _kind;
    }

   private:
    Kind _kind;
  };

  // Closure enumeration stopped at the element cap. CLI exit code 1.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string module,
                std::size_t elements_reached,
                std::size_t word_length)
        : Error(std::move(module),
                "element cap exceeded: " + std::to_string(elements_reached)
                    + " elements reached while exploring words of length "
                    + std::to_string(word_length)),
          _elements(elements_reached),
          _length(word_length) {}

    std::size_t elements_reached() const noexcept {
      return _elements;
    }
    std::size_t word_length() const noexcept {
      return _length;
    }

   private:
    std::size_t _elements;
    std::size_t _length;
  };

  // A structural hypothesis does not hold (non-nesting hierarchy, imperfect
  // blockmodel). CLI exit code 2.
  class VerificationError : public Error {
   public:
    using Error::Error;
  };

  class NestingError : public VerificationError {
   public:
    NestingError(std::size_t level, std::string block, std::string const& what)
        : VerificationError("relgraph-core", what),
          _level(level),
          _block(std::move(block)) {}

    // 1-based index of the coarser level that fails to contain `block()`.
    std::size_t level() const noexcept {
      return _level;
    }
    std::string const& block() const noexcept {
      return _block;
    }

   private:
    std::size_t _level;
    std::string _block;
  };

  class NotPerfectError : public VerificationError {
   public:
    NotPerfectError(std::size_t level, std::string const& what)
        : VerificationError("semigroup", what), _level(level) {}

    std::size_t level() const noexcept {
      return _level;
    }

   private:
    std::size_t _level;
  };

  // Internal consistency failure; indicates a bug rather than bad input.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace relrole

#endif  // RELROLE_ERROR_HPP_
