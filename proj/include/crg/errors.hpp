#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crg {

// Machine-readable error codes; the CLI prints them on stderr and the
// service embeds them in 4xx bodies.
enum class ErrorCode {
  parse,
  resource_limit,
  illegal_move,
  precondition,
  no_move,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::parse, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : Error(ErrorCode::resource_limit, what) {}
};

enum class Side { left, right };

class IllegalMoveError : public Error {
 public:
  IllegalMoveError(Side side, const std::string& what)
      : Error(ErrorCode::illegal_move,
              std::string(side == Side::left ? "illegal Left move: "
                                             : "illegal Right move: ") +
                  what),
        side_(side) {}
  Side side() const { return side_; }

 private:
  Side side_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorCode::precondition, what) {}
};

class NoMoveError : public Error {
 public:
  explicit NoMoveError(const std::string& what)
      : Error(ErrorCode::no_move, what) {}
};

}  // namespace crg
