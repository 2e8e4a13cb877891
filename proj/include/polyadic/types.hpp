#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyadic {

// Elements of every carrier are dense zero-based indices.
using Element = std::uint32_t;

enum class ErrorKind {
  InvalidArgument,  // malformed call: wrong tuple length, out-of-range index
  BudgetExceeded,   // exhaustive work would exceed the configured budget
  NotPolyadic,      // the data does not satisfy the n-ary group axioms
  NotAGroup,        // a binary table fails the group axioms
  InvalidPresentation,
  IncompatibleSystem,
  Schema,           // input document is malformed
  Internal,         // a proven identity failed; indicates a bug
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class Carrier {
 public:
  explicit Carrier(std::size_t size);
  Carrier(std::size_t size, std::vector<std::string> names);

  std::size_t size() const noexcept { return size_; }
  bool contains(std::size_t x) const noexcept { return x < size_; }

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // Display name, or the decimal index when no names are attached.
  std::string name(Element x) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::size_t size_;
  std::vector<std::string> names_;
};

// Integer power with an overflow guard; returns nullopt once the value
// would exceed `cap`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t cap = UINT64_MAX);

}  // namespace polyadic
