#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "polyadic/finite_group.hpp"
#include "polyadic/report.hpp"
#include "polyadic/types.hpp"

namespace polyadic {

struct HGPresentation;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultSamples = 1'000'000;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct VerificationStatus {
  enum class Kind { Unchecked, Sampled, Certificate, Exhaustive };
  Kind kind = Kind::Unchecked;
  std::uint64_t samples = 0;  // meaningful for Sampled

  bool verified() const noexcept { return kind != Kind::Unchecked; }
  friend bool operator==(const VerificationStatus&, const VerificationStatus&) = default;
};

const char* to_string(VerificationStatus::Kind k) noexcept;

enum class Strategy { Auto, Exhaustive, Sampled, Certificate };

struct CheckOptions {
  Strategy strategy = Strategy::Auto;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// A finite n-ary group (G, f). The operation is backed by a flat row-major
// table of size^n entries, by a Hosszu-Gloskin presentation evaluated on
// demand, or by both (in which case they agree pointwise).
class NaryGroup {
 public:
  // Table entries are indexed by sum x_k * size^(n-1-k).
  static NaryGroup from_table(int arity, Carrier carrier, std::vector<Element> table);
  static NaryGroup from_presentation(std::shared_ptr<const HGPresentation> p);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const Carrier& carrier() const noexcept { return carrier_; }

  bool has_table() const noexcept { return !table_.empty(); }
  const std::vector<Element>& table() const noexcept { return table_; }
  const HGPresentation* presentation() const noexcept { return presentation_.get(); }
  std::shared_ptr<const HGPresentation> shared_presentation() const { return presentation_; }

  // Checked evaluation of f(xs).
  Element eval(std::span<const Element> xs) const;
  Element eval_unchecked(const Element* xs) const noexcept;

  // Table-backed copy (throws BudgetExceeded past the table cap).
  NaryGroup materialized(std::uint64_t cap = kDefaultBudget) const;

  // Attaches a presentation after confirming it reproduces the operation
  // (exhaustively within `budget`, else on `samples` seeded tuples).
  void attach_presentation(std::shared_ptr<const HGPresentation> p,
                           const CheckOptions& opts = {});

  const VerificationStatus& status() const noexcept { return status_; }

  // Same arity, carrier, table and presentation; status is ignored.
  friend bool operator==(const NaryGroup& a, const NaryGroup& b);

 private:
  friend VerificationReport verify_polyadic(NaryGroup& g, const CheckOptions& opts);

  NaryGroup(int arity, Carrier carrier) : arity_(arity), carrier_(std::move(carrier)) {}

  int arity_;
  Carrier carrier_;
  std::vector<Element> table_;
  std::shared_ptr<const HGPresentation> presentation_;
  std::vector<std::uint64_t> stride_;
  VerificationStatus status_;
};

// Associativity of f over all index pairs 1 <= i < j <= n. Witness label
// "i,j,tuple" carries i, j then x_1..x_{2n-1}.
VerificationReport check_associativity(const NaryGroup& g, const CheckOptions& opts = {});

// Unique solvability in every slot. Witness label "slot,coefficients,target,solutions".
VerificationReport check_unique_solvability(const NaryGroup& g, const CheckOptions& opts = {});

// Runs both axiom checks and, when both pass, raises the verification
// status. A sampled pass never yields an exhaustive status.
VerificationReport verify_polyadic(NaryGroup& g, const CheckOptions& opts = {});

// The unique x (slot is 1-based) with f(prefix, x, suffix) = target; throws
// NotPolyadic when there are zero or several solutions.
Element solve(const NaryGroup& g, std::size_t slot, std::span<const Element> prefix,
              std::span<const Element> suffix, Element target);

// x.y = f(x, a, ..., a, y). Throws NotPolyadic if the result is not a group.
FiniteGroup retract(const NaryGroup& g, Element a);

// { f(prefix, a, suffix) : a in subset }, sorted.
std::vector<Element> translate(const NaryGroup& g, std::size_t slot,
                               std::span<const Element> prefix,
                               std::span<const Element> suffix,
                               std::span<const Element> subset);

}  // namespace polyadic
