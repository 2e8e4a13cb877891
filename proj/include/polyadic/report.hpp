#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyadic {

enum class CheckStatus { Pass, Fail, ProbabilisticPass, Skipped };

const char* to_string(CheckStatus s) noexcept;

// A concrete piece of evidence, e.g. label "i,j,tuple" with the values.
struct Witness {
  std::string label;
  std::vector<std::int64_t> values;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string subject;
  std::string check;
  CheckStatus status = CheckStatus::Skipped;
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  // Named exact values, e.g. measures rendered as "p/q".
  std::map<std::string, std::string> values;
  std::optional<std::uint64_t> seed;
  std::vector<VerificationReport> items;
  double wall_ms = 0.0;

  bool passed() const noexcept {
    return status == CheckStatus::Pass ||
           status == CheckStatus::ProbabilisticPass ||
           status == CheckStatus::Skipped;
  }
  bool failed() const noexcept { return status == CheckStatus::Fail; }

  void fail(Witness w);
  // Appends a sub-report, adding its instances to this one's.
  void add_item(VerificationReport item);
  // Recomputes status from items: any fail fails, any probabilistic pass
  // downgrades a pass.
  void merge_status_from_items();
};

inline constexpr std::size_t kMaxWitnesses = 32;

}  // namespace polyadic
