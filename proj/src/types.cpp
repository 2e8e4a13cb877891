#include "polyadic/report.hpp"
#include "polyadic/types.hpp"

namespace polyadic {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::NotPolyadic: return "not-polyadic";
    case ErrorKind::NotAGroup: return "not-a-group";
    case ErrorKind::InvalidPresentation: return "invalid-presentation";
    case ErrorKind::IncompatibleSystem: return "incompatible-system";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::ProbabilisticPass: return "probabilistic-pass";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

Carrier::Carrier(std::size_t size) : size_(size) {
  if (size == 0) throw Error(ErrorKind::InvalidArgument, "carrier must be non-empty");
}

Carrier::Carrier(std::size_t size, std::vector<std::string> names)
    : size_(size), names_(std::move(names)) {
  if (size == 0) throw Error(ErrorKind::InvalidArgument, "carrier must be non-empty");
  if (!names_.empty() && names_.size() != size_)
    throw Error(ErrorKind::InvalidArgument, "carrier names must match carrier size");
}

std::string Carrier::name(Element x) const {
  if (has_names() && x < names_.size()) return names_[x];
  return std::to_string(x);
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp,
                                         std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  if (r > cap) return std::nullopt;
  return r;
}

void VerificationReport::fail(Witness w) {
  status = CheckStatus::Fail;
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

void VerificationReport::add_item(VerificationReport item) {
  instances += item.instances;
  items.push_back(std::move(item));
  merge_status_from_items();
}

void VerificationReport::merge_status_from_items() {
  bool any_fail = violations > 0, any_prob = false, any_pass = false;
  for (const auto& it : items) {
    switch (it.status) {
      case CheckStatus::Fail: any_fail = true; break;
      case CheckStatus::ProbabilisticPass: any_prob = true; break;
      case CheckStatus::Pass: any_pass = true; break;
      case CheckStatus::Skipped: break;
    }
  }
  if (any_fail) status = CheckStatus::Fail;
  else if (any_prob) status = CheckStatus::ProbabilisticPass;
  else if (any_pass) status = CheckStatus::Pass;
  else status = CheckStatus::Skipped;
}

}  // namespace polyadic
