#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "polyadic/profinite.hpp"

namespace polyadic {

// Exact measure of a cylinder set.
using Measure = boost::rational<std::int64_t>;

// "p/q" in lowest terms (always with a denominator).
std::string to_string(const Measure& m);
Measure parse_measure(const std::string& text);

// The limit set of all threads whose `level` coordinate lies in `subset`.
struct CylinderSet {
  std::size_t level = 0;
  std::vector<Element> subset;  // sorted, unique

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;
};

// Normalizes (sorts, dedups) and range-checks.
CylinderSet make_cylinder(const InverseSystem& s, std::size_t level, std::vector<Element> subset);
CylinderSet full_cylinder(const InverseSystem& s, std::size_t level);

// Preimage under phi_{to, A.level}; throws InvalidArgument unless A.level <= to.
CylinderSet refine(const InverseSystem& s, const CylinderSet& a, std::size_t to);

CylinderSet cyl_union(const InverseSystem& s, const CylinderSet& a, const CylinderSet& b);
CylinderSet cyl_intersect(const InverseSystem& s, const CylinderSet& a, const CylinderSet& b);
CylinderSet cyl_complement(const InverseSystem& s, const CylinderSet& a);
// A subset of B after refinement to the designated common level.
bool cyl_subset(const InverseSystem& s, const CylinderSet& a, const CylinderSet& b);

// m_p: normalized counting at the cylinder's level.
Measure measure_polyadic(const InverseSystem& s, const CylinderSet& a);
// m: normalized counting in the retract system.
Measure measure_retract(const GroupSystem& retracts, const CylinderSet& a);
// m*: counting of the embedded copy inside the Post cover.
Measure measure_cover(const CoverSystem& covers, const CylinderSet& a);

// Binds a validated system to its retract system (over a thread) and its
// cover system, so that m_p, m and m* can be compared.
class HaarContext {
 public:
  HaarContext(const InverseSystem& s, Thread base_point);

  const InverseSystem& system() const noexcept { return *system_; }
  const Thread& base_point() const noexcept { return base_point_; }
  const GroupSystem& retracts() const noexcept { return retracts_; }
  const CoverSystem& covers() const noexcept { return covers_; }

  Measure m_p(const CylinderSet& a) const { return measure_polyadic(*system_, a); }
  Measure m(const CylinderSet& a) const { return measure_retract(retracts_, a); }
  Measure m_star(const CylinderSet& a) const { return measure_cover(covers_, a); }

 private:
  const InverseSystem* system_;
  Thread base_point_;
  GroupSystem retracts_;
  CoverSystem covers_;
};

// m_p(A) = m(A) = (n-1) m*(A), exactly. Values are reported as m_p, m,
// m_star. A failure is a theorem violation, flagged as an internal error.
VerificationReport check_haar_identity(const HaarContext& ctx, const CylinderSet& a);

// For each slot (1-based; empty = all), m_p of the f-translate equals
// m_p(A) and equals m(theta^(slot-1)(A)).
VerificationReport check_translation_invariance(const HaarContext& ctx, const CylinderSet& a,
                                                const std::vector<Thread>& coefficients,
                                                std::vector<std::size_t> slots = {});

// m(theta(A)) = m(A) at A's level and at one level above it.
VerificationReport check_automorphism_invariance(const HaarContext& ctx, const CylinderSet& a);

// Every subset of one level (size <= 32), with theta applied through
// byte-sliced lookup tables on bitmasks.
VerificationReport check_automorphism_invariance_exhaustive(const HaarContext& ctx,
                                                            std::size_t level);

struct HaarSuiteOptions {
  unsigned exhaustive_bits = 16;  // enumerate all top subsets when |top| <= this
  std::uint64_t samples = 4096;   // subsets drawn otherwise
  std::uint64_t seed = kDefaultSeed;
};

// Identity, translation-invariance and automorphism-invariance suites over
// the cylinder sets of the top level.
VerificationReport run_haar_suite(const HaarContext& ctx, const HaarSuiteOptions& opts = {});

}  // namespace polyadic
