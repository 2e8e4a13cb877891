#include "polyadic/nary_group.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>
#include <thread>

#include "polyadic/presentation.hpp"

namespace polyadic {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::uint64_t> strides_for(int arity, std::size_t size) {
  std::vector<std::uint64_t> s(static_cast<std::size_t>(arity));
  std::uint64_t acc = 1;
  for (int k = arity - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = acc;
    acc *= size;
  }
  return s;
}

// Advances a base-`radix` odometer; returns false after the last tuple.
bool next_tuple(std::vector<Element>& t, std::size_t radix, std::size_t from = 0) {
  for (std::size_t k = t.size(); k-- > from;) {
    if (++t[k] < radix) return true;
    t[k] = 0;
  }
  return false;
}

// Fast evaluation for checkers: uses the group's table, a materialized
// table when affordable, or the presentation.
class Evaluator {
 public:
  Evaluator(const NaryGroup& g, std::uint64_t budget)
      : g_(g), strides_(strides_for(g.arity(), g.size())) {
    if (g.has_table()) {
      table_ = &g.table();
    } else if (checked_pow(g.size(), static_cast<unsigned>(g.arity()), budget)) {
      owned_ = g.materialized(budget).table();
      table_ = &owned_;
    }
  }

  Element operator()(const Element* xs) const noexcept {
    if (!table_) return g_.eval_unchecked(xs);
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < strides_.size(); ++k) idx += xs[k] * strides_[k];
    return (*table_)[idx];
  }

 private:
  const NaryGroup& g_;
  std::vector<std::uint64_t> strides_;
  const std::vector<Element>* table_ = nullptr;
  std::vector<Element> owned_;
};

// Evaluates all n bracketings of a (2n-1)-tuple and returns the first
// differing pair (i, j), 1-based, if any.
std::optional<std::pair<int, int>> bracket_mismatch(const Evaluator& f, int n,
                                                    const Element* x,
                                                    std::vector<Element>& buf,
                                                    std::vector<Element>& vals) {
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) buf[k] = x[k];
    buf[i] = f(x + i);
    for (int k = i + 1; k < n; ++k) buf[k] = x[k + n - 1];
    vals[i] = f(buf.data());
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (vals[i] != vals[j]) return std::pair{i + 1, j + 1};
  return std::nullopt;
}

Witness assoc_witness(std::pair<int, int> ij, const std::vector<Element>& tuple) {
  Witness w{"i,j,tuple", {ij.first, ij.second}};
  for (Element x : tuple) w.values.push_back(x);
  return w;
}

std::uint64_t pair_count(int n) {
  return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
}

unsigned worker_count(const CheckOptions& opts, std::size_t chunks) {
  unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, chunks));
}

VerificationReport associativity_exhaustive(const NaryGroup& g, const CheckOptions& opts) {
  VerificationReport r;
  r.check = "associativity";
  const int n = g.arity();
  const std::size_t s = g.size();
  const std::size_t len = static_cast<std::size_t>(2 * n - 1);
  const std::uint64_t total = *checked_pow(s, static_cast<unsigned>(len));
  const std::uint64_t per_lead = total / s;
  Evaluator f(g, opts.budget);

  struct Hit {
    std::uint64_t index;
    std::pair<int, int> ij;
    std::vector<Element> tuple;
  };
  const unsigned workers = worker_count(opts, s);
  std::vector<std::optional<Hit>> hits(workers);

  // Worker w handles leading elements w, w + workers, ...; each stops at
  // its first mismatch, so the global minimum is the lowest counterexample.
  auto work = [&](unsigned w) {
    std::vector<Element> tuple(len), buf(static_cast<std::size_t>(n)), vals(static_cast<std::size_t>(n));
    for (std::size_t lead = w; lead < s; lead += workers) {
      std::fill(tuple.begin(), tuple.end(), 0);
      tuple[0] = static_cast<Element>(lead);
      std::uint64_t idx = lead * per_lead;
      do {
        if (auto ij = bracket_mismatch(f, n, tuple.data(), buf, vals)) {
          hits[w] = Hit{idx, *ij, tuple};
          return;
        }
        ++idx;
      } while (next_tuple(tuple, s, 1));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  const Hit* first = nullptr;
  for (const auto& h : hits)
    if (h && (!first || h->index < first->index)) first = &*h;
  r.status = CheckStatus::Pass;
  if (first) {
    r.instances = (first->index + 1) * pair_count(n);
    r.fail(assoc_witness(first->ij, first->tuple));
  } else {
    r.instances = total * pair_count(n);
  }
  r.notes.push_back("exhaustive");
  return r;
}

VerificationReport associativity_sampled(const NaryGroup& g, const CheckOptions& opts) {
  VerificationReport r;
  r.check = "associativity";
  const int n = g.arity();
  Evaluator f(g, opts.budget);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.size() - 1));
  std::vector<Element> tuple(static_cast<std::size_t>(2 * n - 1)), buf(static_cast<std::size_t>(n)),
      vals(static_cast<std::size_t>(n));
  r.status = CheckStatus::ProbabilisticPass;
  r.seed = opts.seed;
  for (std::uint64_t k = 0; k < opts.samples; ++k) {
    for (auto& x : tuple) x = pick(rng);
    r.instances += pair_count(n);
    if (auto ij = bracket_mismatch(f, n, tuple.data(), buf, vals)) {
      r.fail(assoc_witness(*ij, tuple));
      break;
    }
  }
  r.notes.push_back("sampled(" + std::to_string(opts.samples) + "), probabilistic");
  return r;
}

bool presentation_certifies(const NaryGroup& g) {
  return g.presentation() && !validate_presentation(*g.presentation()).failed();
}

VerificationReport certificate_report(const NaryGroup& g, const char* check) {
  if (!g.presentation())
    throw Error(ErrorKind::InvalidArgument,
                "certificate strategy requires an attached presentation");
  VerificationReport r;
  r.check = check;
  auto v = validate_presentation(*g.presentation());
  if (v.failed()) {
    r.status = CheckStatus::Fail;
    r.violations = 0;
    for (const auto& it : v.items)
      for (const auto& w : it.witnesses) {
        r.witnesses.push_back(w);
        r.violations++;
      }
    r.notes.push_back("attached presentation is invalid");
    return r;
  }
  r.status = CheckStatus::Pass;
  r.notes.push_back("certificate: operation has Hosszu-Gloskin form x1 theta(x2) ... theta^(n-1)(xn) b");
  return r;
}

// Examines one (slot, coefficients) choice and records every target with
// other than exactly one solution.
void solvability_instance(const Evaluator& f, int n, std::size_t s, std::size_t slot,
                          const std::vector<Element>& coeffs, std::vector<Element>& buf,
                          std::vector<std::uint32_t>& count, VerificationReport& r) {
  std::fill(count.begin(), count.end(), 0);
  for (std::size_t k = 0, c = 0; k < static_cast<std::size_t>(n); ++k)
    if (k != slot) buf[k] = coeffs[c++];
  for (Element x = 0; x < s; ++x) {
    buf[slot] = x;
    count[f(buf.data())]++;
  }
  for (Element t = 0; t < s; ++t) {
    r.instances++;
    if (count[t] != 1) {
      Witness w{"slot,coefficients,target,solutions", {static_cast<std::int64_t>(slot + 1)}};
      for (Element c : coeffs) w.values.push_back(c);
      w.values.push_back(t);
      w.values.push_back(count[t]);
      r.fail(std::move(w));
    }
  }
}

}  // namespace

const char* to_string(VerificationStatus::Kind k) noexcept {
  switch (k) {
    case VerificationStatus::Kind::Unchecked: return "unchecked";
    case VerificationStatus::Kind::Sampled: return "verified-sampled";
    case VerificationStatus::Kind::Certificate: return "verified-certificate";
    case VerificationStatus::Kind::Exhaustive: return "verified-exhaustive";
  }
  return "unknown";
}

NaryGroup NaryGroup::from_table(int arity, Carrier carrier, std::vector<Element> table) {
  if (arity < 2) throw Error(ErrorKind::InvalidArgument, "arity must be at least 2");
  auto expect = checked_pow(carrier.size(), static_cast<unsigned>(arity), kDefaultBudget);
  if (!expect)
    throw Error(ErrorKind::BudgetExceeded,
                "table-backed groups are capped at size^n <= 10^7 entries");
  if (table.size() != *expect)
    throw Error(ErrorKind::InvalidArgument, "table must have size^n entries (expected " +
                                                std::to_string(*expect) + ", got " +
                                                std::to_string(table.size()) + ")");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= carrier.size())
      throw Error(ErrorKind::InvalidArgument,
                  "table entry " + std::to_string(i) + " is out of range");
  NaryGroup g(arity, std::move(carrier));
  g.table_ = std::move(table);
  g.stride_ = strides_for(arity, g.size());
  return g;
}

NaryGroup NaryGroup::from_presentation(std::shared_ptr<const HGPresentation> p) {
  if (!p) throw Error(ErrorKind::InvalidArgument, "null presentation");
  auto v = validate_presentation(*p);
  if (v.failed()) throw Error(ErrorKind::InvalidPresentation, "presentation fails validation");
  NaryGroup g(p->arity, p->base.carrier());
  g.presentation_ = std::move(p);
  g.stride_ = strides_for(g.arity_, g.size());
  return g;
}

Element NaryGroup::eval(std::span<const Element> xs) const {
  if (xs.size() != static_cast<std::size_t>(arity_))
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(arity_) +
                                                " arguments, got " + std::to_string(xs.size()));
  for (Element x : xs)
    if (x >= size())
      throw Error(ErrorKind::InvalidArgument, "element " + std::to_string(x) + " is out of range");
  return eval_unchecked(xs.data());
}

Element NaryGroup::eval_unchecked(const Element* xs) const noexcept {
  if (!table_.empty()) {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < stride_.size(); ++k) idx += xs[k] * stride_[k];
    return table_[idx];
  }
  return presentation_->evaluate(xs);
}

NaryGroup NaryGroup::materialized(std::uint64_t cap) const {
  if (has_table()) return *this;
  auto total = checked_pow(size(), static_cast<unsigned>(arity_), std::min(cap, kDefaultBudget));
  if (!total) throw Error(ErrorKind::BudgetExceeded, "operation table too large to materialize");
  std::vector<Element> table(*total);
  std::vector<Element> xs(static_cast<std::size_t>(arity_), 0);
  std::size_t i = 0;
  do {
    table[i++] = presentation_->evaluate(xs.data());
  } while (next_tuple(xs, size()));
  NaryGroup g = *this;
  g.table_ = std::move(table);
  return g;
}

void NaryGroup::attach_presentation(std::shared_ptr<const HGPresentation> p,
                                    const CheckOptions& opts) {
  if (!p) throw Error(ErrorKind::InvalidArgument, "null presentation");
  if (p->arity != arity_ || p->base.size() != size())
    throw Error(ErrorKind::InvalidArgument, "presentation shape does not match the group");
  if (validate_presentation(*p).failed())
    throw Error(ErrorKind::InvalidPresentation, "presentation fails validation");
  std::vector<Element> xs(static_cast<std::size_t>(arity_), 0);
  auto mismatch = [&]() {
    std::string msg = "presentation disagrees with the operation at (";
    for (std::size_t k = 0; k < xs.size(); ++k) msg += (k ? "," : "") + std::to_string(xs[k]);
    return Error(ErrorKind::InvalidPresentation, msg + ")");
  };
  if (checked_pow(size(), static_cast<unsigned>(arity_), opts.budget)) {
    do {
      if (p->evaluate(xs.data()) != eval_unchecked(xs.data())) throw mismatch();
    } while (next_tuple(xs, size()));
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(size() - 1));
    for (std::uint64_t k = 0; k < opts.samples; ++k) {
      for (auto& x : xs) x = pick(rng);
      if (p->evaluate(xs.data()) != eval_unchecked(xs.data())) throw mismatch();
    }
  }
  presentation_ = std::move(p);
}

VerificationReport check_associativity(const NaryGroup& g, const CheckOptions& opts) {
  auto start = Clock::now();
  const bool in_budget =
      checked_pow(g.size(), static_cast<unsigned>(2 * g.arity() - 1), opts.budget).has_value();
  VerificationReport r;
  switch (opts.strategy) {
    case Strategy::Exhaustive:
      if (!in_budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "size^(2n-1) exceeds the budget; use sampled or certificate");
      r = associativity_exhaustive(g, opts);
      break;
    case Strategy::Certificate:
      r = certificate_report(g, "associativity");
      break;
    case Strategy::Sampled:
      r = associativity_sampled(g, opts);
      break;
    case Strategy::Auto:
      if (in_budget) r = associativity_exhaustive(g, opts);
      else if (presentation_certifies(g)) r = certificate_report(g, "associativity");
      else r = associativity_sampled(g, opts);
      break;
  }
  r.wall_ms = elapsed_ms(start);
  return r;
}

VerificationReport check_unique_solvability(const NaryGroup& g, const CheckOptions& opts) {
  auto start = Clock::now();
  const int n = g.arity();
  const std::size_t s = g.size();
  auto total = checked_pow(s, static_cast<unsigned>(n), opts.budget / static_cast<std::uint64_t>(n));
  const bool in_budget = total.has_value();
  Strategy strategy = opts.strategy;
  if (strategy == Strategy::Auto)
    strategy = in_budget ? Strategy::Exhaustive
                         : (presentation_certifies(g) ? Strategy::Certificate : Strategy::Sampled);
  if (strategy == Strategy::Exhaustive && !in_budget)
    throw Error(ErrorKind::BudgetExceeded, "size^n * n exceeds the budget; use sampled");
  if (strategy == Strategy::Certificate) {
    auto r = certificate_report(g, "unique-solvability");
    r.wall_ms = elapsed_ms(start);
    return r;
  }

  VerificationReport r;
  r.check = "unique-solvability";
  Evaluator f(g, opts.budget);
  std::vector<Element> coeffs(static_cast<std::size_t>(n - 1), 0), buf(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> count(s);
  if (strategy == Strategy::Exhaustive) {
    r.status = CheckStatus::Pass;
    for (std::size_t slot = 0; slot < static_cast<std::size_t>(n); ++slot) {
      std::fill(coeffs.begin(), coeffs.end(), 0);
      do {
        solvability_instance(f, n, s, slot, coeffs, buf, count, r);
      } while (next_tuple(coeffs, s));
    }
    r.notes.push_back("exhaustive");
  } else {
    r.status = CheckStatus::ProbabilisticPass;
    r.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(s - 1));
    std::uniform_int_distribution<int> pick_slot(0, n - 1);
    const std::uint64_t rounds = std::max<std::uint64_t>(1, opts.samples / s);
    for (std::uint64_t k = 0; k < rounds && !r.failed(); ++k) {
      auto slot = static_cast<std::size_t>(pick_slot(rng));
      for (auto& c : coeffs) c = pick(rng);
      solvability_instance(f, n, s, slot, coeffs, buf, count, r);
    }
    r.notes.push_back("sampled(" + std::to_string(rounds) + " coefficient choices), probabilistic");
  }
  r.wall_ms = elapsed_ms(start);
  return r;
}

VerificationReport verify_polyadic(NaryGroup& g, const CheckOptions& opts) {
  VerificationReport r;
  r.check = "polyadic-axioms";
  r.add_item(check_associativity(g, opts));
  r.add_item(check_unique_solvability(g, opts));
  if (r.failed()) return r;

  using K = VerificationStatus::Kind;
  auto kind_of = [](const VerificationReport& it) {
    if (it.status == CheckStatus::ProbabilisticPass) return K::Sampled;
    for (const auto& note : it.notes)
      if (note.rfind("certificate", 0) == 0) return K::Certificate;
    return K::Exhaustive;
  };
  K kind = std::min(kind_of(r.items[0]), kind_of(r.items[1]));
  VerificationStatus next{kind, kind == K::Sampled ? opts.samples : 0};
  if (next.kind > g.status_.kind) g.status_ = next;
  return r;
}

Element solve(const NaryGroup& g, std::size_t slot, std::span<const Element> prefix,
              std::span<const Element> suffix, Element target) {
  const auto n = static_cast<std::size_t>(g.arity());
  if (slot < 1 || slot > n) throw Error(ErrorKind::InvalidArgument, "slot out of range");
  if (prefix.size() != slot - 1 || suffix.size() != n - slot)
    throw Error(ErrorKind::InvalidArgument, "prefix/suffix lengths do not match the slot");
  if (target >= g.size()) throw Error(ErrorKind::InvalidArgument, "target out of range");
  std::vector<Element> xs(prefix.begin(), prefix.end());
  xs.push_back(0);
  xs.insert(xs.end(), suffix.begin(), suffix.end());
  for (Element x : xs)
    if (x >= g.size()) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
  std::size_t hits = 0;
  Element found = 0;
  for (Element x = 0; x < g.size(); ++x) {
    xs[slot - 1] = x;
    if (g.eval_unchecked(xs.data()) == target) {
      if (hits++ == 0) found = x;
    }
  }
  if (hits != 1)
    throw Error(ErrorKind::NotPolyadic,
                "equation in slot " + std::to_string(slot) + " has " + std::to_string(hits) +
                    " solutions; the operation is not an n-ary group");
  return found;
}

FiniteGroup retract(const NaryGroup& g, Element a) {
  if (a >= g.size()) throw Error(ErrorKind::InvalidArgument, "base point out of range");
  const std::size_t s = g.size();
  const auto n = static_cast<std::size_t>(g.arity());
  std::vector<Element> xs(n, a), table(s * s);
  for (Element x = 0; x < s; ++x)
    for (Element y = 0; y < s; ++y) {
      xs.front() = x;
      xs.back() = y;
      table[x * s + y] = g.eval_unchecked(xs.data());
    }
  try {
    return FiniteGroup::from_table(g.carrier(), std::move(table));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotPolyadic, std::string("retract is not a group: ") + e.what());
  }
}

std::vector<Element> translate(const NaryGroup& g, std::size_t slot,
                               std::span<const Element> prefix,
                               std::span<const Element> suffix,
                               std::span<const Element> subset) {
  const auto n = static_cast<std::size_t>(g.arity());
  if (slot < 1 || slot > n) throw Error(ErrorKind::InvalidArgument, "slot out of range");
  if (prefix.size() != slot - 1 || suffix.size() != n - slot)
    throw Error(ErrorKind::InvalidArgument, "prefix/suffix lengths do not match the slot");
  std::vector<Element> xs(prefix.begin(), prefix.end());
  xs.push_back(0);
  xs.insert(xs.end(), suffix.begin(), suffix.end());
  for (Element x : xs)
    if (x >= g.size()) throw Error(ErrorKind::InvalidArgument, "coefficient out of range");
  std::vector<Element> out;
  out.reserve(subset.size());
  for (Element a : subset) {
    if (a >= g.size()) throw Error(ErrorKind::InvalidArgument, "subset element out of range");
    xs[slot - 1] = a;
    out.push_back(g.eval_unchecked(xs.data()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool operator==(const NaryGroup& a, const NaryGroup& b) {
  if (a.arity_ != b.arity_ || !(a.carrier_ == b.carrier_) || a.table_ != b.table_) return false;
  if (!a.presentation_ || !b.presentation_) return !a.presentation_ && !b.presentation_;
  return *a.presentation_ == *b.presentation_;
}

}  // namespace polyadic
