// Shared plumbing: error taxonomy, doubled half-integer helpers, and a small
// parallel work loop used by the piece-by-piece homology sweeps.
#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace strands {

// All half-integer quantities (refined weights, caps, G' first components) are
// stored doubled, so every number in the library is an exact integer.
using Half2 = int;  // value 2h for the half-integer h

// Error taxonomy. CLI exit codes: usage 2, domain/validity/parameter 1,
// verification failure 3.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
// A generator failing one of the numbered basis conditions.
struct ValidityError : std::domain_error {
  int condition;  // 1..6 for conditions (i)..(vi); 0 for structural
  ValidityError(int cond, const std::string& msg)
      : std::domain_error(msg), condition(cond) {}
};
struct GrammarError : std::invalid_argument {
  std::size_t position;
  GrammarError(std::size_t pos, const std::string& msg)
      : std::invalid_argument(msg), position(pos) {}
};
// Internal invariant broken (nonzero d∘d, non-integral grading, ...).
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};
struct UnsupportedError : std::domain_error {
  using std::domain_error::domain_error;
};

// Outcome of a bulk verification sweep (relation instances, homology pieces).
struct CheckReport {
  std::size_t checked = 0;             // instances examined
  std::vector<std::string> failures;   // one witness string per failure
  bool ok() const { return failures.empty(); }
};

// Run fn(i) for i in [0, count) on up to `jobs` threads. jobs <= 1 runs inline.
// fn must be safe to call concurrently for distinct i.
inline void parallel_for(std::size_t count, int jobs,
                         const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned workers = static_cast<unsigned>(jobs);
  unsigned hw = std::thread::hardware_concurrency();
  if (hw != 0 && workers > hw) workers = hw;
  if (workers > count) workers = static_cast<unsigned>(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

inline int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// xorshift-style deterministic RNG for seeded sampling (stable across
// platforms, unlike std::mt19937 distributions).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

}  // namespace strands
