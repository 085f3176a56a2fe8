#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanforge {

using Index = std::size_t;
using Tuple = std::vector<Index>;

enum class ErrorKind {
  DimensionOutOfRange,
  BadHornIndex,
  NotCoskeletal,
  NotKan,
  NotSubcomplex,
  NotGroupoidBase,
  NotOneKanGroupoid,
  NotTwoKanGroupoid,
  BudgetExceeded,
  Parse,
  Invalid,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::BadHornIndex: return "BadHornIndex";
    case ErrorKind::NotCoskeletal: return "NotCoskeletal";
    case ErrorKind::NotKan: return "NotKan";
    case ErrorKind::NotSubcomplex: return "NotSubcomplex";
    case ErrorKind::NotGroupoidBase: return "NotGroupoidBase";
    case ErrorKind::NotOneKanGroupoid: return "NotOneKanGroupoid";
    case ErrorKind::NotTwoKanGroupoid: return "NotTwoKanGroupoid";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Invalid: return "Invalid";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::uint64_t default_budget_cap() {
  if (const char* env = std::getenv("KANFORGE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

/// Counts candidate evaluations of one enumeration and aborts past the cap.
class Budget {
 public:
  Budget() : cap_(default_budget_cap()) {}
  explicit Budget(std::uint64_t cap) : cap_(cap) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > cap_)
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration exceeded " + std::to_string(cap_) + " candidate evaluations");
  }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Index v : t) {
      h ^= std::hash<Index>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// Disjoint-set forest over 0..n-1; roots are always the least member.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<Index> parent_;
};

}  // namespace kanforge
