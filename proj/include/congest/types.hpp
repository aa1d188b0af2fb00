#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace congest {

// Node identifiers are dense in [0, n). The numeric order doubles as the
// ID order used by every tie-break in the library.
using NodeId = std::uint32_t;
using Weight = std::int64_t;
using Round = std::int64_t;

// A shortest-path distance that is either a finite integer or "unreachable".
// Infinity is a distinct state, never a large number, so it cannot leak into
// arithmetic.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(Weight value) : finite_(true), value_(value) {}

  static constexpr Distance infinity() { return Distance(); }

  constexpr bool finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  Weight value() const {
    if (!finite_) throw std::logic_error("value() of infinite distance");
    return value_;
  }

  // inf + w = inf.
  constexpr Distance plus(Weight w) const {
    return finite_ ? Distance(value_ + w) : Distance();
  }
  constexpr Distance plus(Distance other) const {
    return finite_ && other.finite_ ? Distance(value_ + other.value_)
                                    : Distance();
  }

  friend constexpr bool operator==(const Distance& a, const Distance& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Distance& a,
                                                    const Distance& b) {
    if (a.finite_ != b.finite_) {
      return a.finite_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return finite_ ? std::to_string(value_) : std::string("inf");
  }

 private:
  bool finite_ = false;
  Weight value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Distance& d) {
  return os << d.to_string();
}

inline constexpr Distance min(Distance a, Distance b) { return b < a ? b : a; }

// (distance, hop count) pair compared lexicographically: the order in which
// hop-bounded shortest paths are preferred.
struct Label {
  Weight dist = 0;
  std::int64_t hops = 0;

  friend constexpr auto operator<=>(const Label&, const Label&) = default;
  friend constexpr bool operator==(const Label&, const Label&) = default;

  constexpr Label extend(Weight w) const { return {dist + w, hops + 1}; }
};

inline std::ostream& operator<<(std::ostream& os, const Label& l) {
  return os << "(" << l.dist << "," << l.hops << ")";
}

using MaybeLabel = std::optional<Label>;

// Library-wide error root. Each failure mode named by the algorithms has its
// own subclass so callers (and the CLI exit codes) can tell them apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CONGEST_DEFINE_ERROR(Name, Base)   \
  class Name : public Base {               \
   public:                                 \
    using Base::Base;                      \
  }

CONGEST_DEFINE_ERROR(GraphError, Error);
CONGEST_DEFINE_ERROR(SelfLoop, GraphError);
CONGEST_DEFINE_ERROR(DuplicateEdge, GraphError);
CONGEST_DEFINE_ERROR(NegativeWeightInNonnegativeMode, GraphError);
CONGEST_DEFINE_ERROR(NodeOutOfRange, GraphError);
CONGEST_DEFINE_ERROR(ParseError, GraphError);
CONGEST_DEFINE_ERROR(InvalidGeneratorSpec, GraphError);

CONGEST_DEFINE_ERROR(EngineError, Error);
CONGEST_DEFINE_ERROR(RoundLimitExceeded, EngineError);
CONGEST_DEFINE_ERROR(MessageTooLarge, EngineError);
CONGEST_DEFINE_ERROR(LocalityViolation, EngineError);

CONGEST_DEFINE_ERROR(AlgorithmError, Error);
CONGEST_DEFINE_ERROR(NegativeWeight, AlgorithmError);
CONGEST_DEFINE_ERROR(NegativeCycle, AlgorithmError);
CONGEST_DEFINE_ERROR(InvalidHopBound, AlgorithmError);
CONGEST_DEFINE_ERROR(NotATree, AlgorithmError);
CONGEST_DEFINE_ERROR(AllZero, AlgorithmError);
CONGEST_DEFINE_ERROR(EpsilonTooSmall, AlgorithmError);
CONGEST_DEFINE_ERROR(InvalidArgument, AlgorithmError);

#undef CONGEST_DEFINE_ERROR

}  // namespace congest
