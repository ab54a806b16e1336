#ifndef WDOM_EXT_WEIGHT_HPP
#define WDOM_EXT_WEIGHT_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wdom {

/// Raised when the parameter algebra is driven outside its domain, e.g. a
/// vertex weight is subtracted from an infinite value.
class ParamAlgebraError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A nonnegative finite weight or +infinity.
///
/// Infinity is a separate state rather than a floating infinity, so every
/// saturating step is explicit. Ordering places infinity above every finite
/// value; two infinities compare equal.
class ExtWeight {
 public:
  constexpr ExtWeight() = default;
  explicit ExtWeight(double value);

  static constexpr ExtWeight infinity() {
    ExtWeight w;
    w.infinite_ = true;
    return w;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value; throws ParamAlgebraError on infinity.
  double value() const;

  friend constexpr bool operator==(const ExtWeight& a, const ExtWeight& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend constexpr std::partial_ordering operator<=>(const ExtWeight& a,
                                                     const ExtWeight& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Uncounted saturating addition. Solver code goes through OpCounter instead.
ExtWeight saturating_add(ExtWeight a, ExtWeight b);

/// Shortest round-trip decimal for finite values, `inf` otherwise.
std::string format_weight(ExtWeight w);
std::string format_weight(double w);

/// Which operand a counted min selected. Ties go to the first operand.
struct MinPick {
  ExtWeight value;
  bool second = false;
};

/// Tallies the weight arithmetic performed by the solver.
struct OpCounter {
  std::uint64_t additions = 0;
  std::uint64_t min_ops = 0;

  ExtWeight add(ExtWeight a, ExtWeight b);
  /// a - w, counted as one addition. Throws ParamAlgebraError when a is
  /// infinite or the difference would be negative.
  ExtWeight subtract(ExtWeight a, double w);
  ExtWeight min(ExtWeight a, ExtWeight b);
  MinPick argmin(ExtWeight a, ExtWeight b);

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace wdom

#endif  // WDOM_EXT_WEIGHT_HPP
