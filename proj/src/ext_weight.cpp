#include "wdom/ext_weight.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace wdom {

ExtWeight::ExtWeight(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("ExtWeight: finite value must be nonnegative and finite");
  }
}

double ExtWeight::value() const {
  if (infinite_) throw ParamAlgebraError("ExtWeight: value() of infinity");
  return value_;
}

ExtWeight saturating_add(ExtWeight a, ExtWeight b) {
  if (a.is_infinite() || b.is_infinite()) return ExtWeight::infinity();
  return ExtWeight(a.value() + b.value());
}

std::string format_weight(double w) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w);
  if (ec != std::errc()) throw std::runtime_error("format_weight: conversion failed");
  return std::string(buf.data(), end);
}

std::string format_weight(ExtWeight w) {
  if (w.is_infinite()) return "inf";
  return format_weight(w.value());
}

ExtWeight OpCounter::add(ExtWeight a, ExtWeight b) {
  ++additions;
  return saturating_add(a, b);
}

ExtWeight OpCounter::subtract(ExtWeight a, double w) {
  ++additions;
  if (a.is_infinite()) {
    throw ParamAlgebraError("parameter algebra: subtracting a vertex weight from infinity");
  }
  double d = a.value() - w;
  if (d < 0.0) {
    throw ParamAlgebraError("parameter algebra: subtraction produced a negative weight");
  }
  return ExtWeight(d);
}

ExtWeight OpCounter::min(ExtWeight a, ExtWeight b) { return argmin(a, b).value; }

MinPick OpCounter::argmin(ExtWeight a, ExtWeight b) {
  ++min_ops;
  if (b < a) return {b, true};
  return {a, false};
}

}  // namespace wdom
