#pragma once

#include <cstdint>

#include "cluster_crystal/errors.hpp"
#include "cluster_crystal/rational.hpp"

namespace cluster_crystal {

/// (Q, +, x) restricted to the operations a subtraction-free expression
/// needs.  Inputs need not be positive; division by zero is reported.
struct PositiveRationals {
  using value_type = Rational;

  static value_type constant(std::uint64_t n) { return Rational(static_cast<unsigned long>(n)); }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type div(const value_type& a, const value_type& b) {
    if (b == 0) throw DomainError("division_by_zero", "denominator evaluates to zero");
    return a / b;
  }
  static value_type pow(const value_type& a, long e) { return power(a, e); }
};

/// The tropical semifield of integers: plus is max, times is +, division is -.
/// Overflow of the 64-bit carrier is reported instead of wrapping.
struct TropicalIntegers {
  using value_type = std::int64_t;

  static value_type constant(std::uint64_t) { return 0; }
  static value_type add(value_type a, value_type b) { return a > b ? a : b; }
  static value_type mul(value_type a, value_type b) {
    value_type out;
    if (__builtin_add_overflow(a, b, &out)) overflow();
    return out;
  }
  static value_type div(value_type a, value_type b) {
    value_type out;
    if (__builtin_sub_overflow(a, b, &out)) overflow();
    return out;
  }
  static value_type pow(value_type a, long e) {
    value_type out;
    if (__builtin_mul_overflow(a, static_cast<value_type>(e), &out)) overflow();
    return out;
  }

 private:
  [[noreturn]] static void overflow() { throw DomainError("overflow", "tropical value exceeds 64-bit range"); }
};

}  // namespace cluster_crystal
