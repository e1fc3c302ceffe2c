#pragma once

#include <concepts>
#include <cstdint>
#include <string>

namespace hypersmooth {

/// The coefficient-domain interface shared by GaloisField and RationalField.
/// Elements are plain values; every operation goes through the field object.
template <class F>
concept ExactField = std::copy_constructible<F> && requires(const F& f, const typename F::Element& a, long long n) {
  typename F::Element;
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.sub(a, a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.div(a, a) } -> std::same_as<typename F::Element>;
  { f.neg(a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.equal(a, a) } -> std::convertible_to<bool>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { f == f } -> std::convertible_to<bool>;
};

}  // namespace hypersmooth
