#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fitraffic {

/// A ring of L binary sites (1 = car, 0 = empty), packed one bit per site.
///
/// Site i lives in bit (i % 64) of word (i / 64); bits past L in the last
/// word are always zero. Values are immutable once built: evolution
/// functions return a new Configuration.
class Configuration {
 public:
  static constexpr std::size_t kWordBits = 64;

  /// All-empty ring of the given length. Throws std::invalid_argument if
  /// length == 0.
  static Configuration empty(std::size_t length);

  /// Parses a "0"/"1" literal; the leftmost character is site 0.
  static Configuration from_string(std::string_view sites);

  static Configuration from_car_positions(std::size_t length, std::span<const std::size_t> positions);

  /// Takes ownership of packed words. Bits past `length` are cleared.
  static Configuration from_words(std::size_t length, std::vector<std::uint64_t> words);

  std::size_t length() const noexcept { return length_; }
  std::size_t car_count() const noexcept;

  bool operator[](std::size_t site) const noexcept {
    return (words_[site / kWordBits] >> (site % kWordBits)) & 1U;
  }

  /// Periodic access: any integer index is reduced modulo L.
  bool at_ring(std::ptrdiff_t site) const noexcept {
    const auto len = static_cast<std::ptrdiff_t>(length_);
    auto idx = site % len;
    if (idx < 0) {
      idx += len;
    }
    return (*this)[static_cast<std::size_t>(idx)];
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Calls fn(position) for each car in increasing site order.
  template <class Fn>
  void for_each_car(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> car_positions() const;
  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Configuration(std::size_t length, std::vector<std::uint64_t> words);

  std::size_t length_;
  std::vector<std::uint64_t> words_;
};

inline std::size_t word_count(std::size_t length) {
  return (length + Configuration::kWordBits - 1) / Configuration::kWordBits;
}

}  // namespace fitraffic
