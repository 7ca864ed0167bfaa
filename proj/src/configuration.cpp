#include "fitraffic/configuration.hpp"

#include <stdexcept>

namespace fitraffic {

Configuration::Configuration(std::size_t length, std::vector<std::uint64_t> words)
    : length_(length), words_(std::move(words)) {}

Configuration Configuration::empty(std::size_t length) {
  if (length == 0) {
    throw std::invalid_argument("lattice length must be at least 1");
  }
  return Configuration(length, std::vector<std::uint64_t>(word_count(length), 0));
}

Configuration Configuration::from_string(std::string_view sites) {
  auto words = std::vector<std::uint64_t>(word_count(sites.size()), 0);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const char c = sites[i];
    if (c == '1') {
      words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
    } else if (c != '0') {
      throw std::invalid_argument("configuration literal may only contain '0' and '1'");
    }
  }
  if (sites.empty()) {
    throw std::invalid_argument("lattice length must be at least 1");
  }
  return Configuration(sites.size(), std::move(words));
}

Configuration Configuration::from_car_positions(std::size_t length, std::span<const std::size_t> positions) {
  Configuration config = empty(length);
  for (std::size_t p : positions) {
    if (p >= length) {
      throw std::out_of_range("car position outside the lattice");
    }
    config.words_[p / kWordBits] |= std::uint64_t{1} << (p % kWordBits);
  }
  return config;
}

Configuration Configuration::from_words(std::size_t length, std::vector<std::uint64_t> words) {
  if (length == 0) {
    throw std::invalid_argument("lattice length must be at least 1");
  }
  if (words.size() != word_count(length)) {
    throw std::invalid_argument("word count does not match lattice length");
  }
  if (const std::size_t tail = length % kWordBits; tail != 0) {
    words.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return Configuration(length, std::move(words));
}

std::size_t Configuration::car_count() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) {
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

std::vector<std::size_t> Configuration::car_positions() const {
  std::vector<std::size_t> out;
  out.reserve(car_count());
  for_each_car([&](std::size_t p) { out.push_back(p); });
  return out;
}

std::string Configuration::to_string() const {
  std::string out(length_, '0');
  for_each_car([&](std::size_t p) { out[p] = '1'; });
  return out;
}

}  // namespace fitraffic
