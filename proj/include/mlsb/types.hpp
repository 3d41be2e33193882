#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace mlsb {

// 8-bit grayscale raster. Row-major storage so that raster traversal order
// (left-top towards right-bottom) equals memory order; height = rows(),
// width = cols().
using GrayImage =
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Ordered bit sequence, one element per bit, each element 0 or 1.
using BitStream = std::vector<std::uint8_t>;

// Key material for the bit cipher. Every keyed operation rejects an empty key.
struct SecretKey {
  std::vector<std::uint8_t> bytes;

  static SecretKey from_text(std::string_view text);
  // Accepts an even number of hex digits; throws std::invalid_argument.
  static SecretKey from_hex(std::string_view hex);
};

// Zero-based grid coordinate.
struct GridPos {
  Eigen::Index row = 0;
  Eigen::Index col = 0;

  friend bool operator==(const GridPos&, const GridPos&) = default;
};

// Embedding capacity in bits per pixel, kept as an exact reduced fraction so
// slot counts floor(ec * n^2) never suffer floating-point rounding.
class Ec {
 public:
  constexpr Ec() = default;
  Ec(std::int64_t num, std::int64_t den);

  // Parses a decimal literal such as "1", "0.5" or "1.5".
  // Throws EcOutOfRange on anything that is not a positive decimal.
  static Ec parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool in_range() const { return num_ > 0 && num_ <= 2 * den_; }

  // floor(ec * pixel_count)
  std::int64_t slots(std::int64_t pixel_count) const {
    return num_ * pixel_count / den_;
  }

  std::string str() const;

  friend bool operator==(const Ec&, const Ec&) = default;

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

inline std::vector<std::uint8_t> bytes_of(std::string_view text) {
  return {text.begin(), text.end()};
}

}  // namespace mlsb
