#pragma once

#include <stdexcept>
#include <string>

namespace mlsb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonOctetLength : public Error {
 public:
  explicit NonOctetLength(std::size_t length)
      : Error("bit stream length " + std::to_string(length) +
              " is not a multiple of 8") {}
};

class EmptyKey : public Error {
 public:
  EmptyKey() : Error("secret key must hold at least one byte") {}
};

class OrderTooSmall : public Error {
 public:
  explicit OrderTooSmall(long long n)
      : Error("order " + std::to_string(n) +
              " is too small, smallest supported magic square has order 3") {}
};

class ValueOutOfRange : public Error {
 public:
  ValueOutOfRange(long long value, long long max)
      : Error("value " + std::to_string(value) + " outside [1, " +
              std::to_string(max) + "]") {}
};

class NonSquareImage : public Error {
 public:
  NonSquareImage(long long width, long long height)
      : Error("image is " + std::to_string(width) + "x" +
              std::to_string(height) +
              ", magic traversal requires a square image") {}
};

class EcOutOfRange : public Error {
 public:
  explicit EcOutOfRange(const std::string& what)
      : Error("embedding capacity " + what + " outside (0, 2]") {}
};

class CapacityExceeded : public Error {
 public:
  CapacityExceeded(std::size_t requested_bits, std::size_t available_bits)
      : Error("capacity exceeded: need " + std::to_string(requested_bits) +
              " bits, only " + std::to_string(available_bits) + " available"),
        requested_bits(requested_bits),
        available_bits(available_bits) {}

  std::size_t requested_bits;
  std::size_t available_bits;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(long long aw, long long ah, long long bw, long long bh)
      : Error("image dimensions differ: " + std::to_string(aw) + "x" +
              std::to_string(ah) + " vs " + std::to_string(bw) + "x" +
              std::to_string(bh)) {}
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class BadMagic : public Error {
 public:
  BadMagic() : Error("not a binary PGM file (magic number is not P5)") {}
};

class MalformedHeader : public Error {
 public:
  explicit MalformedHeader(const std::string& what)
      : Error("malformed PGM header: " + what) {}
};

class UnsupportedMaxval : public Error {
 public:
  explicit UnsupportedMaxval(long long maxval)
      : Error("unsupported PGM maxval " + std::to_string(maxval) +
              ", only 255 is supported") {}
};

class TruncatedRaster : public Error {
 public:
  TruncatedRaster(std::size_t expected, std::size_t got)
      : Error("truncated PGM raster: expected " + std::to_string(expected) +
              " bytes, got " + std::to_string(got)) {}
};

class HeaderTooLarge : public Error {
 public:
  HeaderTooLarge(std::size_t declared_bits, std::size_t available_bits)
      : Error("embedded header declares " + std::to_string(declared_bits) +
              " payload bits but only " + std::to_string(available_bits) +
              " fit; wrong key, capacity or cover?") {}
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

}  // namespace mlsb
