#include "mlsb/types.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "mlsb/errors.hpp"

namespace mlsb {

SecretKey SecretKey::from_text(std::string_view text) {
  return SecretKey{bytes_of(text)};
}

SecretKey SecretKey::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
  };
  if (hex.size() % 2 != 0) {
    throw std::invalid_argument("hex key must have an even number of digits");
  }
  SecretKey key;
  key.bytes.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    key.bytes.push_back(
        static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return key;
}

Ec::Ec(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ <= 0) throw EcOutOfRange(std::to_string(num) + "/" + std::to_string(den));
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ec Ec::parse(std::string_view text) {
  const std::string shown(text);
  if (text.empty()) throw EcOutOfRange("''");

  std::int64_t num = 0;
  std::int64_t den = 1;
  std::size_t i = 0;
  std::size_t digits = 0;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_dot) throw EcOutOfRange("'" + shown + "'");
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw EcOutOfRange("'" + shown + "'");
    }
    if (++digits > 10) throw EcOutOfRange("'" + shown + "'");
    num = num * 10 + (c - '0');
    if (seen_dot) den *= 10;
  }
  if (digits == 0) throw EcOutOfRange("'" + shown + "'");
  return Ec(num, den);
}

std::string Ec::str() const {
  if (den_ == 1) return std::to_string(num_);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value());
  return buf;
}

}  // namespace mlsb
