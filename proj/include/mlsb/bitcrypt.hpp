#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mlsb/types.hpp"

namespace mlsb {

// Keyed bit cipher applied to a message before embedding: every byte is
// expanded to bits, bit-reversed within its 8-bit block, and the resulting
// stream is XORed with the key's bit expansion repeated cyclically. Both
// layers are involutions, so decryption applies them in the opposite order.
// This is an obfuscation layer, not a cryptographically secure cipher.

// Expands bytes to bits, most significant bit of each byte first.
BitStream bytes_to_bits(std::span<const std::uint8_t> data);

// Inverse of bytes_to_bits. Throws NonOctetLength unless |bits| % 8 == 0.
std::vector<std::uint8_t> bits_to_bytes(const BitStream& bits);

// Reverses the bit order inside every 8-bit block. Involution.
// Throws NonOctetLength unless |bits| % 8 == 0.
BitStream reverse_each_byte(const BitStream& bits);

// out[i] = bits[i] XOR key_bits[i mod |key_bits|]. Involution for a fixed
// key. Throws EmptyKey.
BitStream xor_with_key(const BitStream& bits, const SecretKey& key);

// xor_with_key(reverse_each_byte(bytes_to_bits(message)), key)
BitStream pbsa_encrypt(std::span<const std::uint8_t> message,
                       const SecretKey& key);

// Exact inverse: XOR first, then per-byte reversal, then repack.
std::vector<std::uint8_t> pbsa_decrypt(const BitStream& cipher,
                                       const SecretKey& key);

}  // namespace mlsb
