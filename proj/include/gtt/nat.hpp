#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace gtt {

using Nat = boost::multiprecision::cpp_int;

// Bijective base-256: every byte string (including runs with leading zeros)
// maps to a distinct natural. bias(k) = number of byte strings shorter than k.
inline Nat base256_bias(std::size_t k) {
  Nat b = 0;
  for (std::size_t i = 0; i < k; ++i) b = b * 256 + 1;
  return b;
}

inline Nat bytes_to_nat(const std::vector<std::uint8_t>& bytes) {
  Nat n = 0;
  for (std::uint8_t c : bytes) n = n * 256 + c;
  return n + base256_bias(bytes.size());
}

inline std::vector<std::uint8_t> nat_to_bytes(Nat n) {
  std::size_t k = 0;
  Nat bias = 0;
  for (;;) {
    Nat next = bias * 256 + 1;  // bias(k+1)
    if (n < next) break;
    bias = next;
    ++k;
  }
  n -= bias;
  std::vector<std::uint8_t> out(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(n & 0xff);
    n >>= 8;
  }
  return out;
}

inline std::string nat_to_string(const Nat& n) { return n.str(); }

}  // namespace gtt
