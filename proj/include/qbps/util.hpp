#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qbps {

using Rational = mpq_class;

// Error taxonomy shared with the CLI exit codes: bad user input (2),
// a request exceeding the configured enumeration caps (3), a broken
// internal invariant (4).
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

class capacity_error : public std::runtime_error {
public:
  capacity_error(const std::string& what, unsigned long long required)
      : std::runtime_error(what), required_size(required) {}
  unsigned long long required_size;
};

class internal_error : public std::runtime_error {
public:
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "3", "-1/2", "+2/4" (canonicalized). Throws input_error.
Rational parse_rational(std::string_view s);
// Renders as "p/q", or "p" when the denominator is 1. Never floats.
std::string rational_str(const Rational& r);

bool is_prime(int n);
// The n smallest primes, ascending.
std::vector<int> first_primes(int n);
int mobius(int n);

uint64_t fnv1a64(std::string_view s);
std::string hex64(uint64_t v);

}  // namespace qbps
