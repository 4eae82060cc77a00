#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "z2n/errors.hpp"

namespace z2n {

// An element of Z_2^n, stored as a bit vector of length n.
// Addition is componentwise mod 2; the scalar product is taken over the
// integers so callers can distinguish even from odd self-pairing.
class Degree {
public:
    Degree() = default;
    explicit Degree(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    static Degree zero(int n) { return Degree(std::vector<std::uint8_t>(n, 0)); }

    // Degree at position `index` of the lexicographic enumeration:
    // the bits of `index` written most-significant first.
    static Degree from_index(int n, std::size_t index);

    int n() const { return static_cast<int>(bits_.size()); }
    std::uint8_t bit(int i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    bool is_zero() const;
    // Position in the lexicographic enumeration of Z_2^n.
    std::size_t index() const;

    Degree operator+(const Degree& o) const;
    bool operator==(const Degree& o) const { return bits_ == o.bits_; }
    bool operator!=(const Degree& o) const { return bits_ != o.bits_; }
    bool operator<(const Degree& o) const;

    std::string to_string() const;
    // Parses a bitstring such as "01"; length fixes n.
    static Degree from_string(const std::string& s);

private:
    std::vector<std::uint8_t> bits_;
};

// All 2^n degrees in lexicographic order; index 0 is the zero degree.
std::vector<Degree> enumerate_degrees(int n);

// Sum_i a_i * b_i over the integers.
int scalar_product(const Degree& a, const Degree& b);

// (-1)^{<a,b>}.
int koszul_sign(const Degree& a, const Degree& b);

} // namespace z2n
