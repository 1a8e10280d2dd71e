#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hilbzeta {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
// Everything downstream (ring coefficients, interpolation, linear algebra)
// is exact; there is no floating point anywhere in the library.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);
    BigInt(int value) : BigInt(static_cast<long long>(value)) {}

    static BigInt from_string(std::string_view text);

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    // Truncated division: q rounds toward zero, remainder has the sign of
    // the dividend, a == q*b + r.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }
    static int compare(const BigInt& a, const BigInt& b);

    static BigInt gcd(BigInt a, BigInt b); // non-negative
    BigInt pow(unsigned exponent) const;

    bool fits_int64() const;
    long long to_int64() const; // throws Error on overflow

    std::string to_string() const;

    size_t hash() const;

private:
    int sign_ = 0;                // -1, 0, +1
    std::vector<uint32_t> mag_;   // little endian, no leading zero limbs

    void normalize();
    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& quot, std::vector<uint32_t>& rem);
};

} // namespace hilbzeta
