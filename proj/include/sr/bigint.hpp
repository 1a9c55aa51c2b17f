#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sr {

/// Sign-magnitude arbitrary-precision integer (base 2^32 limbs).
/// Sized for this library's needs: shift products, factorials and the
/// occasional escalated elimination, all well under a few hundred limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, mirrors integer literals

    static BigInt from_string(const std::string& s);
    static BigInt factorial(int n);
    static BigInt binomial(int n, int k);
    static BigInt pow(const BigInt& base, int exp);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncated division (quotient rounds toward zero, remainder has
    /// the dividend's sign), matching C++ integer semantics.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    static BigInt gcd(const BigInt& a, const BigInt& b);

    /// -1, 0, +1 as a < b, a == b, a > b.
    static int compare(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return compare(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return compare(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return compare(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return compare(a, b) >= 0; }

    bool fits_int64() const;
    long long to_int64() const;  // throws on overflow
    std::string to_string() const;
    double to_double() const;  // approximate rendering only

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no trailing zeros

    void trim();
    static int compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    int bit_length() const;
    bool bit(int i) const;
    void shift_left_1();
    void sub_in_place_mag(const BigInt& b);
    std::uint32_t divmod_small(std::uint32_t d);  // in-place quotient, returns remainder
};

/// Exact rational with normalized representation: denominator > 0, gcd 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == BigInt(1); }
    bool is_zero() const { return num_.is_zero(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    static int compare(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

    std::string to_string() const;  // "p/q", or "p" when integral
    double to_double() const;       // approximate rendering only

private:
    BigInt num_, den_;
    void normalize();
};

} // namespace sr
