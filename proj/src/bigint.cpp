#include "sr/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "sr/errors.hpp"

namespace sr {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow on LLONG_MIN by working in unsigned space
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(u));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
        out[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    out[big.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += std::int64_t(1) << 32;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(s);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::compare_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    r.sign_ = r.mag_.empty() ? 0 : a.sign_ * b.sign_;
    return r;
}

int BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    int top = 32;
    std::uint32_t hi = mag_.back();
    while (!(hi & 0x80000000u)) {
        hi <<= 1;
        --top;
    }
    return static_cast<int>(mag_.size() - 1) * 32 + top;
}

bool BigInt::bit(int i) const {
    std::size_t limb = static_cast<std::size_t>(i) / 32;
    if (limb >= mag_.size()) return false;
    return (mag_[limb] >> (i % 32)) & 1;
}

void BigInt::shift_left_1() {
    std::uint32_t carry = 0;
    for (auto& limb : mag_) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) mag_.push_back(carry);
}

void BigInt::sub_in_place_mag(const BigInt& b) {
    mag_ = sub_mag(mag_, b.mag_);
}

// Binary long division on magnitudes; adequate for the few hundred bits
// this library ever sees.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) fail(errc::internal, "BigInt division by zero");
    BigInt absA = a.abs(), absB = b.abs();
    if (compare_mag(absA.mag_, absB.mag_) < 0) {
        q = BigInt();
        r = a;
        return;
    }
    BigInt quot, rem;
    rem.sign_ = 1;
    int nbits = absA.bit_length();
    std::vector<std::uint32_t> qbits(static_cast<std::size_t>((nbits + 31) / 32), 0);
    for (int i = nbits - 1; i >= 0; --i) {
        rem.shift_left_1();
        if (absA.bit(i)) {
            if (rem.mag_.empty()) rem.mag_.push_back(1);
            else rem.mag_[0] |= 1;
        }
        if (!rem.mag_.empty() && compare_mag(rem.mag_, absB.mag_) >= 0) {
            rem.sub_in_place_mag(absB);
            qbits[static_cast<std::size_t>(i) / 32] |= std::uint32_t(1) << (i % 32);
        }
    }
    quot.mag_ = std::move(qbits);
    quot.sign_ = 1;
    quot.trim();
    rem.trim();
    // truncated semantics: sign of quotient = product of signs, remainder follows a
    if (!quot.is_zero()) quot.sign_ = a.sign_ * b.sign_;
    if (!rem.is_zero()) rem.sign_ = a.sign_;
    q = std::move(quot);
    r = std::move(rem);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = compare_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ >= 0) return u <= 0x7FFFFFFFFFFFFFFFull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) fail(errc::overflow, "BigInt does not fit in 64 bits");
    std::uint64_t u = 0;
    if (mag_.size() >= 1) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ >= 0) return static_cast<long long>(u);
    return static_cast<long long>(~u + 1);
}

std::uint32_t BigInt::divmod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag_[i];
        mag_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    BigInt tmp = abs();
    std::string digits;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.divmod_small(1000000000u);
        if (tmp.is_zero()) {
            std::string part = std::to_string(chunk);
            std::reverse(part.begin(), part.end());
            digits += part;
        } else {
            for (int i = 0; i < 9; ++i) {
                digits += static_cast<char>('0' + chunk % 10);
                chunk /= 10;
            }
        }
    }
    if (sign_ < 0) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double out = 0.0;
    for (std::size_t i = mag_.size(); i-- > 0;) out = out * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -out : out;
}

BigInt BigInt::from_string(const std::string& s) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos >= s.size()) fail(errc::parse_error, "empty integer literal");
    BigInt out;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos])))
            fail(errc::parse_error, "bad digit in integer literal: " + s);
        out = out * BigInt(10) + BigInt(s[pos] - '0');
    }
    if (sign < 0) out = -out;
    return out;
}

BigInt BigInt::factorial(int n) {
    if (n < 0) fail(errc::parameter_out_of_range, "factorial of negative value");
    BigInt out(1);
    for (int i = 2; i <= n; ++i) out *= BigInt(i);
    return out;
}

BigInt BigInt::binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt out(1);
    for (int i = 1; i <= k; ++i) {
        out *= BigInt(n - k + i);
        out = out / BigInt(i);  // exact at every step
    }
    return out;
}

BigInt BigInt::pow(const BigInt& base, int exp) {
    BigInt out(1);
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::internal, "rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) fail(errc::internal, "rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

int Rational::compare(const Rational& a, const Rational& b) {
    return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

double Rational::to_double() const {
    return num_.to_double() / den_.to_double();
}

} // namespace sr
