#include "hilbzeta/bigint.hpp"
#include "hilbzeta/error.hpp"

#include <algorithm>
#include <cctype>

namespace hilbzeta {

namespace {
constexpr uint64_t kBase = uint64_t(1) << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value > 0 ? 1 : -1;
    // careful with LLONG_MIN: negate in unsigned arithmetic
    uint64_t mag = value > 0 ? static_cast<uint64_t>(value)
                             : ~static_cast<uint64_t>(value) + 1;
    mag_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
    if (mag >> 32) mag_.push_back(static_cast<uint32_t>(mag >> 32));
}

void BigInt::normalize() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

bool BigInt::is_one() const {
    return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1;
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

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const std::vector<uint32_t>& lo = a.size() < b.size() ? a : b;
    const std::vector<uint32_t>& hi = a.size() < b.size() ? b : a;
    std::vector<uint32_t> out(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
        uint64_t sum = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        out[i] = static_cast<uint32_t>(sum & 0xffffffffu);
        carry = sum >> 32;
    }
    out[hi.size()] = static_cast<uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t diff = int64_t(a[i]) - borrow - (i < b.size() ? int64_t(b[i]) : 0);
        if (diff < 0) {
            diff += int64_t(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(diff);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& quot, std::vector<uint32_t>& rem) {
    quot.clear();
    rem.clear();
    if (b.empty()) fail(Error::Kind::argument, "division by zero");
    if (compare_mag(a, b) < 0) {
        rem = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], r = 0;
        quot.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | a[i];
            quot[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        if (r) rem.push_back(static_cast<uint32_t>(r));
        return;
    }

    // normalize so the divisor's top limb has its high bit set
    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    size_t n = b.size(), m = a.size() - n;
    std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
    for (size_t i = a.size(); i-- > 0;) {
        u[i] = a[i] << shift;
        if (shift && i > 0) u[i] |= static_cast<uint32_t>(uint64_t(a[i - 1]) >> (32 - shift));
    }
    if (shift) u[a.size()] = static_cast<uint32_t>(uint64_t(a.back()) >> (32 - shift));
    for (size_t i = n; i-- > 0;) {
        v[i] = b[i] << shift;
        if (shift && i > 0) v[i] |= static_cast<uint32_t>(uint64_t(b[i - 1]) >> (32 - shift));
    }

    quot.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t num = (uint64_t(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / v[n - 1];
        uint64_t rhat = num % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t t = int64_t(u[i + j]) - borrow - int64_t(p & 0xffffffffu);
            if (t < 0) {
                t += int64_t(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(t);
        }
        int64_t t = int64_t(u[j + n]) - borrow - int64_t(carry);
        if (t < 0) {
            // qhat was one too large: add divisor back
            t += int64_t(kBase);
            --qhat;
            uint64_t c = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = uint64_t(u[i + j]) + v[i] + c;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                c = s >> 32;
            }
            t += int64_t(c);
            t &= int64_t(kBase - 1);
        }
        u[j + n] = static_cast<uint32_t>(t);
        quot[j] = static_cast<uint32_t>(qhat);
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();

    rem.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        rem[i] = u[i] >> shift;
        if (shift && i + 1 < u.size()) rem[i] |= static_cast<uint32_t>(uint64_t(u[i + 1]) << (32 - shift));
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) { *this = rhs; return *this; }
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
    } else {
        int c = compare_mag(mag_, rhs.mag_);
        if (c == 0) { sign_ = 0; mag_.clear(); return *this; }
        if (c > 0) {
            mag_ = sub_mag(mag_, rhs.mag_);
        } else {
            mag_ = sub_mag(rhs.mag_, mag_);
            sign_ = rhs.sign_;
        }
    }
    normalize();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    return *this += -rhs;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.sign_ == 0 || rhs.sign_ == 0) return out;
    out.sign_ = lhs.sign_ * rhs.sign_;
    out.mag_ = BigInt::mul_mag(lhs.mag_, rhs.mag_);
    out.normalize();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) fail(Error::Kind::argument, "division by zero");
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = BigInt();
    r = BigInt();
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
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

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = compare_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(unsigned exponent) const {
    BigInt result(1), base = *this;
    while (exponent) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    uint64_t v = (uint64_t(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return v <= uint64_t(INT64_MAX);
    return v <= uint64_t(INT64_MAX) + 1;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) fail(Error::Kind::argument, "BigInt does not fit in 64 bits: " + to_string());
    uint64_t v = 0;
    if (mag_.size() > 1) v = uint64_t(mag_[1]) << 32;
    if (!mag_.empty()) v |= mag_[0];
    return sign_ < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
}

BigInt BigInt::from_string(std::string_view text) {
    size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    if (i == text.size()) fail(Error::Kind::parse, "empty integer literal");
    BigInt out;
    while (i < text.size()) {
        size_t take = std::min<size_t>(9, text.size() - i);
        long long chunk = 0, scale = 1;
        for (size_t k = 0; k < take; ++k, ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                fail(Error::Kind::parse, "bad digit in integer literal");
            chunk = chunk * 10 + (text[i] - '0');
            scale *= 10;
        }
        out = out * BigInt(scale) + BigInt(chunk);
    }
    if (sign < 0) out = -out;
    return out;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> work = mag_;
    std::string digits;
    const std::vector<uint32_t> ten9 = {1000000000u};
    while (!work.empty()) {
        std::vector<uint32_t> q, r;
        divmod_mag(work, ten9, q, r);
        uint32_t chunk = r.empty() ? 0 : r[0];
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        work = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

size_t BigInt::hash() const {
    size_t h = static_cast<size_t>(sign_) + 0x9e3779b97f4a7c15ull;
    for (uint32_t limb : mag_) h = h * 1099511628211ull ^ limb;
    return h;
}

} // namespace hilbzeta
