#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kpar/errors.hpp"

namespace kpar {

// Arbitrary-precision signed integer, sign/magnitude over base 2^32.
// Magnitudes are little-endian with no trailing zero limbs.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
            u >>= 32;
        }
    }

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw ParseError("empty integer literal");
        std::size_t i = 0;
        int sign = 1;
        if (s[0] == '-' || s[0] == '+') {
            sign = s[0] == '-' ? -1 : 1;
            i = 1;
        }
        if (i == s.size()) throw ParseError("integer literal has no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("bad digit in integer literal: " + s);
            mul_small(r.mag_, 10);
            add_small(r.mag_, static_cast<std::uint32_t>(s[i] - '0'));
        }
        r.sign_ = r.mag_.empty() ? 0 : sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }

    bool fits_int64() const {
        return cmp_mag(mag_, BigInt(std::int64_t(1) << 62).mag_) < 0;
    }

    long long to_int64() const {
        long long v = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
        return sign_ < 0 ? -v : v;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint32_t rem = divmod_small(m, 1000000000u);
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        return std::string(digits.rbegin(), digits.rend());
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            const BigInt& big = c > 0 ? a : b;
            const BigInt& small = c > 0 ? b : a;
            r.mag_ = sub_mag(big.mag_, small.mag_);
            r.sign_ = big.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                                    r.mag_[i + j] + carry;
                r.mag_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        trim(r.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated toward zero, like built-in integer division.
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.sign_ < 0) c = -c;
        return c <=> 0;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.mag_.empty() ? 0 : 1;
        b.sign_ = b.mag_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt r = a % b;
            a = b;
            b = r;
        }
        return a;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    static void trim(std::vector<std::uint32_t>& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                                (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // Requires a >= b.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (std::int64_t(1) << 32);
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        trim(r);
        return r;
    }

    static void mul_small(std::vector<std::uint32_t>& m, std::uint32_t v) {
        std::uint64_t carry = 0;
        for (auto& limb : m) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * v + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    static void add_small(std::vector<std::uint32_t>& m, std::uint32_t v) {
        std::uint64_t carry = v;
        for (std::size_t i = 0; carry && i < m.size(); ++i) {
            std::uint64_t cur = m[i] + carry;
            m[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    static std::uint32_t divmod_small(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(m);
        return static_cast<std::uint32_t>(rem);
    }

    static std::size_t bit_length(const std::vector<std::uint32_t>& m) {
        if (m.empty()) return 0;
        std::uint32_t top = m.back();
        std::size_t bits = (m.size() - 1) * 32;
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    static bool test_bit(const std::vector<std::uint32_t>& m, std::size_t i) {
        return (m[i / 32] >> (i % 32)) & 1u;
    }

    static void shl1(std::vector<std::uint32_t>& m) {
        std::uint32_t carry = 0;
        for (auto& limb : m) {
            std::uint32_t next = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next;
        }
        if (carry) m.push_back(carry);
    }

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw DivisionByZero();
        q = BigInt();
        r = BigInt();
        if (a.is_zero()) return;
        if (cmp_mag(a.mag_, b.mag_) < 0) {
            r = a;
            return;
        }
        std::size_t bits = bit_length(a.mag_);
        q.mag_.assign(a.mag_.size(), 0);
        std::vector<std::uint32_t> rem;
        for (std::size_t i = bits; i-- > 0;) {
            shl1(rem);
            if (test_bit(a.mag_, i)) {
                if (rem.empty()) rem.push_back(1);
                else rem[0] |= 1;
            }
            if (cmp_mag(rem, b.mag_) >= 0) {
                rem = sub_mag(rem, b.mag_);
                q.mag_[i / 32] |= (1u << (i % 32));
            }
        }
        trim(q.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.mag_ = std::move(rem);
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }
};

} // namespace kpar
