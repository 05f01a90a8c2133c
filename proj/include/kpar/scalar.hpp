#pragma once

#include <cstdint>
#include <string>

#include "kpar/bigint.hpp"
#include "kpar/errors.hpp"

namespace kpar {

/// Reduced fraction of BigInts. Denominator is positive and coprime to the
/// numerator; zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(den_, num_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

/// Coefficient field tag: the rationals or a prime field GF(p).
struct Field {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static Field rationals() { return Field{Kind::rationals, 0}; }

    static Field gf(std::uint32_t p) {
        if (p < 2) throw SchemaError("prime field modulus must be >= 2");
        for (std::uint32_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) throw SchemaError("modulus " + std::to_string(p) + " is not prime");
        }
        return Field{Kind::prime, p};
    }

    friend bool operator==(const Field&, const Field&) = default;

    std::string str() const {
        return kind == Kind::rationals ? "Q" : "GF(" + std::to_string(p) + ")";
    }
};

/// Exact element of Q or GF(p). Zero doubles as the undefined marker of a
/// partial factor set.
class FieldScalar {
public:
    FieldScalar() = default;

    static FieldScalar zero(Field f) { return from_int(f, 0); }
    static FieldScalar one(Field f) { return from_int(f, 1); }

    static FieldScalar from_int(Field f, long long v) {
        FieldScalar s;
        s.field_ = f;
        if (f.kind == Field::Kind::rationals) {
            s.rat_ = Rational(v);
        } else {
            long long m = v % static_cast<long long>(f.p);
            if (m < 0) m += f.p;
            s.res_ = static_cast<std::uint64_t>(m);
        }
        return s;
    }

    static FieldScalar rational(Rational r) {
        FieldScalar s;
        s.field_ = Field::rationals();
        s.rat_ = std::move(r);
        return s;
    }

    static FieldScalar residue(Field f, std::uint64_t r) {
        if (f.kind != Field::Kind::prime) throw FieldMismatch();
        FieldScalar s;
        s.field_ = f;
        s.res_ = r % f.p;
        return s;
    }

    Field field() const { return field_; }
    const Rational& rat() const { return rat_; }
    std::uint64_t res() const { return res_; }

    bool is_zero() const {
        return field_.kind == Field::Kind::rationals ? rat_.is_zero() : res_ == 0;
    }
    bool is_one() const {
        return field_.kind == Field::Kind::rationals ? rat_.is_one() : res_ == 1;
    }

    FieldScalar operator-() const {
        FieldScalar s = *this;
        if (field_.kind == Field::Kind::rationals) s.rat_ = -s.rat_;
        else if (s.res_) s.res_ = field_.p - s.res_;
        return s;
    }

    FieldScalar inv() const {
        if (is_zero()) throw DivisionByZero();
        FieldScalar s = *this;
        if (field_.kind == Field::Kind::rationals) {
            s.rat_ = s.rat_.inv();
        } else {
            s.res_ = pow_mod(res_, field_.p - 2, field_.p);
        }
        return s;
    }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
        a.require_same_field(b);
        FieldScalar s = a;
        if (a.field_.kind == Field::Kind::rationals) s.rat_ = a.rat_ + b.rat_;
        else s.res_ = (a.res_ + b.res_) % a.field_.p;
        return s;
    }

    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) { return a + (-b); }

    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
        a.require_same_field(b);
        FieldScalar s = a;
        if (a.field_.kind == Field::Kind::rationals) s.rat_ = a.rat_ * b.rat_;
        else s.res_ = (a.res_ * b.res_) % a.field_.p;
        return s;
    }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        if (a.field_ != b.field_) return false;
        return a.field_.kind == Field::Kind::rationals ? a.rat_ == b.rat_ : a.res_ == b.res_;
    }

    std::string str() const {
        return field_.kind == Field::Kind::rationals ? rat_.str() : std::to_string(res_);
    }

private:
    Field field_ = Field::rationals();
    Rational rat_;
    std::uint64_t res_ = 0;

    void require_same_field(const FieldScalar& other) const {
        if (field_ != other.field_) throw FieldMismatch();
    }

    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1 % m;
        b %= m;
        while (e) {
            if (e & 1) r = r * b % m;
            b = b * b % m;
            e >>= 1;
        }
        return r;
    }
};

} // namespace kpar
