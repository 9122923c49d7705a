#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

namespace ainfty {

// Exact rational scalar over Q. Always canonical: lowest terms, positive
// denominator. There is no floating point anywhere in this library.
class Scalar {
public:
    Scalar() : q_(0) {}
    Scalar(long n) : q_(n) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p" or "p/q" with optional leading '-'. Rejects zero
    // denominators and any malformed input.
    static std::optional<Scalar> parse(const std::string& s);

    std::string str() const;  // canonical "p" or "p/q"

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Scalar operator-() const { return Scalar(mpq_class(-q_)); }
    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.q_ != b.q_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace ainfty
