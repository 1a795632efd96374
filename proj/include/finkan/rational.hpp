#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace finkan {

/* Exact rational scalar. Thin value wrapper around GMP's mpq_class so the
   rest of the code never sees expression templates; every value is kept
   canonical (gcd 1, positive denominator). */
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(static_cast<long>(n)) {}
    Rat(int n) : q_(static_cast<long>(n)) {}
    Rat(long num, long den);

    // Accepts "p" or "p/q" with optional sign; rejects zero denominators.
    static Rat parse(const std::string& text);

    std::string str() const;

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    std::string numerator_str() const { return q_.get_num().get_str(); }
    std::string denominator_str() const { return q_.get_den().get_str(); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);  // throws on division by zero

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

Rat abs(const Rat& r);

std::ostream& operator<<(std::ostream& os, const Rat& r);

struct MalformedScalar : std::runtime_error {
    explicit MalformedScalar(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace finkan
