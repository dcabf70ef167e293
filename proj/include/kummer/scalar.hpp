#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace kummer {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string int_str(const Int& v) {
    return v.str();
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) {
        os << '/' << denominator(r);
    }
    return os.str();
}

inline bool is_integer(const Rat& r) {
    return denominator(r) == 1;
}

inline int sgn(const Rat& r) {
    return r.sign();
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

// Double factorial with the conventions 0!! = (-1)!! = 1.
inline Int double_factorial(int n) {
    Int r = 1;
    while (n > 0) {
        r *= n;
        n -= 2;
    }
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e < 0) {
        if (base == 0) {
            throw std::domain_error("zero to a negative power");
        }
        return 1 / rat_pow(base, -e);
    }
    Rat r = 1;
    Rat b = base;
    while (e > 0) {
        if (e & 1) {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bool is_perfect_square(const Int& v, Int& root) {
    if (v < 0) {
        return false;
    }
    root = sqrt(v);
    return root * root == v;
}

// Element a + b*sqrt(d) of a quadratic extension of the rationals.  The
// radicand d is itself a rational (negative and fractional values both
// occur).  A vanishing b forces d = 0, so plain rationals carry no
// extension tag and combine freely with elements of any single extension;
// combining two distinct nonzero radicands is an error, not a tower.
struct Quad {
    Rat a;
    Rat b;
    Rat d;

    Quad() : a(0), b(0), d(0) {}
    Quad(int v) : a(v), b(0), d(0) {}
    Quad(const Int& v) : a(v), b(0), d(0) {}
    Quad(const Rat& v) : a(v), b(0), d(0) {}
    Quad(Rat a_, Rat b_, Rat d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
        normalize();
    }

    static Quad sqrt_of(const Rat& rad) {
        return Quad(Rat(0), Rat(1), rad);
    }

    void normalize() {
        if (b == 0 || d == 0) {
            b = 0;
            d = 0;
            return;
        }
        if (d > 0) {
            Int rn, rd;
            if (is_perfect_square(numerator(d), rn) && is_perfect_square(denominator(d), rd)) {
                a += b * Rat(rn, rd);
                b = 0;
                d = 0;
            }
        }
    }

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    const Rat& rational() const {
        if (!is_rational()) {
            throw std::domain_error("not a rational value");
        }
        return a;
    }

    Quad conj() const { return Quad(a, -b, d); }
    Rat norm() const { return a * a - d * b * b; }

    static Rat join(const Quad& x, const Quad& y) {
        if (x.d == y.d) {
            return x.d;
        }
        if (x.b == 0) {
            return y.d;
        }
        if (y.b == 0) {
            return x.d;
        }
        throw std::invalid_argument("mixing distinct quadratic extensions");
    }

    Quad operator-() const { return Quad(-a, -b, d); }

    Quad& operator+=(const Quad& o) {
        d = join(*this, o);
        a += o.a;
        b += o.b;
        normalize();
        return *this;
    }
    Quad& operator-=(const Quad& o) {
        d = join(*this, o);
        a -= o.a;
        b -= o.b;
        normalize();
        return *this;
    }
    Quad& operator*=(const Quad& o) {
        Rat dd = join(*this, o);
        Rat na = a * o.a + dd * b * o.b;
        Rat nb = a * o.b + b * o.a;
        a = na;
        b = nb;
        d = dd;
        normalize();
        return *this;
    }

    Quad inverse() const {
        Rat n = norm();
        if (n == 0) {
            throw std::domain_error("division by zero");
        }
        return Quad(a / n, -b / n, d);
    }

    friend Quad operator+(Quad x, const Quad& y) { return x += y; }
    friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
    friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inverse(); }
    friend bool operator==(const Quad& x, const Quad& y) {
        return x.a == y.a && x.b == y.b && (x.b == 0 || x.d == y.d);
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
};

inline Quad quad_pow(const Quad& base, int e) {
    if (e < 0) {
        return quad_pow(base.inverse(), -e);
    }
    Quad r(1);
    Quad b = base;
    while (e > 0) {
        if (e & 1) {
            r *= b;
        }
        b *= b;
        e >>= 1;
    }
    return r;
}

// "a", "a+b*sqrt(d)" or "a-b*sqrt(d)", all pieces in p/q form.
inline std::string quad_str(const Quad& q) {
    if (q.is_rational()) {
        return rat_str(q.a);
    }
    std::ostringstream os;
    os << rat_str(q.a);
    if (q.b > 0) {
        os << '+' << rat_str(q.b);
    } else {
        os << '-' << rat_str(-q.b);
    }
    os << "*sqrt(" << rat_str(q.d) << ')';
    return os.str();
}

// Uniform field hooks used by the templated linear algebra.

inline Rat conj_of(const Rat& v) { return v; }
inline Quad conj_of(const Quad& v) { return v.conj(); }

inline bool is_zero(const Rat& v) { return v == 0; }
inline bool is_zero(const Quad& v) { return v.is_zero(); }

inline Rat inverse_of(const Rat& v) {
    if (v == 0) {
        throw std::domain_error("division by zero");
    }
    return 1 / v;
}
inline Quad inverse_of(const Quad& v) { return v.inverse(); }

inline std::string scalar_str(const Rat& v) { return rat_str(v); }
inline std::string scalar_str(const Quad& v) { return quad_str(v); }

}  // namespace kummer
