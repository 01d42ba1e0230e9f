#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <stdexcept>
#include <string>

namespace hc {

using Real = boost::multiprecision::mpfr_float;

// Process-wide numeric context. Precision is set once at startup, before any
// Scalar is constructed; tolerance is the equality threshold used everywhere.
struct NumericContext {
    unsigned precision_bits = 256;
    Real tolerance;

    static NumericContext& instance();
    void set_precision_bits(unsigned bits);
    void set_tolerance(const Real& tol) { tolerance = tol; }

private:
    NumericContext();
};

void init_numeric(unsigned precision_bits, const std::string& tolerance = "1e-30");
const Real& tol();

// Element of the coefficient field: a complex number with high-precision
// real and imaginary parts. Immutable-after-construction in practice; all
// arithmetic returns new values.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(int v) : re_(v), im_(0) {}
    Scalar(const Real& re) : re_(re), im_(0) {}
    Scalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Real(0), Real(1)); }
    // Parses "3", "-5/2", "1.25", "1e-3" and "a+b*i" is not supported on
    // purpose: CLI inputs are real rationals/decimals.
    static Scalar parse(const std::string& s);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }

    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar operator/(const Scalar& o) const;

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    // this -= f*b, the elimination kernel.
    void submul(const Scalar& f, const Scalar& b) {
        re_ -= f.re_ * b.re_ - f.im_ * b.im_;
        im_ -= f.re_ * b.im_ + f.im_ * b.re_;
    }

    Scalar inv() const;
    Scalar conj() const { return Scalar(re_, -im_); }
    // Integer power, negative allowed.
    Scalar pow(long k) const;

    Real abs() const;
    // |re|+|im|, cheap magnitude used for pivoting and residuals.
    Real abs1() const;

    bool is_zero(const Real& eps) const { return abs1() <= eps; }
    bool is_zero() const { return is_zero(tol()); }
    bool near(const Scalar& o, const Real& eps) const { return (*this - o).abs1() <= eps; }
    bool near(const Scalar& o) const { return near(o, tol()); }

    std::string str(unsigned digits = 0) const;
    std::string re_str(unsigned digits = 0) const;
    std::string im_str(unsigned digits = 0) const;

private:
    Real re_, im_;
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

// Principal-branch square root: nonnegative real part; on the imaginary
// axis boundary the result has nonnegative imaginary part, so sqrt(-1) = i.
// Memoized; equal inputs give bitwise-identical results.
Scalar sqrt_principal(const Scalar& s);

} // namespace hc
