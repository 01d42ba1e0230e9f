#include "hc/scalar.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

namespace hc {

NumericContext::NumericContext() {
    set_precision_bits(256);
    tolerance = Real("1e-30");
}

NumericContext& NumericContext::instance() {
    static NumericContext ctx;
    return ctx;
}

void NumericContext::set_precision_bits(unsigned bits) {
    precision_bits = bits;
    // boost mpfr_float counts decimal digits.
    unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2;
    Real::default_precision(digits10);
}

void init_numeric(unsigned precision_bits, const std::string& tolerance) {
    auto& ctx = NumericContext::instance();
    ctx.set_precision_bits(precision_bits);
    ctx.set_tolerance(Real(tolerance));
}

const Real& tol() { return NumericContext::instance().tolerance; }

Scalar Scalar::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Real num(s.substr(0, slash));
        Real den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        return Scalar(num / den);
    }
    return Scalar(Real(s));
}

Scalar Scalar::operator/(const Scalar& o) const {
    Real d = o.re_ * o.re_ + o.im_ * o.im_;
    if (d == 0) throw std::domain_error("division by zero scalar");
    return Scalar((re_ * o.re_ + im_ * o.im_) / d, (im_ * o.re_ - re_ * o.im_) / d);
}

Scalar Scalar::inv() const {
    Real d = re_ * re_ + im_ * im_;
    if (d == 0) throw std::domain_error("inverse of zero scalar");
    return Scalar(re_ / d, -im_ / d);
}

Scalar Scalar::pow(long k) const {
    if (k < 0) return inv().pow(-k);
    Scalar acc(1), base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Real Scalar::abs() const {
    Real t = re_ * re_ + im_ * im_;
    return sqrt(t);
}

Real Scalar::abs1() const {
    return boost::multiprecision::abs(re_) + boost::multiprecision::abs(im_);
}

std::string Scalar::re_str(unsigned digits) const { return re_.str(digits); }
std::string Scalar::im_str(unsigned digits) const { return im_.str(digits); }

std::string Scalar::str(unsigned digits) const {
    if (im_ == 0) return re_.str(digits ? digits : 12);
    return re_.str(digits ? digits : 12) + (im_ >= 0 ? "+" : "") + im_.str(digits ? digits : 12) + "i";
}

namespace {

Scalar sqrt_raw(const Scalar& s) {
    const Real& x = s.re();
    const Real& y = s.im();
    if (y == 0) {
        if (x >= 0) return Scalar(sqrt(x));
        Real r = -x;
        return Scalar(Real(0), sqrt(r));
    }
    Real mod = s.abs();
    Real u = sqrt((mod + x) / 2);
    Real v = sqrt((mod - x) / 2);
    if (y < 0) v = -v;
    return Scalar(u, v); // u > 0 since y != 0
}

std::string memo_key(const Scalar& s) {
    return s.re().str(0, std::ios_base::scientific) + "|" + s.im().str(0, std::ios_base::scientific);
}

} // namespace

Scalar sqrt_principal(const Scalar& s) {
    static std::unordered_map<std::string, Scalar> memo;
    static std::mutex mu;
    std::string key = memo_key(s);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Scalar r = sqrt_raw(s);
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(key, r).first->second;
}

} // namespace hc
