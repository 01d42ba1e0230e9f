#pragma once

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hc/params.hpp"

#include <random>

namespace hc::testing {

struct Init {
    Init() { hc::init_numeric(256, "1e-30"); }
};
static Init init_once;

inline Params nd_s(int n, const char* q = "2") {
    Params p;
    p.flavor = Flavor::NonDegenerate;
    p.bullet = Bullet::S;
    p.m = 0;
    p.q = Scalar::parse(q);
    p.n = n;
    return p;
}

inline Params nd_zero(int n) {
    Params p;
    p.flavor = Flavor::NonDegenerate;
    p.bullet = Bullet::Zero;
    p.m = 1;
    p.q = Scalar::parse("2");
    p.Q = {Scalar::parse("3")};
    p.n = n;
    return p;
}

inline Params nd_ss(int n) {
    Params p;
    p.flavor = Flavor::NonDegenerate;
    p.bullet = Bullet::SS;
    p.m = 0;
    p.q = Scalar::parse("2");
    p.n = n;
    return p;
}

inline Params deg_s(int n) { // Sergeev: g = x_1
    Params p;
    p.flavor = Flavor::Degenerate;
    p.bullet = Bullet::S;
    p.m = 0;
    p.n = n;
    return p;
}

inline Params deg_zero(int n) {
    Params p;
    p.flavor = Flavor::Degenerate;
    p.bullet = Bullet::Zero;
    p.m = 1;
    p.Q = {Scalar::parse("5/2")};
    p.n = n;
    return p;
}

inline std::vector<Params> default_configs(int n) {
    return {nd_zero(n), nd_s(n), nd_ss(n), deg_zero(n), deg_s(n)};
}

inline bool close(const Scalar& a, const Scalar& b) { return a.near(b); }

} // namespace hc::testing
