#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace convord {

using Int = long long;
using Rat = boost::rational<Int>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline bool is_integral(const Rat& x) { return x.denominator() == 1; }

/// Square integer matrix, row-major; column j is the image of basis vector j.
struct IntMat {
    int n = 0;
    std::vector<Int> a;

    IntMat() = default;
    explicit IntMat(int n_) : n(n_), a(size_t(n_) * n_, 0) {}

    Int& operator()(int i, int j) { return a[size_t(i) * n + j]; }
    Int operator()(int i, int j) const { return a[size_t(i) * n + j]; }

    static IntMat id(int n) {
        IntMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
    bool operator<(const IntMat& o) const { return a < o.a; }
};

inline IntMat operator*(const IntMat& x, const IntMat& y) {
    IntMat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            Int v = x(i, k);
            if (v == 0) continue;
            for (int j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

inline IntVec operator*(const IntMat& m, const IntVec& v) {
    IntVec r(m.n, 0);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[i] += m(i, j) * v[j];
    return r;
}

inline RatVec operator*(const IntMat& m, const RatVec& v) {
    RatVec r(m.n, Rat(0));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r[i] += Rat(m(i, j)) * v[j];
    return r;
}

inline IntVec operator+(const IntVec& x, const IntVec& y) {
    IntVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

inline IntVec operator-(const IntVec& x) {
    IntVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
    return r;
}

inline RatVec operator+(const RatVec& x, const RatVec& y) {
    RatVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

inline RatVec operator-(const RatVec& x) {
    RatVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
    return r;
}

/// Solve A x = b exactly by Gaussian elimination; throws on singular A.
RatVec solve_rational(std::vector<RatVec> A, RatVec b);

/// Exact inverse; throws unless the inverse is again integral.
IntMat inverse(const IntMat& m);

}  // namespace convord
