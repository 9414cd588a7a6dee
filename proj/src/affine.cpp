#include "convord/affine.hpp"

#include <algorithm>

namespace convord {

bool is_real_root(const CartanData& c, const Root& r) { return c.is_finite_root(r.finite); }

bool is_imaginary_root(const CartanData&, const Root& r) {
    for (Int x : r.finite)
        if (x != 0) return false;
    return r.level != 0;
}

bool is_root(const CartanData& c, const Root& r) {
    return is_real_root(c, r) || is_imaginary_root(c, r);
}

bool is_positive(const CartanData&, const Root& r) {
    if (r.level != 0) return r.level > 0;
    return finite_root_sign({r.finite}) > 0;
}

Int height(const CartanData& c, const Root& r) {
    Int asum = 0;
    for (Int a : c.labels) asum += a;
    Int h = r.level * asum;
    for (Int x : r.finite) h += x;
    return h;
}

Root alpha(const CartanData& c, int i) {
    if (i == 0) return {1, -c.theta.coords};
    IntVec e(c.rank, 0);
    e[i - 1] = 1;
    return {0, e};
}

Root delta_root(const CartanData& c) { return {1, IntVec(c.rank, 0)}; }

Root finite_as_root(const FiniteRoot& r) { return {0, r.coords}; }

AffineWeylElement affine_identity(const CartanData& c) {
    return {RatVec(c.rank, Rat(0)), IntMat::id(c.rank)};
}

AffineWeylElement affine_of(const FiniteWeylElement& w) {
    return {RatVec(w.mat.n, Rat(0)), w.mat};
}

void validate_lattice(const CartanData& c, const RatVec& tau) {
    // tau = sum c_j coroot(j) with coroot(j) = (2/(a_j|a_j)) alpha_j, so the
    // alpha-coordinate tau_j determines c_j = tau_j (a_j|a_j)/2.
    for (int j = 0; j < c.rank; ++j) {
        Rat cj = tau[j] * c.gram[j][j] / Rat(2);
        if (!is_integral(cj)) throw std::invalid_argument("translation not in the lattice M");
    }
}

AffineWeylElement translation(const CartanData& c, const RatVec& lambda) {
    validate_lattice(c, lambda);
    return {lambda, IntMat::id(c.rank)};
}

AffineWeylElement mul(const AffineWeylElement& x, const AffineWeylElement& y) {
    return {x.tau + x.fin * y.tau, x.fin * y.fin};
}

AffineWeylElement inverse_element(const CartanData&, const AffineWeylElement& x) {
    IntMat fi = inverse(x.fin);
    return {-(fi * x.tau), fi};
}

Root act(const CartanData& c, const AffineWeylElement& x, const Root& beta) {
    IntVec eps = x.fin * beta.finite;
    Rat lvl = Rat(beta.level) - c.pair(eps, x.tau);
    if (!is_integral(lvl)) throw std::runtime_error("act: non-integral level");
    return {lvl.numerator(), eps};
}

Root act(const CartanData&, const FiniteWeylElement& w, const Root& beta) {
    return {beta.level, w.mat * beta.finite};
}

AffineWeylElement simple_reflection(const CartanData& c, int i) {
    if (i == 0) {
        // s_0 = t_{theta-coroot} s_theta; theta is long so its coroot is theta itself.
        return {to_rat(c.theta.coords), reflection_matrix(c, c.theta).mat};
    }
    return affine_of(simple_reflection_matrix(c, i));
}

AffineWeylElement reflection(const CartanData& c, const Root& r) {
    if (!is_real_root(c, r)) throw std::invalid_argument("reflection: not a real root");
    // s_r = t_{-m * rbar-coroot} s_{rbar} for r = m delta + rbar.
    Rat len = c.pair(r.finite, r.finite);
    RatVec tau(c.rank);
    for (int j = 0; j < c.rank; ++j) tau[j] = -Rat(r.level) * Rat(2) * Rat(r.finite[j]) / len;
    return {tau, reflection_matrix(c, {r.finite}).mat};
}

namespace {

// Smallest-index left descent of x, or -1 if none (then x = 1).
int left_descent(const CartanData& c, const AffineWeylElement& xinv) {
    for (int i = 0; i <= c.rank; ++i) {
        Root r = act(c, xinv, alpha(c, i));
        if (!is_positive(c, r)) return i;
    }
    return -1;
}

}  // namespace

ReducedWord reduced_word(const CartanData& c, const AffineWeylElement& x) {
    validate_lattice(c, x.tau);
    AffineWeylElement cur = x;
    AffineWeylElement curinv = inverse_element(c, x);
    ReducedWord w;
    for (;;) {
        int i = left_descent(c, curinv);
        if (i < 0) break;
        AffineWeylElement s = simple_reflection(c, i);
        cur = mul(s, cur);
        curinv = mul(curinv, s);
        w.letters.push_back(i);
    }
    if (!(cur == affine_identity(c))) throw std::runtime_error("reduced_word: descent stalled");
    return w;
}

Int length(const CartanData& c, const AffineWeylElement& x) {
    return Int(reduced_word(c, x).letters.size());
}

AffineWeylElement product_of_word(const CartanData& c, const ReducedWord& w) {
    AffineWeylElement x = affine_identity(c);
    for (int i : w.letters) x = mul(x, simple_reflection(c, i));
    return x;
}

std::vector<Root> inversion_set(const CartanData& c, const AffineWeylElement& x) {
    ReducedWord w = reduced_word(c, x);
    std::vector<Root> out;
    AffineWeylElement z = affine_identity(c);
    for (int i : w.letters) {
        out.push_back(act(c, z, alpha(c, i)));
        z = mul(z, simple_reflection(c, i));
    }
    return out;
}

}  // namespace convord
