#include "gshds/cyclotomic.hpp"

#include <stdexcept>

#include "gshds/pgroup.hpp"

namespace gshds {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

Cyclotomic::Cyclotomic(long p, int s) : p_(p), s_(s) {
    if (p < 3 || s < 1) throw std::invalid_argument("bad cyclotomic level");
    level_ = ipow(p, s);
    coeff_.assign(static_cast<size_t>(ipow(p, s - 1) * (p - 1)), 0);
}

Cyclotomic Cyclotomic::integer(long p, int s, long long n) {
    Cyclotomic c(p, s);
    c.coeff_[0] = n;
    return c;
}

// Reduce a full exponent vector (size p^s) against Phi_{p^s}:
// x^i for i >= phi rewrites as -sum_{j=0}^{p-2} x^{i - phi + j m}, m = p^{s-1}.
Cyclotomic from_exponent_map(long p, int s, const std::vector<long long>& full) {
    Cyclotomic out(p, s);
    std::vector<long long> w = full;
    long long m = ipow(p, s - 1);
    long long phi = m * (p - 1);
    for (long long i = static_cast<long long>(w.size()) - 1; i >= phi; --i) {
        long long c = w[i];
        if (c == 0) continue;
        w[i] = 0;
        for (long j = 0; j <= p - 2; ++j) w[i - phi + j * m] -= c;
    }
    for (long long i = 0; i < phi; ++i) out.coeff_[i] = w[i];
    return out;
}

Cyclotomic Cyclotomic::root_power(long p, int s, long long e) {
    Cyclotomic c(p, s);
    long long lvl = c.level_;
    e %= lvl;
    if (e < 0) e += lvl;
    std::vector<long long> full(lvl, 0);
    full[e] = 1;
    return from_exponent_map(p, s, full);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (p_ != o.p_ || s_ != o.s_) throw std::invalid_argument("level mismatch");
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (p_ != o.p_ || s_ != o.s_) throw std::invalid_argument("level mismatch");
    for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (p_ != o.p_ || s_ != o.s_) throw std::invalid_argument("level mismatch");
    std::vector<long long> full(level_, 0);
    size_t n = coeff_.size();
    for (size_t i = 0; i < n; ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.coeff_[j] == 0) continue;
            full[(i + j) % level_] += coeff_[i] * o.coeff_[j];
        }
    }
    return from_exponent_map(p_, s_, full);
}

Cyclotomic Cyclotomic::operator*(long long n) const {
    Cyclotomic r = *this;
    for (auto& c : r.coeff_) c *= n;
    return r;
}

Cyclotomic Cyclotomic::galois(long long n) const {
    n %= level_;
    if (n < 0) n += level_;
    if (n % p_ == 0) throw std::invalid_argument("Galois action needs gcd(n,p)=1");
    std::vector<long long> full(level_, 0);
    for (size_t i = 0; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) full[i * n % level_] += coeff_[i];
    return from_exponent_map(p_, s_, full);
}

bool Cyclotomic::is_zero() const {
    for (long long c : coeff_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_integer() const {
    for (size_t i = 1; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) return false;
    return true;
}

long long Cyclotomic::integer_value() const {
    if (!is_integer()) throw std::logic_error("value is not a rational integer");
    return coeff_[0];
}

Cyclotomic Cyclotomic::lift_to_level(int t) const {
    if (t < s_) throw std::invalid_argument("can only lift to a higher level");
    if (t == s_) return *this;
    Cyclotomic out(p_, t);
    long long stretch = ipow(p_, t - s_);
    std::vector<long long> full(out.level_, 0);
    for (size_t i = 0; i < coeff_.size(); ++i)
        if (coeff_[i] != 0) full[i * stretch] += coeff_[i];
    return from_exponent_map(p_, t, full);
}

std::string Cyclotomic::str() const {
    std::string s = "[";
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeff_[i]);
    }
    return s + "]";
}

Cyclotomic omega_qr(long p, int s) {
    long long m = ipow(p, s - 1);  // eta_p = eta^{p^{s-1}}
    Cyclotomic acc(p, s);
    for (long n = 1; n < p; ++n)
        if (legendre(n, p) == 1) acc += Cyclotomic::root_power(p, s, n * m);
    return acc;
}

Cyclotomic omega_qnr(long p, int s) {
    long long m = ipow(p, s - 1);
    Cyclotomic acc(p, s);
    for (long n = 1; n < p; ++n)
        if (legendre(n, p) == -1) acc += Cyclotomic::root_power(p, s, n * m);
    return acc;
}

Cyclotomic gauss_sum(long p, int s) {
    long long m = ipow(p, s - 1);
    Cyclotomic acc(p, s);
    for (long n = 1; n < p; ++n) {
        Cyclotomic t = Cyclotomic::root_power(p, s, n * m);
        acc += (legendre(n, p) == 1) ? t : -t;
    }
    return acc;
}

}  // namespace gshds
