#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gshds {

/// Exact element of Z[eta] with eta a primitive p^s-th root of unity,
/// reduced against the cyclotomic polynomial
///   Phi_{p^s}(x) = sum_{j=0}^{p-1} x^{j p^{s-1}}.
/// Coefficients index the basis 1, eta, ..., eta^{phi(p^s)-1}; the reduced
/// representation is unique, so operator== is exact equality.
class Cyclotomic {
  public:
    Cyclotomic() = default;
    Cyclotomic(long p, int s);  // zero at the given level

    static Cyclotomic zero(long p, int s) { return Cyclotomic(p, s); }
    static Cyclotomic integer(long p, int s, long long n);
    /// eta^{e mod p^s}
    static Cyclotomic root_power(long p, int s, long long e);

    long p() const { return p_; }
    int s() const { return s_; }
    long long level() const { return level_; }
    int phi() const { return static_cast<int>(coeff_.size()); }
    const std::vector<long long>& coeffs() const { return coeff_; }

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(long long n) const;
    bool operator==(const Cyclotomic& o) const {
        return p_ == o.p_ && s_ == o.s_ && coeff_ == o.coeff_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Galois action eta -> eta^n for gcd(n, p) = 1.
    Cyclotomic galois(long long n) const;
    /// Complex conjugation, eta -> eta^{-1}.
    Cyclotomic conj() const { return galois(level_ - 1); }

    bool is_zero() const;
    bool is_integer() const;
    long long integer_value() const;  // throws unless is_integer()

    /// Re-expresses this value in Z[eta_{p^t}] for t >= s via
    /// eta_{p^s} = eta_{p^t}^{p^{t-s}}.
    Cyclotomic lift_to_level(int t) const;

    std::string str() const;

  private:
    long p_ = 0;
    int s_ = 0;
    long long level_ = 0;  // p^s
    std::vector<long long> coeff_;

    void add_monomial(long long e, long long c);
    friend Cyclotomic from_exponent_map(long p, int s,
                                        const std::vector<long long>& full);
};

/// Reduces a full exponent vector (index e = coefficient of eta^e, size p^s)
/// into the canonical basis.
Cyclotomic from_exponent_map(long p, int s, const std::vector<long long>& full);

/// omega = sum of eta_p^n over quadratic residues n mod p; the companion
/// value omega^{(n0)} sums over the non-residues.  omega + omega^{(n0)} = -1.
Cyclotomic omega_qr(long p, int s);
Cyclotomic omega_qnr(long p, int s);

/// Quadratic Gauss sum g = sum_n (n|p) eta_p^n = omega - omega^{(n0)},
/// satisfying g^2 = (-1|p) p.  This is the exact representative of
/// sqrt((-1|p) p) used throughout.
Cyclotomic gauss_sum(long p, int s);

}  // namespace gshds
