#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twocrit {

// Fixed symbol universe of the algebra pipeline.
enum class Var : int { z = 0, t = 1, lambda = 2, c = 3, mu = 4 };
inline constexpr int kNumVars = 5;
const char* var_name(Var v);

struct Monomial {
    std::array<int16_t, kNumVars> e{};

    int total_degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    int operator[](Var v) const { return e[static_cast<int>(v)]; }
    bool divides(const Monomial& other) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }
    bool is_unit() const { return total_degree() == 0; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with symbol priority z > t > lambda > c > mu.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (int i = 0; i < kNumVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

// Sparse multivariate polynomial over arbitrary-precision integers. No zero
// coefficients are stored; terms are kept in canonical graded-lex order.
class IntPoly {
  public:
    using Terms = std::map<Monomial, mpz_class, GrlexLess>;

    IntPoly() = default;
    static IntPoly constant(long v);
    static IntPoly constant(const mpz_class& v);
    static IntPoly variable(Var v);
    static IntPoly monomial(const Monomial& mono, const mpz_class& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    std::vector<Var> used_variables() const;
    bool uses(Var v) const { return degree(v) > 0; }
    int degree(Var v) const;       // -1 for the zero polynomial
    int total_degree() const;      // -1 for the zero polynomial
    mpz_class constant_value() const;

    // Coefficient of v^k, a polynomial in the remaining variables.
    IntPoly coefficient_of(Var v, int k) const;
    IntPoly leading_coefficient(Var v) const;
    mpz_class leading_coeff_grlex() const;

    mpz_class integer_content() const;  // gcd of |coefficients|, 0 for zero
    Monomial monomial_content() const;  // componentwise min exponent

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const mpz_class& s);
    IntPoly pow(int e) const;

    // Exact division; `try_` returns false (and leaves quotient unspecified)
    // when the divisor does not divide exactly.
    bool try_divide_exact(const IntPoly& divisor, IntPoly& quotient) const;
    IntPoly divide_exact(const IntPoly& divisor) const;

    IntPoly substitute(Var v, const mpz_class& value) const;
    IntPoly rename(Var from, Var to) const;  // `to` must be absent
    std::complex<double> eval(
        const std::array<std::complex<double>, kNumVars>& point) const;

    // Canonical rendering: terms in descending graded-lex order, explicit ^.
    std::string to_string() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

  private:
    void insert_add(const Monomial& mono, const mpz_class& coeff);
    Terms terms_;
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const mpz_class& s, IntPoly a);

// GCD of two polynomials in a single shared variable (primitive PRS over Z),
// normalized to a positive leading coefficient. Throws if either input
// involves more than one variable.
IntPoly gcd_univariate(const IntPoly& a, const IntPoly& b);

}  // namespace twocrit
