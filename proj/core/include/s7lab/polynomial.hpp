#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "s7lab/types.hpp"

namespace s7lab {

using Exponent = std::array<std::uint8_t, 8>;

int total_degree(const Exponent& e);

// Polynomial in x_1..x_8 with exact rational coefficients. Zero coefficients are
// never stored.
class Polynomial8 {
public:
    using Terms = std::map<Exponent, Rational>;

    Polynomial8() = default;

    static Polynomial8 constant(const Rational& c);
    static Polynomial8 monomial(const Exponent& e, const Rational& c = 1);
    static Polynomial8 coordinate(int i);  // x_{i+1}, 0-based index
    // sum_i c_i x_i
    static Polynomial8 linear(const std::array<Rational, 8>& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;
    Rational coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    Polynomial8& operator+=(const Polynomial8& other);
    Polynomial8& operator-=(const Polynomial8& other);
    Polynomial8& operator*=(const Rational& s);

    friend Polynomial8 operator+(Polynomial8 a, const Polynomial8& b) { return a += b; }
    friend Polynomial8 operator-(Polynomial8 a, const Polynomial8& b) { return a -= b; }
    friend Polynomial8 operator*(const Rational& s, Polynomial8 p) { return p *= s; }
    friend Polynomial8 operator*(const Polynomial8& a, const Polynomial8& b);
    friend bool operator==(const Polynomial8& a, const Polynomial8& b) { return a.terms_ == b.terms_; }

    Polynomial8 derivative(int i) const;
    // The derivation X(M) = sum_ij M_ij x_j d/dx_i.
    Polynomial8 apply_field(const Mat8i& m) const;
    Polynomial8 flat_laplacian() const;

    double evaluate(const Vec8& z) const;
    // Gradient at z, used for evaluating first-order fields pointwise.
    Vec8 gradient(const Vec8& z) const;

    std::string to_string() const;

private:
    Terms terms_;
};

}  // namespace s7lab
