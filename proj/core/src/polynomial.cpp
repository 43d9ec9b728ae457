#include "s7lab/polynomial.hpp"

#include <cmath>

namespace s7lab {

int total_degree(const Exponent& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

Polynomial8 Polynomial8::constant(const Rational& c) { return monomial(Exponent{}, c); }

Polynomial8 Polynomial8::monomial(const Exponent& e, const Rational& c) {
    Polynomial8 p;
    p.add_term(e, c);
    return p;
}

Polynomial8 Polynomial8::coordinate(int i) {
    Exponent e{};
    e[i] = 1;
    return monomial(e);
}

Polynomial8 Polynomial8::linear(const std::array<Rational, 8>& c) {
    Polynomial8 p;
    for (int i = 0; i < 8; ++i) {
        Exponent e{};
        e[i] = 1;
        p.add_term(e, c[i]);
    }
    return p;
}

int Polynomial8::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool Polynomial8::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        const int de = total_degree(e);
        if (d >= 0 && de != d) return false;
        d = de;
    }
    return true;
}

Rational Polynomial8::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial8::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial8& Polynomial8::operator+=(const Polynomial8& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial8& Polynomial8::operator-=(const Polynomial8& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial8& Polynomial8::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial8 operator*(const Polynomial8& a, const Polynomial8& b) {
    Polynomial8 out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e;
            for (int i = 0; i < 8; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial8 Polynomial8::derivative(int i) const {
    Polynomial8 out;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d = e;
        --d[i];
        out.add_term(d, c * e[i]);
    }
    return out;
}

Polynomial8 Polynomial8::apply_field(const Mat8i& m) const {
    Polynomial8 out;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < 8; ++i) {
            if (e[i] == 0) continue;
            for (int j = 0; j < 8; ++j) {
                if (m(i, j) == 0) continue;
                // x_j d/dx_i applied to x^e
                Exponent d = e;
                --d[i];
                ++d[j];
                out.add_term(d, c * (e[i] * m(i, j)));
            }
        }
    }
    return out;
}

Polynomial8 Polynomial8::flat_laplacian() const {
    Polynomial8 out;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < 8; ++i) {
            if (e[i] < 2) continue;
            Exponent d = e;
            d[i] -= 2;
            out.add_term(d, c * (e[i] * (e[i] - 1)));
        }
    }
    return out;
}

namespace {

double monomial_value(const Exponent& e, const Vec8& z) {
    double v = 1.0;
    for (int i = 0; i < 8; ++i)
        for (int p = 0; p < e[i]; ++p) v *= z[i];
    return v;
}

}  // namespace

double Polynomial8::evaluate(const Vec8& z) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) s += c.get_d() * monomial_value(e, z);
    return s;
}

Vec8 Polynomial8::gradient(const Vec8& z) const {
    Vec8 g;
    for (int i = 0; i < 8; ++i) g[i] = derivative(i).evaluate(z);
    return g;
}

std::string Polynomial8::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.get_str();
        for (int i = 0; i < 8; ++i) {
            if (e[i] == 0) continue;
            s += "*x" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

}  // namespace s7lab
