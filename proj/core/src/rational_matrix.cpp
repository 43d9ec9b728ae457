#include "s7lab/rational_matrix.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace s7lab {

namespace {

bool fits_u64(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }

long double mpz_to_long_double(const mpz_class& z) {
    if (fits_u64(z)) {
        mpz_class a = abs(z);
        unsigned long long v = 0;
        mpz_export(&v, nullptr, -1, sizeof v, 0, 0, a.get_mpz_t());
        const long double r = static_cast<long double>(v);
        return sgn(z) < 0 ? -r : r;
    }
    return std::strtold(z.get_str().c_str(), nullptr);
}

}  // namespace

long double to_long_double(const Rational& q) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (fits_u64(num) && fits_u64(den)) return mpz_to_long_double(num) / mpz_to_long_double(den);
    // Scale to keep the quotient accurate when either part is huge.
    const long exp_shift = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    mpz_class scaled = num;
    const long extra = 80 - exp_shift;
    if (extra > 0)
        scaled <<= extra;
    else
        scaled >>= -extra;
    const mpz_class quotient = scaled / den;
    return std::ldexp(mpz_to_long_double(quotient), static_cast<int>(-extra));
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), columns_(cols) {}

RationalMatrix RationalMatrix::identity(int n, const Rational& scale) {
    RationalMatrix m(n, n);
    if (scale != 0)
        for (int i = 0; i < n; ++i) m.columns_[i].emplace(i, scale);
    return m;
}

Rational RationalMatrix::get(int i, int j) const {
    auto it = columns_[j].find(i);
    return it == columns_[j].end() ? Rational(0) : it->second;
}

void RationalMatrix::add(int i, int j, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = columns_[j].try_emplace(i, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) columns_[j].erase(it);
    }
}

void RationalMatrix::set_column(int j, Column column) { columns_[j] = std::move(column); }

std::size_t RationalMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

bool RationalMatrix::is_zero() const { return nonzeros() == 0; }

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (int j = 0; j < cols() && j < rows_; ++j) t += get(j, j);
    return t;
}

Rational RationalMatrix::max_abs() const {
    Rational m = 0;
    for (const auto& c : columns_)
        for (const auto& [i, v] : c)
            if (abs(v) > m) m = abs(v);
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols(), rows_);
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : columns_[j]) t.columns_[i].emplace(j, v);
    return t;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
    if (other.rows_ != rows_ || other.cols() != cols()) throw std::invalid_argument("RationalMatrix: shape mismatch");
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : other.columns_[j]) add(i, j, v);
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
    if (other.rows_ != rows_ || other.cols() != cols()) throw std::invalid_argument("RationalMatrix: shape mismatch");
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : other.columns_[j]) add(i, j, -v);
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    if (s == 0) {
        for (auto& c : columns_) c.clear();
        return *this;
    }
    for (auto& c : columns_)
        for (auto& [i, v] : c) v *= s;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
    RationalMatrix out(a.rows_, b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        RationalMatrix::Column col;
        for (const auto& [k, bkj] : b.columns_[j]) {
            for (const auto& [i, aik] : a.columns_[k]) {
                auto [it, inserted] = col.try_emplace(i, aik * bkj);
                if (!inserted) it->second += aik * bkj;
            }
        }
        for (auto it = col.begin(); it != col.end();) {
            if (it->second == 0)
                it = col.erase(it);
            else
                ++it;
        }
        out.columns_[j] = std::move(col);
    }
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

Eigen::MatrixXd RationalMatrix::to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows_, cols());
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : columns_[j]) m(i, j) = v.get_d();
    return m;
}

MatrixXld RationalMatrix::to_dense_long_double() const {
    MatrixXld m = MatrixXld::Zero(rows_, cols());
    for (int j = 0; j < cols(); ++j)
        for (const auto& [i, v] : columns_[j]) m(i, j) = to_long_double(v);
    return m;
}

}  // namespace s7lab
