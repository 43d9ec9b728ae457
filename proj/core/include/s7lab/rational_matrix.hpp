#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "s7lab/types.hpp"

namespace s7lab {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// Nearest long double; exact when numerator and denominator fit in 64 bits.
long double to_long_double(const Rational& q);

// Sparse exact matrix stored by columns.
class RationalMatrix {
public:
    using Column = std::map<int, Rational>;

    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int n, const Rational& scale = 1);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(columns_.size()); }
    const Column& column(int j) const { return columns_[j]; }

    Rational get(int i, int j) const;
    void add(int i, int j, const Rational& v);
    void set_column(int j, Column column);

    std::size_t nonzeros() const;
    bool is_zero() const;
    Rational trace() const;
    Rational max_abs() const;

    RationalMatrix transpose() const;

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);
    RationalMatrix& operator*=(const Rational& s);
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    Eigen::MatrixXd to_dense() const;
    MatrixXld to_dense_long_double() const;

private:
    int rows_ = 0;
    std::vector<Column> columns_;
};

}  // namespace s7lab
