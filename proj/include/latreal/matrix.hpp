#pragma once

#include <stdexcept>
#include <vector>

#include "latreal/numeric.hpp"

namespace latreal {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMat: negative dimension");
    }

    static IntMat identity(int n);
    static IntMat diagonal(const std::vector<BigInt>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const BigInt& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMat&) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    // Index (i, j) of the first asymmetric pair, or (-1, -1).
    std::pair<int, int> asymmetry() const;

    std::vector<BigInt> row(int i) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> a_;
};

IntMat mul(const IntMat& a, const IntMat& b);
IntMat transpose(const IntMat& a);
std::vector<BigInt> mul_vec(const IntMat& a, const std::vector<BigInt>& x);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(const IntMat& a);

/// Dense row-major matrix over exact rationals.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}

    static RatMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigRat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const BigRat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const RatMat&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigRat> a_;
};

RatMat to_rat(const IntMat& a);
RatMat mul(const RatMat& a, const RatMat& b);
RatMat transpose(const RatMat& a);

// Gauss-Jordan inverse; throws std::invalid_argument on a singular input.
RatMat rat_inverse(const RatMat& a);

bool is_integral(const RatMat& a);
// Throws unless every entry is an integer.
IntMat to_int(const RatMat& a);

}  // namespace latreal
