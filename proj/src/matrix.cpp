#include "latreal/matrix.hpp"

namespace latreal {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::diagonal(const std::vector<BigInt>& d) {
    IntMat m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
    return m;
}

bool IntMat::is_symmetric() const { return asymmetry().first < 0; }

std::pair<int, int> IntMat::asymmetry() const {
    if (!is_square()) return {0, 0};
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return {i, j};
    return {-1, -1};
}

std::vector<BigInt> IntMat::row(int i) const {
    std::vector<BigInt> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

IntMat mul(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    IntMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
            }
        }
    return c;
}

IntMat transpose(const IntMat& a) {
    IntMat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

std::vector<BigInt> mul_vec(const IntMat& a, const std::vector<BigInt>& x) {
    if (a.cols() != int(x.size())) throw std::invalid_argument("mul_vec: shape mismatch");
    std::vector<BigInt> y(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
}

BigInt det_bareiss(const IntMat& a) {
    if (!a.is_square()) throw std::invalid_argument("det: matrix not square");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMat m = a;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // exact by Sylvester's identity
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMat to_rat(const IntMat& a) {
    RatMat r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r(i, j) = BigRat(a(i, j));
    return r;
}

RatMat mul(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    RatMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const BigRat& aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

RatMat transpose(const RatMat& a) {
    RatMat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

RatMat rat_inverse(const RatMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("rat_inverse: matrix not square");
    const int n = a.rows();
    RatMat m = a;
    RatMat inv = RatMat::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::invalid_argument("rat_inverse: singular matrix");
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(c, j), m(p, j));
                std::swap(inv(c, j), inv(p, j));
            }
        BigRat piv = m(c, c);
        for (int j = 0; j < n; ++j) {
            m(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            BigRat f = m(i, c);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

bool is_integral(const RatMat& a) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (denominator(a(i, j)) != 1) return false;
    return true;
}

IntMat to_int(const RatMat& a) {
    IntMat m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (denominator(a(i, j)) != 1) throw std::invalid_argument("to_int: non-integer entry");
            m(i, j) = numerator(a(i, j));
        }
    return m;
}

}  // namespace latreal
