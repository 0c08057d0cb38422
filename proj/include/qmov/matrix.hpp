#ifndef QMOV_MATRIX_HPP
#define QMOV_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qmov {

// Dense row-major matrix over any ring with 0/1 literals, +, * and ==.
// Sizes stay small here (2^strands on a diagram cross-section), but entries
// are expensive, so multiplication skips zero factors.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const T& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.a_) x = s * x;
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& x = a.at(i, k);
                if (x == T(0)) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b.at(k, j);
                    if (y == T(0)) continue;
                    r.at(i, j) += x * y;
                }
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!(x == T(0))) return false;
        return true;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    size_t rows_, cols_;
    std::vector<T> a_;
};

// Kronecker product; the left factor indexes the high-order part of the
// result, matching a basis written with the leftmost strand most
// significant.
template <class T>
Matrix<T> tensor(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ra = 0; ra < a.rows(); ++ra)
        for (size_t ca = 0; ca < a.cols(); ++ca) {
            const T& x = a.at(ra, ca);
            if (x == T(0)) continue;
            for (size_t rb = 0; rb < b.rows(); ++rb)
                for (size_t cb = 0; cb < b.cols(); ++cb) {
                    const T& y = b.at(rb, cb);
                    if (y == T(0)) continue;
                    r.at(ra * b.rows() + rb, ca * b.cols() + cb) = x * y;
                }
        }
    return r;
}

}  // namespace qmov

#endif
