#pragma once

#include <stdexcept>
#include <vector>

#include "exflat/rational.hpp"

namespace exflat {

// Dense matrix over the rationals, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    QMatrix transposed() const {
        QMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    QMatrix operator*(const QMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        QMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int t = 0; t < cols_; ++t) {
                const Rational& x = at(i, t);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(t, j);
            }
        return r;
    }

    QMatrix operator+(const QMatrix& o) const {
        require_same_shape(o);
        QMatrix r(rows_, cols_);
        for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
        return r;
    }

    QMatrix operator-(const QMatrix& o) const {
        require_same_shape(o);
        QMatrix r(rows_, cols_);
        for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - o.a_[t];
        return r;
    }

    QMatrix operator-() const {
        QMatrix r(rows_, cols_);
        for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = -a_[t];
        return r;
    }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

private:
    void require_same_shape(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

inline bool is_skew_symmetric(const QMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    return true;
}

}  // namespace exflat
