#include "reflex/qmat.hpp"

#include <sstream>

namespace reflex {

Mat Mat::identity(const Field* f, int n) {
    Mat m(f, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
}

Mat Mat::scalar(const Field* f, int n, const FieldElement& s) {
    Mat m(f, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (n_ != o.n_ || f_ != o.f_) throw FieldError("matrix dimension/field mismatch");
    Mat r(f_, n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const FieldElement& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(f_, n_);
    for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(f_, n_);
    for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator*(const FieldElement& s) const {
    Mat r(f_, n_);
    for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i] * s;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (n_ != o.n_ || f_ != o.f_) return false;
    for (int i = 0; i < n_ * n_; ++i)
        if (!(a_[i] == o.a_[i])) return false;
    return true;
}

Mat Mat::inverse() const {
    // Gauss-Jordan over the field
    Mat m = *this, inv = identity(f_, n_);
    for (int col = 0; col < n_; ++col) {
        int piv = -1;
        for (int r = col; r < n_; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw FieldError("matrix is singular");
        for (int c = 0; c < n_; ++c) {
            std::swap(m.a_[piv * n_ + c], m.a_[col * n_ + c]);
            std::swap(inv.a_[piv * n_ + c], inv.a_[col * n_ + c]);
        }
        FieldElement d = m.at(col, col).inverse();
        for (int c = 0; c < n_; ++c) {
            m.at(col, c) *= d;
            inv.at(col, c) *= d;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            FieldElement fzc = m.at(r, col);
            for (int c = 0; c < n_; ++c) {
                m.at(r, c) -= fzc * m.at(col, c);
                inv.at(r, c) -= fzc * inv.at(col, c);
            }
        }
    }
    return inv;
}

Mat Mat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Mat acc = identity(f_, n_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement Mat::trace() const {
    FieldElement t = f_->zero();
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

FieldElement Mat::det() const {
    if (n_ == 1) return at(0, 0);
    if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    if (n_ == 3)
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    throw FieldError("det implemented for n <= 3");
}

bool Mat::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j) {
                if (!(at(i, j) == f_->one())) return false;
            } else if (!at(i, j).is_zero())
                return false;
        }
    return true;
}

std::vector<FieldElement> Mat::char_poly() const {
    FieldElement one = f_->one();
    if (n_ == 2) {
        // X^2 - tr X + det
        return {det(), -trace(), one};
    }
    if (n_ == 3) {
        // X^3 - tr X^2 + c X - det, c = sum of principal 2x2 minors
        FieldElement c = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        c += at(0, 0) * at(2, 2) - at(0, 2) * at(2, 0);
        c += at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1);
        return {-det(), c, -trace(), one};
    }
    throw FieldError("char_poly implemented for n in {2,3}");
}

Mat Mat::applied(const Automorphism& th) const {
    Mat r(f_, n_);
    for (int i = 0; i < n_ * n_; ++i) r.a_[i] = th.apply(a_[i]);
    return r;
}

std::vector<FieldElement> Mat::row_mul(const std::vector<FieldElement>& v) const {
    std::vector<FieldElement> out(n_, f_->zero());
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i)
            if (!v[i].is_zero()) out[j] += v[i] * at(i, j);
    return out;
}

std::vector<FieldElement> Mat::col_mul(const std::vector<FieldElement>& v) const {
    std::vector<FieldElement> out(n_, f_->zero());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::string Mat::key() const {
    std::string s = std::to_string(n_) + ";";
    for (const auto& e : a_) s += e.key() + "|";
    return s;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << "[";
        for (int j = 0; j < n_; ++j) {
            os << at(i, j).str();
            if (j + 1 < n_) os << ", ";
        }
        os << "]";
        if (i + 1 < n_) os << ", ";
    }
    os << "]";
    return os.str();
}

long matrix_order(const Mat& m, long cap) {
    Mat p = m;
    for (long k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    return 0;
}

}  // namespace reflex
