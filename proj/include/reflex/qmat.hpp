#pragma once

// Small dense matrices over a FieldElement tower. Dimensions here are 2 or 3;
// everything is exact.

#include "reflex/field.hpp"

namespace reflex {

class Mat {
public:
    Mat() : n_(0), f_(nullptr) {}
    Mat(const Field* f, int n) : n_(n), f_(f), a_(n * n, f->zero()) {}

    static Mat identity(const Field* f, int n);
    static Mat scalar(const Field* f, int n, const FieldElement& s);

    int n() const { return n_; }
    const Field* field() const { return f_; }

    FieldElement& at(int i, int j) { return a_[i * n_ + j]; }
    const FieldElement& at(int i, int j) const { return a_[i * n_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const FieldElement& s) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat inverse() const;
    Mat pow(long e) const;
    FieldElement trace() const;
    FieldElement det() const;
    bool is_identity() const;

    // characteristic polynomial, coefficients low-to-high, monic (n <= 3)
    std::vector<FieldElement> char_poly() const;

    Mat applied(const Automorphism& th) const;  // entrywise

    // multiply a row covector on the right: (v M)_j = sum_i v_i M_ij
    std::vector<FieldElement> row_mul(const std::vector<FieldElement>& v) const;
    // matrix times column vector
    std::vector<FieldElement> col_mul(const std::vector<FieldElement>& v) const;

    std::string key() const;  // canonical map key
    std::string str() const;

private:
    int n_;
    const Field* f_;
    std::vector<FieldElement> a_;
};

// least k <= cap with m^k = I, or 0 on overflow
long matrix_order(const Mat& m, long cap);

}  // namespace reflex
