#pragma once

// The fundamental construction: three exact 3x3 reflections from a parameter
// system (alpha, beta, gamma; l, m) with l*m = gamma, the reducibility defect,
// trace Cartan coefficients, product-order classification, the invariant
// vector b and the induced 2x2 quotient action.

#include <optional>

#include "reflex/qmat.hpp"
#include "reflex/words.hpp"

namespace reflex {

struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& m) : std::runtime_error(m) {}
};

struct ParamSystem {
    const Field* F = nullptr;
    FieldElement alpha, beta, gamma, l, m;

    // The mixed-product invariant attached to triple products. With the matrix
    // convention below (l rides with s2, m with s3) the closed forms read
    // C(s1, s2^s3) = alpha + beta*gamma + mixed_sum(), etc.
    FieldElement mixed_sum() const { return alpha * m + beta * l; }
    FieldElement mixed_s3() const { return alpha * m; }
    FieldElement mixed_s2() const { return beta * l; }

    void validate() const;  // l*m = gamma
};

struct ReflectionRep {
    ParamSystem ps;
    Mat s[3];  // s1, s2, s3

    std::map<std::string, Mat> env(
        const std::map<std::string, WordExpr::Ptr>& = {}) const;  // s1,s2,s3 bindings
    Mat eval(const WordExpr::Ptr& w) const;
};

struct AffineData {
    std::vector<FieldElement> b;  // invariant vector, first nonzero coord = 1
    bool dual_swapped = false;
    Mat q[3];  // 2x2 quotient action on (a'2, a'3) (or the flagged alternate basis)
    int dropped_axis = 0;  // which coordinate of b was eliminated (normally 0)
};

// 8 - 2a - 2b - 2g - (mixed sum)
FieldElement delta(const ParamSystem& ps);

// s1: a1 -> -a1, a2 -> a2+a1, a3 -> a3+a1
// s2: a1 -> a1+alpha a2, a2 -> -a2, a3 -> a3 + l a2
// s3: a1 -> a1+beta a3,  a2 -> a2 + m a3, a3 -> -a3
ReflectionRep build_rep(const ParamSystem& ps);

bool is_reflection(const Mat& m);  // involution, det -1, trace dim-2

// trace(AB) - n + 4 for two reflections of dimension n
FieldElement cartan(const Mat& a, const Mat& b);
FieldElement cartan(const ReflectionRep& rep, const WordExpr::Ptr& w1, const WordExpr::Ptr& w2);

// minimal polynomial over Q of 4cos^2(k pi / n), gcd(k, n) = 1; monic, integer
std::vector<Rat> vn_polynomial(int n);

struct OrderClass {
    enum Kind { Finite, Infinite, Indeterminate } kind;
    long order = 0;            // when Finite
    std::string certificate;   // e.g. the minimal polynomial that matched / failed
};

// classify the order of a product of two reflections from its Cartan value.
// Exact: C corresponds to finite order n iff minpoly(C) = v_n; the search bound
// covers every n with phi(n) <= 2 deg(K), which is conclusive for these fields.
OrderClass classify_order(const FieldElement& c, int bound = 60);

// joint solution of s_i b = b (or the transposed system, flagged dual_swapped);
// nullopt when none exists
std::optional<AffineData> fixed_vector(const ReflectionRep& rep);

// fill in the 2x2 quotient matrices of `ad` for rep
void quotient_rep(const ReflectionRep& rep, AffineData& ad);

// parameter system of a regenerated reflection triple (u1, u2, u3):
// pairwise Cartans give alpha', beta', gamma'; the mixed invariants come from
// C(u1, u2^u3) = a' + b'g' + S' and trace(u1u2u3) = a'+b'+g'-3 + (b' l'ـslot).
ParamSystem regenerate(const ReflectionRep& rep, const WordExpr::Ptr& w1, const WordExpr::Ptr& w2,
                       const WordExpr::Ptr& w3);

// order of a 2x2 matrix over a number field, or 0 if infinite. Exact: a finite
// order N needs phi(N) <= 2 deg(K) <= 16, so testing N <= bound decides.
long order_2x2(const Mat& m, long bound = 120);

}  // namespace reflex
