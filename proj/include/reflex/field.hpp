#pragma once

// Exact arithmetic in towers of rational algebras Q[g1]/(p1) (x) Q[g2]/(p2) (x) ...
// Every generator carries a monic integer minimal polynomial, so the tower is a
// tensor product of univariate quotient rings and reduction is per-variable.
// All catalog towers are genuine fields; a zero divisor means bad configuration
// and raises, it is never tolerated silently.

#include <gmpxx.h>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflex {

using Rat = mpq_class;
using Int = mpz_class;

struct FieldError : std::runtime_error {
    explicit FieldError(const std::string& msg) : std::runtime_error(msg) {}
};
struct DivisionError : FieldError {
    explicit DivisionError(const std::string& msg) : FieldError(msg) {}
};
struct ZeroDivisorError : FieldError {
    explicit ZeroDivisorError(const std::string& msg) : FieldError(msg) {}
};

struct FieldGen {
    std::string name;
    std::vector<long> minpoly;  // coefficients low-to-high, monic, integer
};

struct FieldSpec {
    std::vector<FieldGen> gens;
};

class Field;

class FieldElement {
public:
    FieldElement() : field_(nullptr) {}
    FieldElement(const Field* f, std::vector<Rat> coords);

    const Field* field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // coordinate on the 1-monomial

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;  // o must be invertible
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement operator*(const Rat& r) const;
    FieldElement pow(long e) const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // deterministic text form, also used as map key
    std::string str() const;
    std::string key() const;

private:
    const Field* field_;
    std::vector<Rat> coords_;
    friend class Field;
};

// Tower algebra context. Owns the basis bookkeeping and reduction tables.
// Fields outlive every element created from them; elements hold a raw pointer.
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    int degree() const { return dim_; }
    int num_gens() const { return (int)spec_.gens.size(); }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rat& r) const;
    FieldElement gen(int i) const;
    FieldElement gen(const std::string& name) const;
    FieldElement make(std::vector<Rat> coords) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    // exact inverse by linear solve; DivisionError on 0, ZeroDivisorError if the
    // tower turns out not to be a field at this element
    FieldElement inverse(const FieldElement& a) const;

    Rat norm(const FieldElement& a) const;   // det of multiplication-by-a
    Rat trace(const FieldElement& a) const;  // trace of multiplication-by-a

    // monic minimal polynomial of a over Q, coefficients low-to-high
    std::vector<Rat> min_poly(const FieldElement& a) const;

    // multiplication-by-a matrix on the monomial basis, column-major action
    std::vector<std::vector<Rat>> mult_matrix(const FieldElement& a) const;

    std::string describe_basis(int idx) const;  // e.g. "z^3" or "a*b^2"
    std::string render(const FieldElement& a) const;

private:
    FieldSpec spec_;
    int dim_;
    std::vector<int> degs_;
    std::vector<int> strides_;
    // basis_mul_[i*dim_+j] = expansion of (monomial i)*(monomial j): list of (index, integer coeff)
    std::vector<std::vector<std::pair<int, Int>>> basis_mul_;

    void build_tables();
    friend class FieldElement;
};

// Ring homomorphism of a tower determined by generator images.
// Construction verifies each image satisfies its generator's minimal polynomial
// and that the induced linear map is multiplicative on every basis pair.
class Automorphism {
public:
    Automorphism(const Field* f, std::vector<FieldElement> gen_images);
    FieldElement apply(const FieldElement& x) const;
    const Field* field() const { return field_; }

private:
    const Field* field_;
    std::vector<FieldElement> images_;
    std::vector<FieldElement> basis_images_;
};

// Z-basis of a designated order O of the field. Construction checks that 1 and
// all pairwise products lie in the Z-span.
class IntegralBasis {
public:
    IntegralBasis(const Field* f, std::vector<FieldElement> basis);

    const Field* field() const { return field_; }
    const std::vector<FieldElement>& basis() const { return basis_; }

    bool contains(const FieldElement& x) const;                 // x in Z-span
    std::vector<Rat> coordinates(const FieldElement& x) const;  // over the basis

    static IntegralBasis monomial(const Field* f);

private:
    const Field* field_;
    std::vector<FieldElement> basis_;
    std::vector<std::vector<Rat>> inv_;  // inverse of the basis matrix
};

bool is_integral(const IntegralBasis& O, const FieldElement& x);
// true iff x/d lies in O (exact); d must be nonzero
bool divides(const FieldElement& d, const FieldElement& x, const IntegralBasis& O);

// Finitely generated ideal of O, membership decided exactly over the flattened
// Z-lattice spanned by {omega_k * g_i}.
class IdealHandle {
public:
    IdealHandle(const IntegralBasis* O, std::vector<FieldElement> gens);

    const std::vector<FieldElement>& gens() const { return gens_; }
    const IntegralBasis* order() const { return order_; }
    bool contains(const FieldElement& x) const;  // x must be integral

private:
    const IntegralBasis* order_;
    std::vector<FieldElement> gens_;
    std::vector<std::vector<Int>> hnf_;  // canonical row basis of the lattice
};

// Parse an element expression over named constants: rationals, + - * / ^,
// parentheses. Names come from the environment (generator names included).
FieldElement parse_element(const Field* f, const std::string& text,
                           const std::map<std::string, FieldElement>& env);

}  // namespace reflex
