#pragma once

// The translation side: covectors mu with g(a_j) = a_j + mu_j b, their
// Z-lattices under the conjugation action, coefficient ideals, and the
// machinery behind the split/non-split certificates.

#include <optional>
#include <variant>

#include "reflex/construction.hpp"
#include "reflex/hnf.hpp"

namespace reflex {

struct NotTranslation : std::runtime_error {
    explicit NotTranslation(const std::string& m) : std::runtime_error(m) {}
};

struct Covector {
    const Field* F = nullptr;
    std::vector<FieldElement> mu;  // three components over K

    bool is_zero() const;
    Covector operator+(const Covector& o) const;
    Covector operator-(const Covector& o) const;
    Covector operator-() const;
    Covector scaled(const FieldElement& s) const;
    bool operator==(const Covector& o) const;
    std::string str() const;
};

// extract the covector of a matrix that acts trivially on M/<b> and fixes b;
// throws NotTranslation otherwise
Covector covector_of(const Mat& m, const std::vector<FieldElement>& b);

bool is_translation(const Mat& m, const std::vector<FieldElement>& b);

// conjugation action: covector of w t w^-1 is mu composed with rho(w)^-1
Covector act(const Covector& c, const Mat& w);

class TranslationLattice {
public:
    TranslationLattice(const Field* F, int ambient = 3);

    // Z-span of the seeds, saturated under the conjugation action of the three
    // generators; throws if the chain has not stabilized within max_rounds
    static TranslationLattice span(const std::vector<Covector>& seeds, const ReflectionRep& rep,
                                   int max_rounds = 12);

    bool member(const Covector& c) const;
    long rank() const { return (long)rows_.size(); }
    std::vector<Covector> basis_covectors() const;

    bool operator==(const TranslationLattice& o) const;
    std::string str() const;

    const Field* field() const { return F_; }
    const IntMat& rows() const { return rows_; }
    const Int& denom() const { return denom_; }
    // flatten a covector against this lattice's denominator; ok=false if the
    // denominators do not divide
    IntRow flatten(const Covector& c, bool* ok) const { return flatten_scaled(c, denom_, ok); }
    std::vector<Rat> flatten_rational(const Covector& c) const;

private:
    const Field* F_;
    int ambient_;
    Int denom_;    // lattice = (1/denom) * rowspan(rows_)
    IntMat rows_;  // canonical HNF

    void add_and_reduce(const std::vector<Covector>& cs);
    IntRow flatten_scaled(const Covector& c, const Int& target_denom, bool* ok) const;
    void canonicalize();
    friend std::vector<FieldElement> coefficient_ideal_gens(const TranslationLattice&,
                                                            const Covector&,
                                                            const IntegralBasis&);
};

// generators of { lambda in O : lambda * c in lattice }, canonical HNF basis
std::vector<FieldElement> coefficient_ideal_gens(const TranslationLattice& lat, const Covector& c,
                                                 const IntegralBasis& O);

// the K-line { mu : mu o s = -mu } of covectors anti-fixed by a reflection;
// returns the basis vector with first nonzero component normalized to 1
Covector anti_fixed_line(const Mat& s, const Field* F);

// does target + span_Q(subspace rows) meet the lattice (1/denom) * rowspan(rows)?
// (all vectors given flattened over Q); used by the lifting certificates
bool meets_lattice_modulo_subspace(const std::vector<Rat>& target,
                                   const std::vector<std::vector<Rat>>& subspace,
                                   const IntMat& lattice_rows, const Int& denom);

// --- linear lifting systems over K (Prop-7-style obstructions) ----------------

struct KLinearSystem {
    // rows of coefficients for the unknowns (lambda_1..lambda_k) and a rhs
    std::vector<std::vector<FieldElement>> rows;
    std::vector<FieldElement> rhs;
    std::vector<std::string> labels;  // provenance of each row
};

struct InfeasibilityWitness {
    // combination coefficients: sum_r comb[r] * row_r = 0 while sum comb[r]*rhs_r != 0
    std::vector<FieldElement> comb;
    FieldElement value;  // the nonzero residue
    std::string row_label;
};

// solves the system; returns a witness of inconsistency or, when solvable, one
// solution (which refutes a claimed obstruction)
std::variant<InfeasibilityWitness, std::vector<FieldElement>> solve_or_refute(
    const KLinearSystem& sys);

// re-check an infeasibility witness against the original system, exactly
bool recheck_witness(const KLinearSystem& sys, const InfeasibilityWitness& w);

// basis of the homogeneous solution space of the system (rhs ignored)
std::vector<std::vector<FieldElement>> kernel_basis(const KLinearSystem& sys);

}  // namespace reflex
