#pragma once

// Presentation DSL and Todd-Coxeter coset enumeration over the trivial
// subgroup. File format (UTF-8 text, # comments):
//   gens: s1 s2 s3
//   let t = s1 s2 s3
//   coxeter: w(p,q,r)
//   (s2 s3)^2 = (s1 s2^s3)^3
//   one relator equation per line; a bare word w means w = 1.
// w(p,q,r) expands to s1^2, s2^2, s3^2, (s1 s2)^p, (s1 s3)^q, (s2 s3)^r.

#include "reflex/construction.hpp"
#include "reflex/words.hpp"

namespace reflex {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

struct Presentation {
    std::vector<std::string> gens;
    std::vector<WordExpr::Ptr> relators;       // after desugaring equalities
    std::vector<std::vector<int>> relator_letters;  // freely reduced signed letters
    std::string origin;                        // source text

    std::string print() const;  // canonical text form (reparses to the same relators)
};

Presentation parse_presentation(const std::string& text);

enum class TCStrategy {
    TableScan,    // define cosets at the first undefined table slot
    RelatorScan,  // define cosets to close the first gapped relator scan
};

struct TCResult {
    bool completed = false;
    long order = 0;       // when completed
    long cosets_used = 0; // live + dead, for diagnostics
};

// deterministic coset enumeration of the trivial subgroup; `cap` bounds the
// number of cosets ever defined
TCResult todd_coxeter(const Presentation& p, long cap = 100000,
                      TCStrategy strategy = TCStrategy::TableScan);

// do all relators evaluate to the identity in the given matrix images?
bool relations_hold(const ReflectionRep& rep, const Presentation& p);
// same, reporting the first failing relator
bool relations_hold(const ReflectionRep& rep, const Presentation& p, std::string& first_failure);

}  // namespace reflex
