#pragma once

// Word expressions over named group generators: products, integer powers and
// conjugation x^y = y^-1 x y. Used both for matrix evaluation and, flattened,
// for coset enumeration.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "reflex/qmat.hpp"

namespace reflex {

struct WordError : std::runtime_error {
    explicit WordError(const std::string& m) : std::runtime_error(m) {}
};

class WordExpr {
public:
    enum class Kind { Sym, Prod, Pow, Conj };
    using Ptr = std::shared_ptr<const WordExpr>;

    static Ptr sym(std::string name);
    static Ptr prod(std::vector<Ptr> parts);
    static Ptr pow(Ptr base, long e);
    static Ptr conj(Ptr x, Ptr by);

    Kind kind;
    std::string name;        // Sym
    std::vector<Ptr> parts;  // Prod
    Ptr base, by;            // Pow(base), Conj(base, by)
    long exponent = 0;       // Pow

    std::string str() const;

    // flatten into signed generator letters (index+1 or -(index+1)); requires a
    // name -> index map (expanding named abbreviations first)
    std::vector<int> letters(const std::map<std::string, int>& genidx) const;

    // evaluate over matrices bound to symbol names
    Mat eval(const std::map<std::string, Mat>& env) const;
};

// Grammar: word := factor+ ; factor := atom ['^' (integer | atom)] ;
// atom := name | '(' word ')'. Juxtaposition is the group product.
// Abbreviations from `abbrev` are substituted by name.
WordExpr::Ptr parse_word(const std::string& text,
                         const std::map<std::string, WordExpr::Ptr>& abbrev = {});

}  // namespace reflex
