#pragma once

// The catalog: every parameter system shipped as a JSON document (id, Coxeter
// triple, field spec, parameter expressions, claims with provenance tags).

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflex/field.hpp"

namespace reflex {

struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& m) : std::runtime_error(m) {}
};

struct CatalogEntry {
    std::string id;
    std::string family;
    std::array<int, 3> triple{0, 0, 0};
    FieldSpec fieldspec;
    // named constants, evaluated in order on top of the generators
    std::vector<std::pair<std::string, std::string>> defs;
    std::string alpha, beta, gamma;
    // the two mixed invariants: alpha_l loads the s3 slot (ps.m = alpha_l/alpha),
    // beta_m loads the s2 slot (ps.l = beta_m/beta)
    std::string alpha_l, beta_m;
    std::map<std::string, int> vpoly;         // param name -> n of its v_n annihilator
    std::vector<std::string> integral_basis;  // element exprs; empty = monomial basis
    std::vector<std::string> ring_gens;       // module-closure multipliers
    nlohmann::json cdefs;                     // canonical covector definitions
    // presentation of the finite quotient whose relator translations generate N
    // (empty when the quotient is infinite)
    std::string n_presentation;
    bool negative_control = false;
    nlohmann::json claims;  // array of claim objects
    nlohmann::json raw;
};

// raw JSON documents compiled into the binary, one per family
const std::vector<std::string>& catalog_documents();

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);
std::vector<std::string> catalog_ids(bool include_controls = true);

}  // namespace reflex
