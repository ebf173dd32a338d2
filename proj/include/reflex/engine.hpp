#pragma once

// Claim engine: builds the working objects for a catalog entry (field, rep,
// invariant vector, quotient closure, translation lattice) and runs typed
// claims against them, producing machine-readable reports.

#include <memory>
#include <optional>

#include "reflex/catalog.hpp"
#include "reflex/closure.hpp"
#include "reflex/lattice.hpp"
#include "reflex/presentation.hpp"

namespace reflex {

struct Caps {
    long closure = 1000000;
    long element_order = 1000;
    long cosets = 100000;
    int lattice_rounds = 12;

    static Caps from_env();  // REFLEX_CAP overrides closure and coset caps
};

class EntryContext {
public:
    explicit EntryContext(const CatalogEntry& e, Caps caps = Caps::from_env());
    EntryContext(const EntryContext&) = delete;

    const CatalogEntry& entry() const { return e_; }
    const Field& field() const { return *field_; }
    const ParamSystem& params() const { return ps_; }
    const Caps& caps() const { return caps_; }

    FieldElement elem(const std::string& expr) const;
    WordExpr::Ptr word(const std::string& text) const;

    const ReflectionRep& rep();
    const AffineData& affine();           // throws if no invariant vector
    bool has_affine();
    Mat eval_rep(const std::string& w);   // 3x3
    Mat eval_quot(const std::string& w);  // 2x2
    const GroupClosure& closure();        // of the 2x2 quotient generators
    const IntegralBasis& order_basis();
    const TranslationLattice& lattice();
    Covector covector(const std::string& name);  // named canonical covectors
    Covector cov_expr(const std::string& text);  // covector expression language

    const std::map<std::string, FieldElement>& env() const { return env_; }

private:
    const CatalogEntry& e_;
    Caps caps_;
    std::unique_ptr<Field> field_;
    std::map<std::string, FieldElement> env_;
    ParamSystem ps_;
    std::optional<ReflectionRep> rep_;
    std::optional<AffineData> affine_;
    bool affine_done_ = false;
    std::unique_ptr<GroupClosure> closure_;
    std::unique_ptr<IntegralBasis> order_;
    std::unique_ptr<TranslationLattice> lattice_;
    std::map<std::string, Covector> covs_;
    std::map<std::string, bool> cov_building_;
};

struct ClaimResult {
    std::string kind, label, paper_ref, tag;
    std::string status;  // pass | fail | inconclusive
    std::string witness;
};

struct VerificationReport {
    std::string entry;
    std::vector<ClaimResult> claims;
    long elapsed_ms = 0;
    std::string error;  // configuration error aborting the entry

    bool all_pass() const;
    int fails() const;
};

VerificationReport verify_entry(const CatalogEntry& e,
                                const std::vector<std::string>& kind_filter = {},
                                Caps caps = Caps::from_env());

// runs entries (optionally in parallel via OpenMP when jobs != 1) and merges
// reports deterministically by entry id
std::vector<VerificationReport> verify_entries(const std::vector<std::string>& ids,
                                               const std::vector<std::string>& kind_filter = {},
                                               int jobs = 0, Caps caps = Caps::from_env());

std::string toolchain_string();
std::string report_json(const std::vector<VerificationReport>& reports, bool with_timing = true);
std::string report_text(const std::vector<VerificationReport>& reports);

// exit code contract: 0 all pass, 1 any fail, 2 configuration error
int report_exit_code(const std::vector<VerificationReport>& reports);

// dump of the generator matrices in catalog JSON form (`rep --print-matrices`)
std::string rep_matrices_json(const CatalogEntry& e);

}  // namespace reflex
