#include "reflex/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace reflex {

Caps Caps::from_env() {
    Caps c;
    if (const char* v = std::getenv("REFLEX_CAP")) {
        long cap = std::atol(v);
        if (cap > 0) {
            c.closure = cap;
            c.cosets = cap;
        }
    }
    return c;
}

// ----------------------------------------------------------------- EntryContext

EntryContext::EntryContext(const CatalogEntry& e, Caps caps) : e_(e), caps_(caps) {
    field_ = std::make_unique<Field>(e.fieldspec);
    for (int i = 0; i < field_->num_gens(); ++i)
        env_.emplace(e.fieldspec.gens[i].name, field_->gen(i));
    for (const auto& [name, expr] : e.defs) env_.emplace(name, elem(expr));
    ps_.F = field_.get();
    ps_.alpha = elem(e.alpha);
    ps_.beta = elem(e.beta);
    ps_.gamma = elem(e.gamma);
    env_.emplace("alpha", ps_.alpha);
    env_.emplace("beta", ps_.beta);
    env_.emplace("gamma", ps_.gamma);
    ps_.m = elem(e.alpha_l) / ps_.alpha;
    ps_.l = elem(e.beta_m) / ps_.beta;
    env_.emplace("lp", ps_.l);  // the coefficient riding with s2
    env_.emplace("mp", ps_.m);  // the coefficient riding with s3
}

FieldElement EntryContext::elem(const std::string& expr) const {
    return parse_element(field_.get(), expr, env_);
}

WordExpr::Ptr EntryContext::word(const std::string& text) const { return parse_word(text); }

const ReflectionRep& EntryContext::rep() {
    if (!rep_) rep_ = build_rep(ps_);
    return *rep_;
}

bool EntryContext::has_affine() {
    if (!affine_done_) {
        affine_ = fixed_vector(rep());
        affine_done_ = true;
    }
    return affine_.has_value();
}

const AffineData& EntryContext::affine() {
    if (!has_affine()) throw ConstructionError("entry " + e_.id + " has no invariant vector");
    return *affine_;
}

Mat EntryContext::eval_rep(const std::string& w) { return rep().eval(word(w)); }

Mat EntryContext::eval_quot(const std::string& w) {
    const AffineData& ad = affine();
    std::map<std::string, Mat> env = {{"s1", ad.q[0]}, {"s2", ad.q[1]}, {"s3", ad.q[2]}};
    return word(w)->eval(env);
}

const GroupClosure& EntryContext::closure() {
    if (!closure_) {
        const AffineData& ad = affine();
        closure_ = std::make_unique<GroupClosure>(std::vector<Mat>{ad.q[0], ad.q[1], ad.q[2]},
                                                  caps_.closure);
    }
    return *closure_;
}

const IntegralBasis& EntryContext::order_basis() {
    if (!order_) {
        if (e_.integral_basis.empty()) {
            order_ = std::make_unique<IntegralBasis>(IntegralBasis::monomial(field_.get()));
        } else {
            std::vector<FieldElement> b;
            for (const auto& x : e_.integral_basis) b.push_back(elem(x));
            order_ = std::make_unique<IntegralBasis>(field_.get(), std::move(b));
        }
    }
    return *order_;
}

Covector EntryContext::covector(const std::string& name) {
    auto it = covs_.find(name);
    if (it != covs_.end()) return it->second;
    if (name == "zero") {
        Covector z{field_.get(),
                   {field_->zero(), field_->zero(), field_->zero()}};
        covs_.emplace(name, z);
        return z;
    }
    // find the definition in cdefs (an array of [name, def] pairs)
    for (const auto& pair : e_.cdefs) {
        if (pair.at(0).get<std::string>() != name) continue;
        if (cov_building_[name])
            throw CatalogError("cyclic covector definition: " + name);
        cov_building_[name] = true;
        const auto& def = pair.at(1);
        Covector c;
        if (def.contains("word")) {
            Mat m = eval_rep(def.at("word").get<std::string>());
            c = covector_of(m, affine().b);
            if (def.contains("scale")) c = c.scaled(elem(def.at("scale").get<std::string>()));
        } else if (def.contains("rel")) {
            c = cov_expr(def.at("rel").get<std::string>());
        } else {
            throw CatalogError("covector definition needs word or rel: " + name);
        }
        cov_building_[name] = false;
        covs_.emplace(name, c);
        return c;
    }
    throw CatalogError("unknown covector name: " + name);
}

namespace {

struct CovParser {
    EntryContext& ctx;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    bool lit(const std::string& t) {
        skip();
        if (s.compare(pos, t.size(), t) == 0) {
            pos += t.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& m) {
        throw CatalogError("covector expr error at " + std::to_string(pos) + " in \"" + s +
                           "\": " + m);
    }

    // read a balanced chunk up to the given closer at depth 0
    std::string until_balanced(char open, char close, char stop) {
        std::string out;
        int depth = 0;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == open) ++depth;
            if (c == close) {
                if (depth == 0) return out;
                --depth;
            }
            if (c == stop && depth == 0) return out;
            out += c;
            ++pos;
        }
        fail("unbalanced");
    }

    Covector parse() {
        Covector v = sum();
        skip();
        if (pos != s.size()) fail("trailing input");
        return v;
    }

    Covector sum() {
        skip();
        bool neg = lit("-");
        Covector v = term();
        if (neg) v = -v;
        while (true) {
            skip();
            if (lit("+"))
                v = v + term();
            else if (lit("-"))
                v = v - term();
            else
                return v;
        }
    }

    Covector term() {
        skip();
        if (lit("[")) {
            std::string e = until_balanced('[', ']', '\0');
            if (!lit("]")) fail("expected ]");
            FieldElement sc = ctx.elem(e);
            return term().scaled(sc);
        }
        if (lit("act(")) {
            std::string w = until_balanced('(', ')', ',');
            if (!lit(",")) fail("expected , in act()");
            Covector inner = sum();
            if (!lit(")")) fail("expected ) after act");
            return act(inner, ctx.eval_rep(w));
        }
        if (lit("covof(")) {
            std::string w = until_balanced('(', ')', '\0');
            if (!lit(")")) fail("expected ) after covof");
            // affine() is available once eval_rep succeeded
            return covector_of(ctx.eval_rep(w), ctx.affine().b);
        }
        if (lit("(")) {
            Covector v = sum();
            if (!lit(")")) fail("expected )");
            return v;
        }
        skip();
        std::string name;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_'))
            name += s[pos++];
        if (name.empty()) fail("expected covector term");
        return ctx.covector(name);
    }
};

}  // namespace

Covector EntryContext::cov_expr(const std::string& text) {
    CovParser p{*this, text};
    return p.parse();
}

const TranslationLattice& EntryContext::lattice() {
    if (!lattice_) {
        // seeds must be covectors of actual group elements; for word-backed
        // definitions that is the raw word covector (the declared scale is part
        // of the canonical name, not of the group)
        std::vector<Covector> seeds;
        for (const auto& pair : e_.cdefs) {
            const auto& def = pair.at(1);
            bool seed = !def.contains("seed") || def.at("seed").get<bool>();
            if (seed && def.contains("word"))
                seeds.push_back(
                    covector_of(eval_rep(def.at("word").get<std::string>()), affine().b));
        }
        // when the finite quotient has a verified presentation, N is exactly the
        // conjugation closure of the relator translations; seed them so that the
        // computed lattice is all of N, not a lower bound
        if (!e_.n_presentation.empty()) {
            Presentation p = parse_presentation(e_.n_presentation);
            std::map<std::string, Mat> env = {
                {p.gens.at(0), rep().s[0]}, {p.gens.at(1), rep().s[1]}, {p.gens.at(2), rep().s[2]}};
            for (const auto& r : p.relators) seeds.push_back(covector_of(r->eval(env), affine().b));
        }
        if (seeds.empty()) throw CatalogError("no covector seeds declared for " + e_.id);
        lattice_ = std::make_unique<TranslationLattice>(
            TranslationLattice::span(seeds, rep(), caps_.lattice_rounds));
    }
    return *lattice_;
}

// -------------------------------------------------------------------- claims

namespace {

using json = nlohmann::json;

struct ClaimFail : std::runtime_error {
    explicit ClaimFail(const std::string& m) : std::runtime_error(m) {}
};
struct ClaimInconclusive : std::runtime_error {
    explicit ClaimInconclusive(const std::string& m) : std::runtime_error(m) {}
};

void expect(bool ok, const std::string& witness) {
    if (!ok) throw ClaimFail(witness);
}

std::vector<std::string> split_eq(const std::string& s) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t eq = s.find('=', start);
        if (eq == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, eq - start));
        start = eq + 1;
    }
    return parts;
}

std::string run_delta_zero(EntryContext& ctx, const json& c) {
    FieldElement d = delta(ctx.params());
    bool wantzero = !c.contains("expect") || c.at("expect") == "zero";
    if (wantzero)
        expect(d.is_zero(), "Delta = " + d.str());
    else
        expect(!d.is_zero(), "Delta vanished unexpectedly");
    return "Delta = " + d.str();
}

std::string run_param_poly(EntryContext& ctx, const json& c) {
    const ParamSystem& ps = ctx.params();
    expect(ps.l * ps.m == ps.gamma, "l*m != gamma");
    const Field* F = ps.F;
    auto annihilated = [&](const FieldElement& x, int n) {
        auto v = vn_polynomial(n);
        FieldElement acc = F->zero(), p = F->one();
        for (const auto& coef : v) {
            acc += p * coef;
            p = p * x;
        }
        return acc.is_zero();
    };
    for (const auto& [pname, n] : ctx.entry().vpoly) {
        FieldElement x = pname == "alpha" ? ps.alpha : pname == "beta" ? ps.beta : ps.gamma;
        expect(annihilated(x, n),
               pname + " = " + x.str() + " is not a root of v_" + std::to_string(n));
    }
    if (c.contains("distinct"))
        for (const auto& pr : c.at("distinct"))
            expect(!(ctx.elem(pr.at(0).get<std::string>()) == ctx.elem(pr.at(1).get<std::string>())),
                   "expected distinct: " + pr.dump());
    if (c.contains("equal"))
        for (const auto& pr : c.at("equal"))
            expect(ctx.elem(pr.at(0).get<std::string>()) == ctx.elem(pr.at(1).get<std::string>()),
                   "expected equal: " + pr.dump());
    int checked = 0;
    if (c.contains("identities"))
        for (const auto& idn : c.at("identities")) {
            auto parts = split_eq(idn.get<std::string>());
            if (parts.size() < 2) throw CatalogError("identity needs =: " + idn.get<std::string>());
            FieldElement first = ctx.elem(parts[0]);
            for (size_t i = 1; i < parts.size(); ++i)
                expect(ctx.elem(parts[i]) == first, "identity failed: " + idn.get<std::string>());
            ++checked;
        }
    return "parameter polynomials hold; " + std::to_string(checked) + " extra identities";
}

std::string run_cartan_value(EntryContext& ctx, const json& c) {
    FieldElement got = cartan(ctx.rep(), ctx.word(c.at("w1").get<std::string>()),
                              ctx.word(c.at("w2").get<std::string>()));
    FieldElement want = ctx.elem(c.at("expected").get<std::string>());
    expect(got == want, "C = " + got.str() + ", expected " + want.str());
    return "C(" + c.at("w1").get<std::string>() + ", " + c.at("w2").get<std::string>() +
           ") = " + got.str();
}

std::string run_word_order(EntryContext& ctx, const json& c) {
    std::string space = c.contains("space") ? c.at("space").get<std::string>() : "rep";
    std::string wtext = c.at("word").get<std::string>();
    if (c.at("order").is_string()) {  // "infinite"
        // quotient part must have finite order k with the k-th power a nonzero translation,
        // or itself be of provably infinite order
        Mat q = ctx.eval_quot(wtext);
        long k = order_2x2(q);
        if (k == 0) return "quotient part already of infinite order";
        Mat m = ctx.eval_rep(wtext);
        Mat p = m.pow(k);
        expect(!p.is_identity(), "word^" + std::to_string(k) + " = 1, order is finite");
        expect(is_translation(p, ctx.affine().b), "power is not a translation (unexpected)");
        return "order infinite: word^" + std::to_string(k) + " is a nonzero translation";
    }
    long n = c.at("order").get<long>();
    Mat m = space == "rep" ? ctx.eval_rep(wtext) : ctx.eval_quot(wtext);
    long got = matrix_order(m, std::max(n * 2 + 1, 16L));
    expect(got == n, "order(" + wtext + ") = " + std::to_string(got) + ", expected " +
                         std::to_string(n));
    return "order(" + wtext + ") = " + std::to_string(n);
}

Mat rhs_matrix(EntryContext& ctx, const json& c, const std::string& space, int dim) {
    const Field* F = &ctx.field();
    std::string rhs = c.at("rhs").get<std::string>();
    if (rhs == "I") return Mat::identity(F, dim);
    if (rhs == "-I") return Mat::scalar(F, dim, -F->one());
    if (rhs.rfind("scalar:", 0) == 0)
        return Mat::scalar(F, dim, ctx.elem(rhs.substr(7)));
    if (rhs.rfind("word:", 0) == 0)
        return space == "rep" ? ctx.eval_rep(rhs.substr(5)) : ctx.eval_quot(rhs.substr(5));
    throw CatalogError("bad rhs: " + rhs);
}

std::string run_matrix_identity(EntryContext& ctx, const json& c) {
    std::string space = c.contains("space") ? c.at("space").get<std::string>() : "rep";
    auto eval = [&](const std::string& w) {
        return space == "rep" ? ctx.eval_rep(w) : ctx.eval_quot(w);
    };
    int checked = 0;
    if (c.contains("words")) {
        int dim = space == "rep" ? 3 : 2;
        Mat want = rhs_matrix(ctx, c, space, dim);
        for (const auto& w : c.at("words")) {
            Mat got = eval(w.get<std::string>());
            expect(got == want, "word " + w.get<std::string>() + " evaluates to " + got.str());
            ++checked;
        }
    }
    if (c.contains("chain")) {
        Mat first = eval(c.at("chain").at(0).get<std::string>());
        for (size_t i = 1; i < c.at("chain").size(); ++i) {
            Mat got = eval(c.at("chain").at(i).get<std::string>());
            expect(got == first,
                   "chain member " + c.at("chain").at(i).get<std::string>() + " differs");
            ++checked;
        }
    }
    if (c.contains("charpoly")) {
        Mat m = eval(c.at("word").get<std::string>());
        auto cp = m.char_poly();
        const auto& want = c.at("charpoly");
        expect(cp.size() == want.size() + 1, "char poly degree mismatch");
        for (size_t i = 0; i < want.size(); ++i)
            expect(cp[i] == ctx.elem(want.at(i).get<std::string>()),
                   "char poly coefficient " + std::to_string(i) + " = " + cp[i].str());
        ++checked;
    }
    if (c.contains("charpoly_factors")) {
        // X^2 - tr X + det = (X + e1)(X + e2)
        Mat m = eval(c.at("word").get<std::string>());
        auto cp = m.char_poly();
        FieldElement e1 = ctx.elem(c.at("charpoly_factors").at(0).get<std::string>());
        FieldElement e2 = ctx.elem(c.at("charpoly_factors").at(1).get<std::string>());
        expect(cp[1] == e1 + e2 && cp[0] == e1 * e2, "factorization mismatch");
        ++checked;
    }
    expect(checked > 0, "matrix_identity with nothing to check");
    return std::to_string(checked) + " identities hold";
}

std::string run_line_map(EntryContext& ctx, const json& c) {
    const Field* F = &ctx.field();
    auto vec = [&](const json& spec) {
        std::vector<FieldElement> v;
        for (const auto& x : spec) v.push_back(ctx.elem(x.get<std::string>()));
        return v;
    };
    auto v1 = vec(c.at("v1")), v2 = vec(c.at("v2"));
    FieldElement e1 = ctx.elem(c.at("eigen1").get<std::string>());
    FieldElement e2 = ctx.elem(c.at("eigen2").get<std::string>());
    const AffineData& ad = ctx.affine();
    Mat t = ad.q[1] * ad.q[2];
    auto proportional = [&](const std::vector<FieldElement>& a,
                            const std::vector<FieldElement>& b) {
        // a = lambda b for some nonzero lambda
        FieldElement lambda = F->zero();
        for (int i = 0; i < 2; ++i)
            if (!b[i].is_zero()) {
                lambda = a[i] / b[i];
                break;
            }
        if (lambda.is_zero()) return false;
        for (int i = 0; i < 2; ++i)
            if (!(a[i] == lambda * b[i])) return false;
        return true;
    };
    auto eigcheck = [&](const std::vector<FieldElement>& v, const FieldElement& ev) {
        auto tv = t.col_mul(v);
        for (int i = 0; i < 2; ++i)
            if (!(tv[i] == ev * v[i])) return false;
        return true;
    };
    expect(eigcheck(v1, e1), "v1 is not an eigenvector for eigen1");
    expect(eigcheck(v2, e2), "v2 is not an eigenvector for eigen2");
    expect(proportional(ad.q[1].col_mul(v1), v2), "s2' does not map V1 to V2");
    expect(proportional(ad.q[1].col_mul(v2), v1), "s2' does not map V2 to V1");
    expect(proportional(ad.q[2].col_mul(v1), v2), "s3' does not map V1 to V2");
    expect(proportional(ad.q[2].col_mul(v2), v1), "s3' does not map V2 to V1");
    expect(proportional(ad.q[0].col_mul(v1), v1), "s1' does not stabilize V1");
    expect(proportional(ad.q[0].col_mul(v2), v2), "s1' does not stabilize V2");
    return "eigenlines verified: swap by s2', s3'; stabilized by s1'";
}

std::string run_quotient_order(EntryContext& ctx, const json& c) {
    long want = c.at("order").get<long>();
    long got = ctx.closure().order();
    expect(got == want,
           "closure order " + std::to_string(got) + ", expected " + std::to_string(want));
    return "|G'| = " + std::to_string(got);
}

std::string run_quotient_structure(EntryContext& ctx, const json& c) {
    const GroupClosure& G = ctx.closure();
    std::string check = c.at("check").get<std::string>();
    if (check == "central_word") {
        Mat z = ctx.eval_quot(c.at("word").get<std::string>());
        auto center = G.center();
        int zi = G.index_of(z);
        expect(zi >= 0, "word does not lie in the closure");
        expect(std::find(center.begin(), center.end(), zi) != center.end(), "word is not central");
        if (c.contains("order"))
            expect(matrix_order(z, 16) == c.at("order").get<long>(), "central word order mismatch");
        if (c.contains("equals"))
            for (const auto& w : c.at("equals"))
                expect(ctx.eval_quot(w.get<std::string>()) == z,
                       "equality fails: " + w.get<std::string>());
        if (c.contains("minus_identity") && c.at("minus_identity").get<bool>())
            expect(z == Mat::scalar(&ctx.field(), 2, -ctx.field().one()), "z != -I");
        return "central element verified";
    }
    if (check == "derived") {
        auto D = G.derived_subgroup();
        if (c.contains("index")) {
            long want = c.at("index").get<long>();
            expect(G.order() % (long)D.size() == 0 && G.order() / (long)D.size() == want,
                   "derived subgroup index = " +
                       std::to_string(G.order() / (double)D.size()));
        }
        if (c.contains("unique_involution") && c.at("unique_involution").get<bool>()) {
            int count = 0;
            for (int i : D)
                if (matrix_order(G.elements()[i], 4) == 2) ++count;
            expect(count == 1, "derived subgroup has " + std::to_string(count) + " involutions");
        }
        return "derived subgroup: order " + std::to_string(D.size());
    }
    if (check == "quotient_by_central") {
        Mat z = ctx.eval_quot(c.at("word").get<std::string>());
        auto sub = G.subgroup({z});
        long got = G.quotient_order(sub);
        long want = c.at("order").get<long>();
        expect(got == want, "quotient order " + std::to_string(got));
        return "|G'/<z>| = " + std::to_string(got);
    }
    if (check == "fingerprint_match") {
        EntryContext other(catalog_entry(c.at("other").get<std::string>()), ctx.caps());
        GroupFingerprint a = G.fingerprint();
        GroupFingerprint b = other.closure().fingerprint();
        expect(a == b, "fingerprints differ: " + a.str() + " vs " + b.str());
        return "isomorphism-consistent with " + c.at("other").get<std::string>() + ": " + a.str();
    }
    if (check == "subgroup_order") {
        std::vector<Mat> gens;
        for (const auto& w : c.at("words")) gens.push_back(ctx.eval_quot(w.get<std::string>()));
        auto sub = G.subgroup(gens);
        long want = c.at("order").get<long>();
        expect((long)sub.size() == want, "subgroup order " + std::to_string(sub.size()));
        return "subgroup order " + std::to_string(sub.size());
    }
    if (check == "faithful") {
        // the closure is a matrix group: only the identity acts trivially; verify
        // the generators are pairwise distinct and nontrivial as a sanity check
        for (int i = 0; i < 3; ++i) expect(!ctx.affine().q[i].is_identity(), "generator acts trivially");
        return "faithful on M'";
    }
    throw CatalogError("unknown quotient_structure check: " + check);
}

std::string run_presentation_order(EntryContext& ctx, const json& c) {
    Presentation p = parse_presentation(c.at("text").get<std::string>());
    std::string mode = c.contains("mode") ? c.at("mode").get<std::string>() : "enumerate";
    if (mode == "relations") {
        std::string bad;
        expect(relations_hold(ctx.rep(), p, bad), "relator fails in the matrix group: " + bad);
        return std::to_string(p.relators.size()) + " relators hold in the matrix group";
    }
    long want = c.at("order").get<long>();
    TCResult a = todd_coxeter(p, ctx.caps().cosets, TCStrategy::TableScan);
    expect(a.completed, "enumeration overflow (cap)");
    expect(a.order == want,
           "Todd-Coxeter order " + std::to_string(a.order) + ", expected " + std::to_string(want));
    TCResult b = todd_coxeter(p, ctx.caps().cosets, TCStrategy::RelatorScan);
    expect(b.completed && b.order == a.order, "strategies disagree");
    if (c.contains("cross_check_closure") && c.at("cross_check_closure").get<bool>())
        expect(ctx.closure().order() == want, "closure order differs from enumeration");
    return "Todd-Coxeter order " + std::to_string(a.order) + " (both strategies)";
}

std::string run_regeneration(EntryContext& ctx, const json& c) {
    ParamSystem re = regenerate(ctx.rep(), ctx.word(c.at("words").at(0).get<std::string>()),
                                ctx.word(c.at("words").at(1).get<std::string>()),
                                ctx.word(c.at("words").at(2).get<std::string>()));
    expect(re.alpha == ctx.elem(c.at("alpha").get<std::string>()), "alpha' = " + re.alpha.str());
    expect(re.beta == ctx.elem(c.at("beta").get<std::string>()), "beta' = " + re.beta.str());
    expect(re.gamma == ctx.elem(c.at("gamma").get<std::string>()), "gamma' = " + re.gamma.str());
    if (c.contains("mixed_pair")) {
        FieldElement p1 = ctx.elem(c.at("mixed_pair").at(0).get<std::string>());
        FieldElement p2 = ctx.elem(c.at("mixed_pair").at(1).get<std::string>());
        FieldElement g1 = re.mixed_s3(), g2 = re.mixed_s2();
        expect((g1 == p1 && g2 == p2) || (g1 == p2 && g2 == p1),
               "mixed pair {" + g1.str() + ", " + g2.str() + "}");
    }
    if (c.contains("delta_zero") && c.at("delta_zero").get<bool>())
        expect(delta(re).is_zero(), "regenerated Delta = " + delta(re).str());
    if (c.contains("involutive") && c.at("involutive").get<bool>()) {
        ReflectionRep rep2 = build_rep(re);
        ParamSystem back = regenerate(rep2, ctx.word(c.at("words").at(0).get<std::string>()),
                                      ctx.word(c.at("words").at(1).get<std::string>()),
                                      ctx.word(c.at("words").at(2).get<std::string>()));
        expect(back.gamma == ctx.params().gamma, "second application does not restore gamma");
    }
    return "regenerated P(" + re.alpha.str() + ", " + re.beta.str() + ", " + re.gamma.str() +
           "; ...)";
}

std::string run_galois_twin(EntryContext& ctx, const json& c) {
    const CatalogEntry& self = ctx.entry();
    const CatalogEntry& other = catalog_entry(c.at("other").get<std::string>());
    FieldSpec spec;
    for (const auto& g : c.at("tower")) {
        FieldGen fg;
        fg.name = g.at(0).get<std::string>();
        for (const auto& co : g.at(1)) fg.minpoly.push_back(co.get<long>());
        spec.gens.push_back(std::move(fg));
    }
    Field T(spec);
    auto build_env = [&](const json& defs, const CatalogEntry* entry) {
        std::map<std::string, FieldElement> env;
        for (int i = 0; i < T.num_gens(); ++i) env.emplace(spec.gens[i].name, T.gen(i));
        for (const auto& d : defs)
            env.emplace(d.at(0).get<std::string>(),
                        parse_element(&T, d.at(1).get<std::string>(), env));
        // the entry's own definitions ride on top (tower designations win)
        if (entry)
            for (const auto& [name, expr] : entry->defs)
                env.emplace(name, parse_element(&T, expr, env));
        return env;
    };
    auto build_ps = [&](const CatalogEntry& e, const std::map<std::string, FieldElement>& env) {
        ParamSystem ps;
        ps.F = &T;
        ps.alpha = parse_element(&T, e.alpha, env);
        ps.beta = parse_element(&T, e.beta, env);
        ps.gamma = parse_element(&T, e.gamma, env);
        ps.m = parse_element(&T, e.alpha_l, env) / ps.alpha;
        ps.l = parse_element(&T, e.beta_m, env) / ps.beta;
        return ps;
    };
    auto env_self = build_env(c.at("defs_self"), &self);
    auto env_other = build_env(c.at("defs_other"), &other);
    ReflectionRep rep_self = build_rep(build_ps(self, env_self));
    ReflectionRep rep_other = build_rep(build_ps(other, env_other));
    std::vector<FieldElement> images;
    for (const auto& im : c.at("theta"))
        images.push_back(parse_element(&T, im.get<std::string>(), build_env(json::array(), nullptr)));
    Automorphism theta(&T, images);
    for (int i = 0; i < 3; ++i)
        expect(rep_self.s[i].applied(theta) == rep_other.s[i],
               "theta(s" + std::to_string(i + 1) + ") does not match the twin generator");
    return "theta maps the generator matrices onto the twin's exactly";
}

std::string run_translation_identity(EntryContext& ctx, const json& c) {
    int checked = 0;
    for (const auto& rel : c.at("relations")) {
        auto parts = split_eq(rel.get<std::string>());
        if (parts.size() < 2) throw CatalogError("relation needs =: " + rel.get<std::string>());
        Covector first = ctx.cov_expr(parts[0]);
        for (size_t i = 1; i < parts.size(); ++i)
            expect(ctx.cov_expr(parts[i]) == first,
                   "relation failed: " + rel.get<std::string>());
        ++checked;
    }
    return std::to_string(checked) + " covector relations hold";
}

std::string run_lattice_rank(EntryContext& ctx, const json& c) {
    long want = c.at("rank").get<long>();
    long got = ctx.lattice().rank();
    expect(got == want, "rank " + std::to_string(got) + ", expected " + std::to_string(want));
    expect(got <= 2 * ctx.field().degree(), "rank exceeds 2 [K:Q] (impossible)");
    return "Z-rank " + std::to_string(got);
}

std::string run_module_closure(EntryContext& ctx, const json& c) {
    std::vector<FieldElement> gens;
    if (c.contains("ring_gens"))
        for (const auto& g : c.at("ring_gens")) gens.push_back(ctx.elem(g.get<std::string>()));
    else
        for (const auto& g : ctx.entry().ring_gens) gens.push_back(ctx.elem(g));
    expect(!gens.empty(), "no ring generators declared");
    const TranslationLattice& L = ctx.lattice();
    for (const auto& rho : gens)
        for (const auto& v : L.basis_covectors())
            expect(L.member(v.scaled(rho)),
                   "lattice not stable under multiplication by " + rho.str());
    return "stable under " + std::to_string(gens.size()) + " ring multipliers";
}

std::string run_coefficient_ideal(EntryContext& ctx, const json& c) {
    std::vector<FieldElement> gens;
    if (c.contains("ideal_gens")) {
        // a declared ideal of O (used for the source text's explicit membership chains)
        for (const auto& g : c.at("ideal_gens")) gens.push_back(ctx.elem(g.get<std::string>()));
    } else {
        Covector cv = ctx.covector(c.at("c").get<std::string>());
        gens = coefficient_ideal_gens(ctx.lattice(), cv, ctx.order_basis());
    }
    expect(!gens.empty(), "computed coefficient ideal is zero");
    IdealHandle ideal(&ctx.order_basis(), gens);
    std::ostringstream note;
    if (c.contains("contains"))
        for (const auto& x : c.at("contains")) {
            FieldElement e = ctx.elem(x.get<std::string>());
            expect(ideal.contains(e), x.get<std::string>() + " not in the computed ideal");
        }
    if (c.contains("divisor")) {
        FieldElement pi = ctx.elem(c.at("divisor").get<std::string>());
        for (const auto& g : gens)
            expect(divides(pi, g, ctx.order_basis()),
                   "computed generator " + g.str() + " is not divisible by " + pi.str());
        note << "all " << gens.size() << " generators divisible by " << pi.str() << "; ";
    }
    if (c.contains("equals_principal")) {
        FieldElement g = ctx.elem(c.at("equals_principal").get<std::string>());
        IdealHandle principal(&ctx.order_basis(), {g});
        expect(ideal.contains(g), "principal generator not contained in the computed ideal");
        for (const auto& x : gens)
            expect(principal.contains(x), "computed ideal exceeds (" + g.str() + ")");
        note << "equals (" << g.str() << "); ";
    }
    note << "ideal generators: " << gens.size();
    return note.str();
}

std::string run_split_obstruction(EntryContext& ctx, const json& c) {
    const Field* F = &ctx.field();
    std::string mode = c.at("mode").get<std::string>();
    if (mode == "ideal") {
        FieldElement pi = ctx.elem(c.at("pi").get<std::string>());
        Rat nrm = F->norm(pi);
        expect(abs(nrm) > 1, "pi is a unit: |norm| = " + nrm.get_str());
        std::vector<FieldElement> coeffs;
        for (const auto& e : c.at("coeffs")) coeffs.push_back(ctx.elem(e.get<std::string>()));
        std::vector<std::string> cnames;
        for (const auto& n : c.at("cs")) cnames.push_back(n.get<std::string>());
        expect(coeffs.size() == cnames.size(), "coeffs/cs length mismatch");
        const IntegralBasis& O = ctx.order_basis();
        std::ostringstream note;
        for (size_t j = 0; j < cnames.size(); ++j) {
            Covector cv = ctx.covector(cnames[j]);
            auto gens = coefficient_ideal_gens(ctx.lattice(), cv, O);
            expect(!gens.empty(), "computed I_" + std::to_string(j + 1) + " is zero");
            for (const auto& g : gens) {
                FieldElement term = coeffs[j] * g;
                expect(is_integral(O, term), "coefficient times generator is not integral");
                expect(divides(pi, term, O),
                       "pi does not divide (" + coeffs[j].str() + ") * (" + g.str() + ")");
            }
            note << "I_" << j + 1 << ": " << gens.size() << " gens; ";
        }
        note << "pi = " << pi.str() << ", |norm| = " << Rat(abs(nrm)).get_str()
             << " > 1; every term of (E) falls in (pi), -1 does not";
        return note.str();
    }
    if (mode == "linear" || mode == "lift") {
        // sigma(s_i) = s_i t_i with t_i a translation on the anti-fixed line of
        // s_i (so sigma(s_i)^2 = 1 automatically) and t_i in N. A splitting
        // exists iff the relators of a verified presentation of G' lift, so we
        // solve the relator constraints over K and then test the solution coset
        // against the exact translation lattice.
        const ReflectionRep& rep = ctx.rep();
        std::vector<Covector> dirs;
        if (mode == "linear") {
            for (const auto& n : c.at("cs")) dirs.push_back(ctx.covector(n.get<std::string>()));
        } else {
            for (int i = 0; i < 3; ++i) dirs.push_back(anti_fixed_line(rep.s[i], F));
        }
        for (int i = 0; i < 3; ++i)
            expect(act(dirs[i], rep.s[i]) == -dirs[i],
                   "direction " + std::to_string(i + 1) + " is not anti-fixed by s_" +
                       std::to_string(i + 1));
        // sigma(s_i1)...sigma(s_ik) = (s_i1...s_ik) t with
        // t = sum_j (x_{i_j} dir_{i_j}) o (s_{i_{j+1}} ... s_{i_k})
        auto lifted = [&](const WordExpr::Ptr& w) {
            auto letters = w->letters({{"s1", 0}, {"s2", 1}, {"s3", 2}});
            std::vector<Covector> parts(3, Covector{F, {F->zero(), F->zero(), F->zero()}});
            Mat suffix = Mat::identity(F, 3);
            for (size_t j = letters.size(); j-- > 0;) {
                int gi = std::abs(letters[j]) - 1;
                parts[gi] = parts[gi] + Covector{F, suffix.row_mul(dirs[gi].mu)};
                suffix = rep.s[gi] * suffix;
            }
            return parts;  // coefficient covector of each unknown x_i
        };
        KLinearSystem sys;
        auto add_equation = [&](const std::vector<Covector>& coeffs, const Covector& rhs,
                                const std::string& label) {
            for (int comp = 0; comp < 3; ++comp) {
                std::vector<FieldElement> row;
                for (int i = 0; i < 3; ++i) row.push_back(coeffs[i].mu[comp]);
                sys.rows.push_back(row);
                sys.rhs.push_back(rhs.mu[comp]);
                sys.labels.push_back(label + " [component " + std::to_string(comp) + "]");
            }
        };
        std::vector<WordExpr::Ptr> relators;
        if (mode == "linear") {
            // pairwise equalities plus words that must lift to the identity
            for (const auto& pr : c.at("pairs")) {
                auto wa = ctx.word(pr.at(0).get<std::string>());
                auto wb = ctx.word(pr.at(1).get<std::string>());
                relators.push_back(
                    WordExpr::prod({wa, WordExpr::pow(wb, -1)}));
            }
            if (c.contains("trivial_words"))
                for (const auto& w : c.at("trivial_words"))
                    relators.push_back(ctx.word(w.get<std::string>()));
        } else {
            expect(!ctx.entry().n_presentation.empty(),
                   "lift mode needs the entry's n_presentation");
            Presentation p = parse_presentation(ctx.entry().n_presentation);
            // the presentation must present G' exactly for the lift to be the
            // whole story (and for the lattice to be all of N)
            TCResult tc = todd_coxeter(p, ctx.caps().cosets);
            expect(tc.completed && tc.order == ctx.closure().order(),
                   "presentation does not enumerate to |G'|");
            relators = p.relators;
        }
        for (const auto& r : relators) {
            Mat base = rep.eval(r);
            expect(is_translation(base, ctx.affine().b),
                   "relator does not project to the identity of G': " + r->str());
            Covector delta_r = covector_of(base, ctx.affine().b);
            // rho(r) t_{T_r(x)} = I  <=>  T_r(x) = -delta_r
            add_equation(lifted(r), -delta_r, r->str());
        }
        auto result = solve_or_refute(sys);
        if (std::holds_alternative<InfeasibilityWitness>(result)) {
            const auto& w = std::get<InfeasibilityWitness>(result);
            expect(recheck_witness(sys, w), "witness failed the independent re-check");
            return "lifting system infeasible over K; witness residue " + w.value.str() +
                   " from " + w.row_label;
        }
        // solvable over K: the obstruction must come from the lattice constraint
        const auto& sol = std::get<std::vector<FieldElement>>(result);
        auto kernel = kernel_basis(sys);
        const TranslationLattice& N = ctx.lattice();
        if (kernel.empty()) {
            std::string inside;
            for (int i = 0; i < 3; ++i) {
                Covector ti = dirs[i].scaled(sol[i]);
                if (N.member(ti)) {
                    inside += " t_" + std::to_string(i + 1);
                } else {
                    return "unique K-solution x = (" + sol[0].str() + ", " + sol[1].str() +
                           ", " + sol[2].str() + "); required translation " +
                           std::to_string(i + 1) + " = " + ti.str() +
                           " lies outside N, so no splitting exists";
                }
            }
            throw ClaimFail("the unique lifting solution lies in N: a splitting exists");
        }
        // positive-dimensional solution set: decide whether the coset meets N^3
        std::vector<Rat> target;
        for (int i = 0; i < 3; ++i) {
            auto f = N.flatten_rational(dirs[i].scaled(sol[i]));
            target.insert(target.end(), f.begin(), f.end());
        }
        std::vector<std::vector<Rat>> subspace;
        for (const auto& kv : kernel)
            for (int b = 0; b < F->degree(); ++b) {
                std::vector<Rat> coords(F->degree(), Rat(0));
                coords[b] = 1;
                FieldElement omega = F->make(coords);
                std::vector<Rat> row;
                for (int i = 0; i < 3; ++i) {
                    auto f = N.flatten_rational(dirs[i].scaled(kv[i] * omega));
                    row.insert(row.end(), f.begin(), f.end());
                }
                subspace.push_back(std::move(row));
            }
        IntMat block;
        size_t w3 = 3 * 3 * (size_t)F->degree();
        for (int i = 0; i < 3; ++i)
            for (const auto& r : N.rows()) {
                IntRow row(w3, 0);
                for (size_t k = 0; k < r.size(); ++k) row[i * r.size() + k] = r[k];
                block.push_back(std::move(row));
            }
        bool meets = meets_lattice_modulo_subspace(target, subspace, block, N.denom());
        expect(!meets, "the solution coset meets N^3: a splitting exists");
        return "lifting solutions form a " + std::to_string(kernel.size()) +
               "-parameter family over K, none of which lands in N";
    }
    throw CatalogError("unknown split_obstruction mode: " + mode);
}

std::string run_condition_table(EntryContext& ctx, const json& c) {
    // realizes the condition-equivalence propositions: on every declared
    // instance the number of true conditions must avoid {2,...,n-1} (any two
    // imply the rest), and each instance's expected truth count must match.
    const Field* F = &ctx.field();
    struct Cond {
        std::string name, type, a, b, word, identity;
        long order = 0;
    };
    std::vector<Cond> conds;
    for (const auto& jc : c.at("conditions")) {
        Cond cd;
        cd.name = jc.at("name").get<std::string>();
        cd.type = jc.at("type").get<std::string>();
        if (jc.contains("word")) cd.word = jc.at("word").get<std::string>();
        if (jc.contains("order")) cd.order = jc.at("order").get<long>();
        if (jc.contains("identity")) cd.identity = jc.at("identity").get<std::string>();
        if (jc.contains("a")) cd.a = jc.at("a").get<std::string>();
        if (jc.contains("b")) cd.b = jc.at("b").get<std::string>();
        conds.push_back(std::move(cd));
    }
    int total = (int)conds.size();
    std::ostringstream note;
    int idx = -1;
    for (const auto& inst : c.at("instances")) {
        ++idx;
        // build the instance's parameter system on top of the entry environment
        ParamSystem ps;
        ps.F = F;
        auto get = [&](const char* key, const std::string& dflt) {
            return inst.contains(key) ? ctx.elem(inst.at(key).get<std::string>())
                                      : ctx.elem(dflt);
        };
        ps.alpha = get("alpha", ctx.entry().alpha);
        ps.beta = get("beta", ctx.entry().beta);
        ps.gamma = get("gamma", ctx.entry().gamma);
        ps.m = get("alpha_l", ctx.entry().alpha_l) / ps.alpha;
        ps.l = get("beta_m", ctx.entry().beta_m) / ps.beta;
        ReflectionRep rep = build_rep(ps);
        std::map<std::string, FieldElement> env = ctx.env();
        env["alpha"] = ps.alpha;
        env["beta"] = ps.beta;
        env["gamma"] = ps.gamma;
        env["lp"] = ps.l;
        env["mp"] = ps.m;
        env["S"] = ps.mixed_sum();
        int truths = 0;
        std::string pattern;
        for (const auto& cd : conds) {
            bool ok = false;
            if (cd.type == "delta_zero") {
                ok = delta(ps).is_zero();
            } else if (cd.type == "identity") {
                auto parts = split_eq(cd.identity);
                FieldElement first = parse_element(F, parts.at(0), env);
                ok = true;
                for (size_t i = 1; i < parts.size(); ++i)
                    ok = ok && parse_element(F, parts[i], env) == first;
            } else if (cd.type == "word_order") {
                Mat m = rep.eval(parse_word(cd.word));
                ok = matrix_order(m, 2 * cd.order + 2) == cd.order;
            } else if (cd.type == "param_distinct") {
                ok = !(parse_element(F, cd.a, env) == parse_element(F, cd.b, env));
            } else if (cd.type == "param_equal") {
                ok = parse_element(F, cd.a, env) == parse_element(F, cd.b, env);
            } else {
                throw CatalogError("unknown condition type " + cd.type);
            }
            truths += ok ? 1 : 0;
            pattern += ok ? cd.name : "-";
        }
        std::string rule = c.contains("rule") ? c.at("rule").get<std::string>() : "two_imply";
        bool shape_ok = rule == "equivalent" ? (truths == 0 || truths == total)
                                             : (truths <= 1 || truths == total);
        expect(shape_ok, "instance " + std::to_string(idx) + " satisfies " +
                             std::to_string(truths) + " of " + std::to_string(total) +
                             " conditions (" + pattern + "): the stated implication fails");
        if (inst.contains("expect_all") && inst.at("expect_all").get<bool>())
            expect(truths == total, "instance " + std::to_string(idx) + " expected all-true, got " +
                                        pattern);
        if (inst.contains("expect_count"))
            expect(truths == inst.at("expect_count").get<int>(),
                   "instance " + std::to_string(idx) + " truth pattern " + pattern);
        note << "[" << pattern << "] ";
    }
    return "condition table over " + std::to_string(idx + 1) + " instances: " + note.str();
}

std::string run_infinite_commutator(EntryContext& ctx, const json& c) {
    FieldElement got = cartan(ctx.rep(), ctx.word(c.at("w1").get<std::string>()),
                              ctx.word(c.at("w2").get<std::string>()));
    FieldElement want = ctx.elem(c.at("expected_c").get<std::string>());
    expect(got == want, "C = " + got.str() + ", expected " + want.str());
    OrderClass oc = classify_order(got);
    expect(oc.kind == OrderClass::Infinite, "order class is not infinite: " + oc.certificate);
    return "C = " + got.str() + " certified infinite: " + oc.certificate;
}

std::string dispatch(EntryContext& ctx, const std::string& kind, const json& c) {
    if (kind == "delta_zero") return run_delta_zero(ctx, c);
    if (kind == "param_poly") return run_param_poly(ctx, c);
    if (kind == "cartan_value") return run_cartan_value(ctx, c);
    if (kind == "word_order") return run_word_order(ctx, c);
    if (kind == "matrix_identity") return run_matrix_identity(ctx, c);
    if (kind == "line_map") return run_line_map(ctx, c);
    if (kind == "quotient_order") return run_quotient_order(ctx, c);
    if (kind == "quotient_structure") return run_quotient_structure(ctx, c);
    if (kind == "presentation_order") return run_presentation_order(ctx, c);
    if (kind == "regeneration") return run_regeneration(ctx, c);
    if (kind == "galois_twin") return run_galois_twin(ctx, c);
    if (kind == "translation_identity") return run_translation_identity(ctx, c);
    if (kind == "lattice_rank") return run_lattice_rank(ctx, c);
    if (kind == "module_closure") return run_module_closure(ctx, c);
    if (kind == "coefficient_ideal") return run_coefficient_ideal(ctx, c);
    if (kind == "split_obstruction") return run_split_obstruction(ctx, c);
    if (kind == "infinite_commutator_witness") return run_infinite_commutator(ctx, c);
    if (kind == "condition_table") return run_condition_table(ctx, c);
    throw CatalogError("unknown claim kind: " + kind);
}

}  // namespace

// -------------------------------------------------------------------- reports

bool VerificationReport::all_pass() const {
    if (!error.empty()) return false;
    for (const auto& c : claims)
        if (c.status == "fail") return false;
    return true;
}

int VerificationReport::fails() const {
    int n = 0;
    for (const auto& c : claims)
        if (c.status == "fail") ++n;
    return n;
}

VerificationReport verify_entry(const CatalogEntry& e, const std::vector<std::string>& kind_filter,
                                Caps caps) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.entry = e.id;
    try {
        EntryContext ctx(e, caps);
        int idx = 0;
        for (const auto& c : e.claims) {
            ++idx;
            std::string kind = c.at("kind").get<std::string>();
            if (!kind_filter.empty() &&
                std::find(kind_filter.begin(), kind_filter.end(), kind) == kind_filter.end())
                continue;
            ClaimResult r;
            r.kind = kind;
            r.label = c.contains("label") ? c.at("label").get<std::string>()
                                          : kind + "#" + std::to_string(idx);
            r.paper_ref = c.contains("paper_ref") ? c.at("paper_ref").get<std::string>() : "";
            r.tag = c.contains("tag") ? c.at("tag").get<std::string>() : "";
            try {
                r.witness = dispatch(ctx, kind, c);
                r.status = "pass";
            } catch (const ClaimFail& f) {
                r.status = "fail";
                r.witness = f.what();
            } catch (const ClaimInconclusive& f) {
                r.status = "inconclusive";
                r.witness = f.what();
            } catch (const CatalogError&) {
                throw;  // configuration problem, abort the entry
            } catch (const std::exception& ex) {
                r.status = "fail";
                r.witness = std::string("exception: ") + ex.what();
            }
            rep.claims.push_back(std::move(r));
        }
    } catch (const std::exception& ex) {
        rep.error = ex.what();
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::vector<VerificationReport> verify_entries(const std::vector<std::string>& ids,
                                               const std::vector<std::string>& kind_filter,
                                               int jobs, Caps caps) {
    std::vector<VerificationReport> out(ids.size());
#ifdef _OPENMP
    if (jobs != 1) {
        if (jobs > 1) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
        for (size_t i = 0; i < ids.size(); ++i)
            out[i] = verify_entry(catalog_entry(ids[i]), kind_filter, caps);
    } else
#endif
    {
        for (size_t i = 0; i < ids.size(); ++i)
            out[i] = verify_entry(catalog_entry(ids[i]), kind_filter, caps);
    }
    std::sort(out.begin(), out.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  return a.entry < b.entry;
              });
    return out;
}

std::string toolchain_string() {
    return std::string("gcc ") + __VERSION__ + ", gmp " + gmp_version;
}

std::string report_json(const std::vector<VerificationReport>& reports, bool with_timing) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json jr;
        jr["entry"] = r.entry;
        if (!r.error.empty()) jr["error"] = r.error;
        nlohmann::ordered_json claims = nlohmann::ordered_json::array();
        for (const auto& c : r.claims) {
            nlohmann::ordered_json jc;
            jc["claim"] = c.label;
            jc["kind"] = c.kind;
            jc["paper_ref"] = c.paper_ref;
            jc["provenance"] = c.tag;
            jc["status"] = c.status;
            jc["witness"] = c.witness;
            claims.push_back(std::move(jc));
        }
        jr["claims"] = std::move(claims);
        if (with_timing) jr["elapsed_ms"] = r.elapsed_ms;
        jr["toolchain"] = toolchain_string();
        out.push_back(std::move(jr));
    }
    return out.dump(2);
}

std::string report_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    long pass = 0, fail = 0, inconclusive = 0;
    for (const auto& r : reports) {
        os << r.entry << "\n";
        if (!r.error.empty()) os << "  ERROR " << r.error << "\n";
        for (const auto& c : r.claims) {
            os << "  [" << c.status << "] " << c.label;
            if (!c.paper_ref.empty()) os << " (" << c.paper_ref << ")";
            if (c.status != "pass") os << " :: " << c.witness;
            os << "\n";
            if (c.status == "pass")
                ++pass;
            else if (c.status == "fail")
                ++fail;
            else
                ++inconclusive;
        }
    }
    os << "total: " << pass << " pass, " << fail << " fail, " << inconclusive
       << " inconclusive\n";
    return os.str();
}

int report_exit_code(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.error.empty()) return 2;
    for (const auto& r : reports)
        if (!r.all_pass()) return 1;
    return 0;
}

std::string rep_matrices_json(const CatalogEntry& e) {
    EntryContext ctx(e);
    const ReflectionRep& rep = ctx.rep();
    nlohmann::ordered_json out;
    out["id"] = e.id;
    nlohmann::ordered_json fj = nlohmann::ordered_json::array();
    for (const auto& g : e.fieldspec.gens) {
        nlohmann::ordered_json gj = nlohmann::ordered_json::array();
        gj.push_back(g.name);
        gj.push_back(g.minpoly);
        fj.push_back(std::move(gj));
    }
    out["field"] = std::move(fj);
    nlohmann::ordered_json mats = nlohmann::ordered_json::array();
    for (int g = 0; g < 3; ++g) {
        nlohmann::ordered_json mj = nlohmann::ordered_json::array();
        for (int i = 0; i < 3; ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int j = 0; j < 3; ++j) {
                nlohmann::ordered_json coords = nlohmann::ordered_json::array();
                for (const auto& q : rep.s[g].at(i, j).coords()) coords.push_back(q.get_str());
                row.push_back(std::move(coords));
            }
            mj.push_back(std::move(row));
        }
        mats.push_back(std::move(mj));
    }
    out["matrices"] = std::move(mats);
    return out.dump(2);
}

}  // namespace reflex
