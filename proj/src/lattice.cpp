#include "reflex/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace reflex {

bool Covector::is_zero() const {
    for (const auto& x : mu)
        if (!x.is_zero()) return false;
    return true;
}
Covector Covector::operator+(const Covector& o) const {
    Covector r{F, {}};
    for (size_t i = 0; i < mu.size(); ++i) r.mu.push_back(mu[i] + o.mu[i]);
    return r;
}
Covector Covector::operator-(const Covector& o) const {
    Covector r{F, {}};
    for (size_t i = 0; i < mu.size(); ++i) r.mu.push_back(mu[i] - o.mu[i]);
    return r;
}
Covector Covector::operator-() const {
    Covector r{F, {}};
    for (const auto& x : mu) r.mu.push_back(-x);
    return r;
}
Covector Covector::scaled(const FieldElement& s) const {
    Covector r{F, {}};
    for (const auto& x : mu) r.mu.push_back(x * s);
    return r;
}
bool Covector::operator==(const Covector& o) const {
    for (size_t i = 0; i < mu.size(); ++i)
        if (!(mu[i] == o.mu[i])) return false;
    return true;
}
std::string Covector::str() const {
    std::string s = "(";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) s += ", ";
        s += mu[i].str();
    }
    return s + ")";
}

bool is_translation(const Mat& m, const std::vector<FieldElement>& b) {
    const Field* F = m.field();
    auto mb = m.col_mul(b);
    for (int i = 0; i < 3; ++i)
        if (!(mb[i] == b[i])) return false;
    // M - I must equal b * mu^T for some row mu
    int i0 = -1;
    for (int i = 0; i < 3; ++i)
        if (!b[i].is_zero()) {
            i0 = i;
            break;
        }
    if (i0 < 0) return false;
    FieldElement binv = b[i0].inverse();
    for (int j = 0; j < 3; ++j) {
        FieldElement muj = (m.at(i0, j) - (i0 == j ? F->one() : F->zero())) * binv;
        for (int i = 0; i < 3; ++i) {
            FieldElement lhs = m.at(i, j) - (i == j ? F->one() : F->zero());
            if (!(lhs == b[i] * muj)) return false;
        }
    }
    return true;
}

Covector covector_of(const Mat& m, const std::vector<FieldElement>& b) {
    const Field* F = m.field();
    if (!is_translation(m, b))
        throw NotTranslation("matrix is not a translation modulo <b>: " + m.str());
    int i0 = 0;
    while (b[i0].is_zero()) ++i0;
    FieldElement binv = b[i0].inverse();
    Covector c{F, {}};
    for (int j = 0; j < 3; ++j)
        c.mu.push_back((m.at(i0, j) - (i0 == j ? F->one() : F->zero())) * binv);
    return c;
}

Covector act(const Covector& c, const Mat& w) {
    Covector r{c.F, w.inverse().row_mul(c.mu)};
    return r;
}

// ------------------------------------------------------------ TranslationLattice

TranslationLattice::TranslationLattice(const Field* F, int ambient)
    : F_(F), ambient_(ambient), denom_(1) {}

IntRow TranslationLattice::flatten_scaled(const Covector& c, const Int& target_denom,
                                          bool* ok) const {
    int d = F_->degree();
    IntRow out(ambient_ * d);
    if (ok) *ok = true;
    for (int j = 0; j < ambient_; ++j)
        for (int k = 0; k < d; ++k) {
            Rat v = c.mu[j].coords()[k] * Rat(target_denom);
            if (v.get_den() != 1) {
                if (ok) {
                    *ok = false;
                    return out;
                }
                throw std::runtime_error("flatten: denominator does not divide");
            }
            out[(size_t)j * d + k] = v.get_num();
        }
    return out;
}

void TranslationLattice::canonicalize() {
    rows_ = hnf_rows(std::move(rows_));
    Int g = denom_;
    for (const auto& r : rows_)
        for (const auto& x : r)
            if (x != 0) g = gcd(g, x);
    if (g > 1) {
        for (auto& r : rows_)
            for (auto& x : r) x /= g;
        denom_ /= g;
    }
    if (rows_.empty()) denom_ = 1;
}

void TranslationLattice::add_and_reduce(const std::vector<Covector>& cs) {
    // grow the common denominator to host every new vector
    Int newdenom = denom_;
    for (const auto& c : cs)
        for (const auto& x : c.mu)
            for (const auto& q : x.coords()) newdenom = lcm(newdenom, Int(q.get_den()));
    if (newdenom != denom_) {
        Int f = newdenom / denom_;
        for (auto& r : rows_)
            for (auto& x : r) x *= f;
        denom_ = newdenom;
    }
    for (const auto& c : cs) rows_.push_back(flatten_scaled(c, denom_, nullptr));
    canonicalize();
}

bool TranslationLattice::member(const Covector& c) const {
    bool ok = true;
    IntRow v = flatten_scaled(c, denom_, &ok);
    if (!ok) return false;
    return hnf_member(rows_, std::move(v));
}

std::vector<Covector> TranslationLattice::basis_covectors() const {
    int d = F_->degree();
    std::vector<Covector> out;
    for (const auto& r : rows_) {
        Covector c{F_, {}};
        for (int j = 0; j < ambient_; ++j) {
            std::vector<Rat> coords(d);
            for (int k = 0; k < d; ++k) coords[k] = Rat(r[(size_t)j * d + k]) / Rat(denom_);
            c.mu.push_back(F_->make(std::move(coords)));
        }
        out.push_back(std::move(c));
    }
    return out;
}

TranslationLattice TranslationLattice::span(const std::vector<Covector>& seeds,
                                            const ReflectionRep& rep, int max_rounds) {
    TranslationLattice L(rep.ps.F);
    L.add_and_reduce(seeds);
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<Covector> extra;
        for (const auto& v : L.basis_covectors())
            for (int g = 0; g < 3; ++g) {
                Covector w = act(v, rep.s[g]);
                if (!L.member(w)) extra.push_back(std::move(w));
            }
        if (extra.empty()) return L;
        L.add_and_reduce(extra);
    }
    // one more pass to confirm stability
    for (const auto& v : L.basis_covectors())
        for (int g = 0; g < 3; ++g)
            if (!L.member(act(v, rep.s[g])))
                throw std::runtime_error("translation lattice did not stabilize");
    return L;
}

bool TranslationLattice::operator==(const TranslationLattice& o) const {
    return denom_ == o.denom_ && rows_ == o.rows_;
}

std::string TranslationLattice::str() const {
    std::ostringstream os;
    os << "rank " << rank() << ", denom " << denom_.get_str();
    return os.str();
}

std::vector<Rat> TranslationLattice::flatten_rational(const Covector& c) const {
    int d = F_->degree();
    std::vector<Rat> out;
    out.reserve(ambient_ * d);
    for (int j = 0; j < ambient_; ++j)
        for (int k = 0; k < d; ++k) out.push_back(c.mu[j].coords()[k]);
    return out;
}

Covector anti_fixed_line(const Mat& s, const Field* F) {
    // mu o s = -mu: mu (s + I) = 0; the nullspace of the transposed action
    Mat m = s + Mat::identity(F, 3);
    // solve x m = 0  <=>  m^T x^T = 0
    std::vector<std::vector<FieldElement>> rows(3, std::vector<FieldElement>(3, F->zero()));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rows[i][j] = m.at(j, i);
    // gaussian nullspace (3 columns)
    std::vector<int> pivot_of_col(3, -1);
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (!rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        FieldElement dinv = rows[rank][col].inverse();
        for (int ccc = col; ccc < 3; ++ccc) rows[rank][ccc] *= dinv;
        for (int r = 0; r < 3; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col];
            for (int ccc = col; ccc < 3; ++ccc) rows[r][ccc] -= f * rows[rank][ccc];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    for (int col = 0; col < 3; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<FieldElement> v(3, F->zero());
        v[col] = F->one();
        for (int ccc = 0; ccc < 3; ++ccc)
            if (pivot_of_col[ccc] >= 0) v[ccc] = -rows[pivot_of_col[ccc]][col];
        // normalize first nonzero component to 1
        for (const auto& x : v)
            if (!x.is_zero()) {
                FieldElement inv = x.inverse();
                for (auto& y : v) y *= inv;
                break;
            }
        return Covector{F, v};
    }
    throw std::runtime_error("reflection has no anti-fixed covector line");
}

bool meets_lattice_modulo_subspace(const std::vector<Rat>& target,
                                   const std::vector<std::vector<Rat>>& subspace,
                                   const IntMat& lattice_rows, const Int& denom) {
    size_t w = target.size();
    // eliminate the subspace directions from target and lattice rows
    std::vector<std::vector<Rat>> sub = subspace;
    std::vector<Rat> t = target;
    std::vector<std::vector<Rat>> lat;
    for (const auto& r : lattice_rows) {
        std::vector<Rat> q(w);
        for (size_t i = 0; i < w; ++i) q[i] = Rat(r[i]) / Rat(denom);
        lat.push_back(std::move(q));
    }
    size_t rank = 0;
    for (size_t col = 0; col < w && rank < sub.size(); ++col) {
        size_t piv = sub.size();
        for (size_t r = rank; r < sub.size(); ++r)
            if (sub[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == sub.size()) continue;
        std::swap(sub[piv], sub[rank]);
        Rat d = sub[rank][col];
        for (size_t c = 0; c < w; ++c) sub[rank][c] /= d;
        auto eliminate = [&](std::vector<Rat>& v) {
            if (v[col] == 0) return;
            Rat f = v[col];
            for (size_t c = 0; c < w; ++c) v[c] -= f * sub[rank][c];
        };
        for (size_t r = 0; r < sub.size(); ++r)
            if (r != rank) eliminate(sub[r]);
        eliminate(t);
        for (auto& v : lat) eliminate(v);
        ++rank;
    }
    // now decide t in Z-span(lat) over the quotient coordinates: common denominator
    Int common = 1;
    for (const auto& v : lat)
        for (const auto& q : v) common = lcm(common, Int(q.get_den()));
    for (const auto& q : t) common = lcm(common, Int(q.get_den()));
    auto scale = [&](const Rat& q) {
        Rat s = q * Rat(common);
        s.canonicalize();
        if (s.get_den() != 1) throw std::runtime_error("common denominator failure");
        return Int(s.get_num());
    };
    IntMat L;
    for (const auto& v : lat) {
        IntRow r(w);
        for (size_t i = 0; i < w; ++i) r[i] = scale(v[i]);
        L.push_back(std::move(r));
    }
    IntRow tv(w);
    for (size_t i = 0; i < w; ++i) tv[i] = scale(t[i]);
    return hnf_member(hnf_rows(std::move(L)), std::move(tv));
}

std::vector<FieldElement> coefficient_ideal_gens(const TranslationLattice& lat, const Covector& c,
                                                 const IntegralBasis& O) {
    const Field* F = lat.F_;
    int d = F->degree();
    // A_k = flatten(omega_k * c); solve x with sum x_k A_k in the lattice
    Int denom = lat.denom_;
    std::vector<Covector> prods;
    for (int k = 0; k < d; ++k) {
        prods.push_back(c.scaled(O.basis()[k]));
        for (const auto& x : prods.back().mu)
            for (const auto& q : x.coords()) denom = lcm(denom, Int(q.get_den()));
    }
    Int f = denom / lat.denom_;
    IntMat L = lat.rows_;
    if (f != 1)
        for (auto& r : L)
            for (auto& x : r) x *= f;
    IntMat A;
    for (int k = 0; k < d; ++k) A.push_back(lat.flatten_scaled(prods[k], denom, nullptr));
    IntMat X = preimage_lattice(A, L);
    std::vector<FieldElement> gens;
    for (const auto& x : X) {
        FieldElement g = F->zero();
        for (int k = 0; k < d; ++k)
            if (x[k] != 0) g += O.basis()[k] * Rat(x[k]);
        gens.push_back(std::move(g));
    }
    return gens;
}

// ------------------------------------------------------------- linear systems

std::variant<InfeasibilityWitness, std::vector<FieldElement>> solve_or_refute(
    const KLinearSystem& sys) {
    const Field* F = sys.rhs.empty() ? nullptr : sys.rhs[0].field();
    size_t nrows = sys.rows.size();
    size_t ncols = nrows ? sys.rows[0].size() : 0;
    // augmented matrix with tracking of row operations
    std::vector<std::vector<FieldElement>> m(nrows);
    std::vector<std::vector<FieldElement>> track(nrows);
    for (size_t r = 0; r < nrows; ++r) {
        m[r] = sys.rows[r];
        m[r].push_back(sys.rhs[r]);
        track[r].assign(nrows, F->zero());
        track[r][r] = F->one();
    }
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < nrows; ++col) {
        size_t piv = nrows;
        for (size_t r = rank; r < nrows; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == nrows) continue;
        std::swap(m[piv], m[rank]);
        std::swap(track[piv], track[rank]);
        FieldElement dinv = m[rank][col].inverse();
        for (auto& x : m[rank]) x *= dinv;
        for (auto& x : track[rank]) x *= dinv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            FieldElement fct = m[r][col];
            for (size_t c = 0; c <= ncols; ++c) m[r][c] -= fct * m[rank][c];
            for (size_t c = 0; c < nrows; ++c) track[r][c] -= fct * track[rank][c];
        }
        ++rank;
    }
    for (size_t r = rank; r < nrows; ++r) {
        if (!m[r][ncols].is_zero()) {
            InfeasibilityWitness w;
            w.comb = track[r];
            w.value = m[r][ncols];
            w.row_label = r < sys.labels.size() ? sys.labels[r] : "";
            return w;
        }
    }
    // solvable: read off one solution
    std::vector<FieldElement> sol(ncols, F->zero());
    for (size_t r = 0; r < rank; ++r) {
        size_t lead = 0;
        while (lead < ncols && m[r][lead].is_zero()) ++lead;
        if (lead < ncols) sol[lead] = m[r][ncols];
    }
    return sol;
}

std::vector<std::vector<FieldElement>> kernel_basis(const KLinearSystem& sys) {
    if (sys.rows.empty()) return {};
    const Field* F = sys.rows[0][0].field();
    size_t nrows = sys.rows.size(), ncols = sys.rows[0].size();
    auto m = sys.rows;
    std::vector<int> pivot_of_col(ncols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < nrows; ++col) {
        size_t piv = nrows;
        for (size_t r = rank; r < nrows; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == nrows) continue;
        std::swap(m[piv], m[rank]);
        FieldElement dinv = m[rank][col].inverse();
        for (size_t c = col; c < ncols; ++c) m[rank][c] *= dinv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            FieldElement f = m[r][col];
            for (size_t c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_of_col[col] = (int)rank;
        ++rank;
    }
    std::vector<std::vector<FieldElement>> basis;
    for (size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<FieldElement> v(ncols, F->zero());
        v[col] = F->one();
        for (size_t c = 0; c < ncols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -m[pivot_of_col[c]][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool recheck_witness(const KLinearSystem& sys, const InfeasibilityWitness& w) {
    const Field* F = w.value.field();
    size_t ncols = sys.rows.empty() ? 0 : sys.rows[0].size();
    for (size_t c = 0; c < ncols; ++c) {
        FieldElement acc = F->zero();
        for (size_t r = 0; r < sys.rows.size(); ++r) acc += w.comb[r] * sys.rows[r][c];
        if (!acc.is_zero()) return false;
    }
    FieldElement rv = F->zero();
    for (size_t r = 0; r < sys.rows.size(); ++r) rv += w.comb[r] * sys.rhs[r];
    return rv == w.value && !rv.is_zero();
}

}  // namespace reflex
