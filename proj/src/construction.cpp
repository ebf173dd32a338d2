#include "reflex/construction.hpp"

#include <algorithm>
#include <map>

namespace reflex {

void ParamSystem::validate() const {
    if (!(l * m == gamma)) throw ConstructionError("parameter error: l*m != gamma");
}

FieldElement delta(const ParamSystem& ps) {
    const Field* F = ps.F;
    Rat two(2), eight(8);
    return F->from_rational(eight) - ps.alpha * two - ps.beta * two - ps.gamma * two -
           ps.mixed_sum();
}

ReflectionRep build_rep(const ParamSystem& ps) {
    ps.validate();
    const Field* F = ps.F;
    FieldElement one = F->one(), z = F->zero();
    ReflectionRep rep;
    rep.ps = ps;
    for (int i = 0; i < 3; ++i) rep.s[i] = Mat(F, 3);

    // columns are images of a1, a2, a3
    Mat& s1 = rep.s[0];
    s1.at(0, 0) = -one; s1.at(0, 1) = one;  s1.at(0, 2) = one;
    s1.at(1, 1) = one;  s1.at(2, 2) = one;

    Mat& s2 = rep.s[1];
    s2.at(0, 0) = one;
    s2.at(1, 0) = ps.alpha; s2.at(1, 1) = -one; s2.at(1, 2) = ps.l;
    s2.at(2, 2) = one;

    Mat& s3 = rep.s[2];
    s3.at(0, 0) = one; s3.at(1, 1) = one;
    s3.at(2, 0) = ps.beta; s3.at(2, 1) = ps.m; s3.at(2, 2) = -one;
    (void)z;

    for (int i = 0; i < 3; ++i)
        if (!is_reflection(rep.s[i]))
            throw ConstructionError("generator is not a reflection (internal)");
    if (!(cartan(rep.s[0], rep.s[1]) == ps.alpha) || !(cartan(rep.s[0], rep.s[2]) == ps.beta) ||
        !(cartan(rep.s[1], rep.s[2]) == ps.gamma))
        throw ConstructionError("Cartan coefficients of the built generators are off (internal)");
    return rep;
}

std::map<std::string, Mat> ReflectionRep::env(const std::map<std::string, WordExpr::Ptr>&) const {
    return {{"s1", s[0]}, {"s2", s[1]}, {"s3", s[2]}};
}

Mat ReflectionRep::eval(const WordExpr::Ptr& w) const { return w->eval(env()); }

bool is_reflection(const Mat& m) {
    const Field* F = m.field();
    if (!(m * m).is_identity()) return false;
    if (!(m.det() == -F->one())) return false;
    return m.trace() == F->from_rational(Rat(m.n() - 2));
}

FieldElement cartan(const Mat& a, const Mat& b) {
    if (!is_reflection(a) || !is_reflection(b))
        throw ConstructionError("cartan: arguments must be reflections");
    const Field* F = a.field();
    return (a * b).trace() - F->from_rational(Rat(a.n() - 4));
}

FieldElement cartan(const ReflectionRep& rep, const WordExpr::Ptr& w1, const WordExpr::Ptr& w2) {
    return cartan(rep.eval(w1), rep.eval(w2));
}

// ---------------------------------------------------------------- v polynomials

namespace {

// polynomials over Q, dense, low-to-high
using Poly = std::vector<Rat>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// exact division, remainder must vanish
Poly poly_div(const Poly& a, const Poly& b) {
    Poly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (r.size() >= b.size() && !(r.size() == 1 && r[0] == 0)) {
        size_t shift = r.size() - b.size();
        Rat f = r.back() / b.back();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        while (r.size() > 1 && r.back() == 0) r.pop_back();
        if (r.size() < b.size()) break;
    }
    for (const auto& c : r)
        if (c != 0) throw ConstructionError("poly_div: nonzero remainder");
    return q;
}

// n-th cyclotomic polynomial by the exact recursion (x^n - 1) / prod_{d|n, d<n} Phi_d
const Poly& cyclotomic(int n) {
    static std::map<int, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div(p, cyclotomic(d));
    return cache.emplace(n, std::move(p)).first->second;
}

// minimal polynomial psi_n of 2cos(2 pi / n), n >= 3: the unique monic poly of
// degree m = phi(n)/2 with x^m psi_n(x + 1/x) = Phi_n(x)
const Poly& psi(int n) {
    static std::map<int, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 3) throw ConstructionError("psi: n must be >= 3");
    Poly phi = cyclotomic(n);
    int m = ((int)phi.size() - 1) / 2;
    // B_j = x^m (x + 1/x)^j as a polynomial; solve triangularly from the top
    std::vector<Poly> B(m + 1);
    for (int j = 0; j <= m; ++j) {
        Poly b(m + j + 1, Rat(0));
        Rat binom(1);
        for (int i = 0; i <= j; ++i) {
            b[m + j - 2 * i] += binom;
            binom = binom * Rat(j - i) / Rat(i + 1);
        }
        B[j] = std::move(b);
    }
    Poly residual = phi;
    Poly out(m + 1, Rat(0));
    for (int j = m; j >= 0; --j) {
        Rat c = (size_t)(m + j) < residual.size() ? residual[m + j] : Rat(0);
        out[j] = c;
        if (c != 0)
            for (size_t k = 0; k < B[j].size(); ++k) residual[k] -= c * B[j][k];
    }
    for (const auto& c : residual)
        if (c != 0) throw ConstructionError("psi: reconstruction failed");
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<Rat> vn_polynomial(int n) {
    if (n < 3) throw ConstructionError("vn_polynomial: n must be >= 3");
    // 4cos^2(k pi / n) = 2 + 2cos(2 k pi / n): shift psi_n by 2
    Poly p = psi(n);
    // q(X) = p(X - 2)
    Poly q = {Rat(0)};
    Poly xm2 = {Rat(-2), Rat(1)};
    Poly power = {Rat(1)};
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0) {
            Poly t = power;
            for (auto& c : t) c *= p[i];
            if (t.size() > q.size()) q.resize(t.size(), Rat(0));
            for (size_t k = 0; k < t.size(); ++k) q[k] += t[k];
        }
        power = poly_mul(power, xm2);
    }
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    return q;
}

OrderClass classify_order(const FieldElement& c, int bound) {
    const Field* F = c.field();
    auto mp = F->min_poly(c);
    auto poly_str = [&](const std::vector<Rat>& p) {
        std::string s = "[";
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) s += ",";
            s += p[i].get_str();
        }
        return s + "]";
    };
    // special table endpoints
    if (mp.size() == 2) {
        Rat v = -mp[0];  // the rational value itself
        if (v == 0) return {OrderClass::Finite, 2, "C = 0"};
        if (v == 4) return {OrderClass::Infinite, 0, "C = 4: unipotent product"};
    }
    // conclusive bound: any finite order n has phi(n) <= 2 deg(K)
    int effective = std::max(bound, 4 * F->degree() + 60);
    for (int n = 3; n <= effective; ++n) {
        auto vn = vn_polynomial(n);
        if (vn.size() != mp.size()) continue;
        if (std::equal(vn.begin(), vn.end(), mp.begin()))
            return {OrderClass::Finite, n, "min poly = v_" + std::to_string(n)};
    }
    return {OrderClass::Infinite, 0,
            "min poly " + poly_str(mp) + " matches no v_n, n <= " + std::to_string(effective)};
}

// --------------------------------------------------------------- fixed vector

namespace {

// nullspace of a (rows x 3) system over the field; returns basis vectors
std::vector<std::vector<FieldElement>> nullspace3(const Field* F,
                                                  std::vector<std::vector<FieldElement>> rows) {
    int ncols = 3;
    int nrows = (int)rows.size();
    std::vector<int> pivot_of_col(ncols, -1);
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r)
            if (!rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        FieldElement d = rows[rank][col].inverse();
        for (int c = col; c < ncols; ++c) rows[rank][c] *= d;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col];
            for (int c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<std::vector<FieldElement>> basis;
    for (int col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<FieldElement> v(ncols, F->zero());
        v[col] = F->one();
        for (int c = 0; c < ncols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -rows[pivot_of_col[c]][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<FieldElement>> joint_fixed(const Field* F, const Mat* s, bool transposed) {
    std::vector<std::vector<FieldElement>> rows;
    for (int g = 0; g < 3; ++g)
        for (int i = 0; i < 3; ++i) {
            std::vector<FieldElement> row(3, F->zero());
            bool nz = false;
            for (int j = 0; j < 3; ++j) {
                FieldElement v = transposed ? s[g].at(j, i) : s[g].at(i, j);
                if (i == j) v = v - F->one();
                row[j] = v;
                nz = nz || !v.is_zero();
            }
            if (nz) rows.push_back(std::move(row));
        }
    return nullspace3(F, std::move(rows));
}

}  // namespace

std::optional<AffineData> fixed_vector(const ReflectionRep& rep) {
    const Field* F = rep.ps.F;
    for (int pass = 0; pass < 2; ++pass) {
        bool transposed = pass == 1;
        auto basis = joint_fixed(F, rep.s, transposed);
        if (basis.empty()) continue;
        if (basis.size() > 1)
            throw ConstructionError("fixed space has dimension > 1 (unexpected)");
        AffineData ad;
        ad.dual_swapped = transposed;
        ad.b = basis[0];
        // normalize: first nonzero coordinate = 1
        for (auto& bc : ad.b) {
            if (!bc.is_zero()) {
                FieldElement inv = bc.inverse();
                for (auto& x : ad.b) x *= inv;
                break;
            }
        }
        quotient_rep(rep, ad);
        return ad;
    }
    return std::nullopt;
}

void quotient_rep(const ReflectionRep& rep, AffineData& ad) {
    const Field* F = rep.ps.F;
    // pick the axis to eliminate: the first coordinate where b is nonzero
    int drop = -1;
    for (int i = 0; i < 3; ++i)
        if (!ad.b[i].is_zero()) {
            drop = i;
            break;
        }
    if (drop < 0) throw ConstructionError("quotient_rep: b is zero");
    ad.dropped_axis = drop;
    int keep[2], k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != drop) keep[k++] = i;
    // modulo b: a_drop = -(sum over kept j of b_j a_j) / b_drop
    FieldElement bd_inv = ad.b[drop].inverse();
    for (int g = 0; g < 3; ++g) {
        const Mat& S = ad.dual_swapped ? [&] {
            Mat t(F, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) t.at(i, j) = rep.s[g].at(j, i);
            return t;
        }() : rep.s[g];
        Mat q(F, 2);
        for (int cj = 0; cj < 2; ++cj) {
            int j = keep[cj];
            // image of a_j is column j; fold the a_drop component back in
            FieldElement folded = S.at(drop, j) * bd_inv;
            for (int ci = 0; ci < 2; ++ci) {
                int i = keep[ci];
                q.at(ci, cj) = S.at(i, j) - ad.b[i] * folded;
            }
        }
        ad.q[g] = q;
    }
}

ParamSystem regenerate(const ReflectionRep& rep, const WordExpr::Ptr& w1, const WordExpr::Ptr& w2,
                       const WordExpr::Ptr& w3) {
    const Field* F = rep.ps.F;
    Mat u1 = rep.eval(w1), u2 = rep.eval(w2), u3 = rep.eval(w3);
    for (const Mat* u : {&u1, &u2, &u3})
        if (!is_reflection(*u)) throw ConstructionError("regenerate: word is not a reflection");
    ParamSystem ps;
    ps.F = F;
    ps.alpha = cartan(u1, u2);
    ps.beta = cartan(u1, u3);
    ps.gamma = cartan(u2, u3);
    // C(u1, u2^u3) = alpha + beta gamma + S
    FieldElement S = cartan(u1, u3.inverse() * u2 * u3) - ps.alpha - ps.beta * ps.gamma;
    // trace(u1 u2 u3) = alpha + beta + gamma - 3 + beta * l
    FieldElement T =
        (u1 * u2 * u3).trace() + F->from_rational(3) - ps.alpha - ps.beta - ps.gamma;
    ps.l = T / ps.beta;
    ps.m = (S - T) / ps.alpha;
    if (!(ps.l * ps.m == ps.gamma))
        throw ConstructionError(
            "regenerate: extracted parameters fail l*m = gamma (triple is not "
            "construction-conjugate in this ordering)");
    return ps;
}

long order_2x2(const Mat& m, long bound) {
    Mat p = m;
    for (long k = 1; k <= bound; ++k) {
        if (p.is_identity()) return k;
        p = p * m;
    }
    return 0;
}

}  // namespace reflex
