#include "reflex/field.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace reflex {

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(const Field* f, std::vector<Rat> coords)
    : field_(f), coords_(std::move(coords)) {
    if ((int)coords_.size() != f->degree()) throw FieldError("coordinate length mismatch");
    for (auto& c : coords_) c.canonicalize();
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat FieldElement::rational_part() const { return coords_.empty() ? Rat(0) : coords_[0]; }

FieldElement FieldElement::operator+(const FieldElement& o) const { return field_->add(*this, o); }
FieldElement FieldElement::operator-(const FieldElement& o) const {
    return field_->add(*this, field_->neg(o));
}
FieldElement FieldElement::operator-() const { return field_->neg(*this); }
FieldElement FieldElement::operator*(const FieldElement& o) const { return field_->mul(*this, o); }
FieldElement FieldElement::operator/(const FieldElement& o) const {
    return field_->mul(*this, field_->inverse(o));
}

FieldElement FieldElement::operator*(const Rat& r) const {
    std::vector<Rat> c(coords_);
    for (auto& x : c) x *= r;
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = field_->one(), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FieldElement FieldElement::inverse() const { return field_->inverse(*this); }

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_) throw FieldError("comparing elements of different fields");
    return coords_ == o.coords_;
}

std::string FieldElement::str() const { return field_->render(*this); }

std::string FieldElement::key() const {
    std::string s;
    for (const auto& c : coords_) {
        s += c.get_str();
        s += ',';
    }
    return s;
}

// ----------------------------------------------------------------------- Field

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.gens.empty()) {
        // degenerate tower = Q itself
        dim_ = 1;
        strides_ = {};
        degs_ = {};
        build_tables();
        return;
    }
    dim_ = 1;
    for (const auto& g : spec_.gens) {
        if (g.minpoly.size() < 2) throw FieldError("minimal polynomial must have degree >= 1");
        if (g.minpoly.back() != 1) throw FieldError("minimal polynomial must be monic: " + g.name);
        int deg = (int)g.minpoly.size() - 1;
        degs_.push_back(deg);
        strides_.push_back(dim_);
        dim_ *= deg;
    }
    build_tables();
}

void Field::build_tables() {
    int ng = (int)degs_.size();
    // per-generator reduction rows: g^k for k in [deg, 2deg-2] expressed on 1..g^(deg-1)
    std::vector<std::vector<std::vector<Int>>> red(ng);
    for (int g = 0; g < ng; ++g) {
        int deg = degs_[g];
        std::vector<std::vector<Int>> rows;
        if (deg > 1) {
            std::vector<Int> cur(deg);
            for (int i = 0; i < deg; ++i) cur[i] = -Int(spec_.gens[g].minpoly[i]);
            rows.push_back(cur);  // g^deg
            for (int k = deg + 1; k <= 2 * deg - 2; ++k) {
                std::vector<Int> nxt(deg, 0);
                // multiply previous row by g
                for (int i = 0; i + 1 < deg; ++i) nxt[i + 1] = cur[i];
                if (cur[deg - 1] != 0)
                    for (int i = 0; i < deg; ++i) nxt[i] += cur[deg - 1] * rows[0][i];
                rows.push_back(nxt);
                cur = nxt;
            }
        } else {
            // degree-1 generator: g = -c0, a constant; exponent is always 0
            rows.push_back({-Int(spec_.gens[g].minpoly[0])});
        }
        red[g] = std::move(rows);
    }

    auto exps_of = [&](int idx) {
        std::vector<int> e(ng);
        for (int g = 0; g < ng; ++g) e[g] = (idx / strides_[g]) % degs_[g];
        return e;
    };

    basis_mul_.assign((size_t)dim_ * dim_, {});
    for (int i = 0; i < dim_; ++i) {
        auto ei = exps_of(i);
        for (int j = 0; j < dim_; ++j) {
            auto ej = exps_of(j);
            // start with the unreduced exponent sum, then reduce one variable at a time
            std::map<int, Int> acc;  // index -> coeff, exponents always in range once reduced
            // seed: list of (exps, coeff)
            std::vector<std::pair<std::vector<int>, Int>> work;
            std::vector<int> es(ng);
            for (int g = 0; g < ng; ++g) es[g] = ei[g] + ej[g];
            work.push_back({es, Int(1)});
            for (int g = 0; g < ng; ++g) {
                std::vector<std::pair<std::vector<int>, Int>> nxt;
                for (auto& [e, c] : work) {
                    if (e[g] < degs_[g]) {
                        nxt.push_back({e, c});
                        continue;
                    }
                    const auto& row = red[g][e[g] - degs_[g]];
                    for (int t = 0; t < (int)row.size(); ++t) {
                        if (row[t] == 0) continue;
                        auto e2 = e;
                        e2[g] = t;
                        nxt.push_back({e2, c * row[t]});
                    }
                }
                work = std::move(nxt);
            }
            for (auto& [e, c] : work) {
                int idx = 0;
                for (int g = 0; g < ng; ++g) idx += e[g] * strides_[g];
                acc[idx] += c;
            }
            auto& out = basis_mul_[(size_t)i * dim_ + j];
            for (auto& [idx, c] : acc)
                if (c != 0) out.push_back({idx, c});
        }
    }
}

FieldElement Field::zero() const { return FieldElement(this, std::vector<Rat>(dim_, Rat(0))); }
FieldElement Field::one() const { return from_rational(Rat(1)); }

FieldElement Field::from_rational(const Rat& r) const {
    std::vector<Rat> c(dim_, Rat(0));
    c[0] = r;
    return FieldElement(this, std::move(c));
}

FieldElement Field::gen(int i) const {
    if (i < 0 || i >= num_gens()) throw FieldError("generator index out of range");
    std::vector<Rat> c(dim_, Rat(0));
    if (degs_[i] == 1) {
        // constant generator, value -c0
        c[0] = Rat(-spec_.gens[i].minpoly[0]);
    } else {
        c[strides_[i]] = 1;
    }
    return FieldElement(this, std::move(c));
}

FieldElement Field::gen(const std::string& name) const {
    for (int i = 0; i < num_gens(); ++i)
        if (spec_.gens[i].name == name) return gen(i);
    throw FieldError("no generator named " + name);
}

FieldElement Field::make(std::vector<Rat> coords) const {
    return FieldElement(this, std::move(coords));
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    if (a.field_ != this || b.field_ != this) throw FieldError("field mismatch in add");
    std::vector<Rat> c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = a.coords_[i] + b.coords_[i];
    return FieldElement(this, std::move(c));
}

FieldElement Field::neg(const FieldElement& a) const {
    std::vector<Rat> c(dim_);
    for (int i = 0; i < dim_; ++i) c[i] = -a.coords_[i];
    return FieldElement(this, std::move(c));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    if (a.field_ != this || b.field_ != this) throw FieldError("field mismatch in mul");
    std::vector<Rat> c(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (a.coords_[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b.coords_[j] == 0) continue;
            Rat prod = a.coords_[i] * b.coords_[j];
            for (const auto& [idx, coef] : basis_mul_[(size_t)i * dim_ + j]) c[idx] += prod * coef;
        }
    }
    return FieldElement(this, std::move(c));
}

std::vector<std::vector<Rat>> Field::mult_matrix(const FieldElement& a) const {
    std::vector<std::vector<Rat>> m(dim_, std::vector<Rat>(dim_, Rat(0)));
    for (int j = 0; j < dim_; ++j) {
        // a * basis_j
        for (int i = 0; i < dim_; ++i) {
            if (a.coords_[i] == 0) continue;
            for (const auto& [idx, coef] : basis_mul_[(size_t)i * dim_ + j])
                m[idx][j] += a.coords_[i] * coef;
        }
    }
    return m;
}

FieldElement Field::inverse(const FieldElement& a) const {
    if (a.is_zero()) throw DivisionError("inverse of zero");
    // solve (mult-by-a) x = e0
    auto m = mult_matrix(a);
    std::vector<Rat> rhs(dim_, Rat(0));
    rhs[0] = 1;
    int n = dim_;
    for (int col = 0, row = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        Rat d = m[row][col];
        for (int c = col; c < n; ++c) m[row][c] /= d;
        rhs[row] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[row][c];
            rhs[r] -= f * rhs[row];
        }
        ++row;
    }
    // check consistency; a singular multiplication matrix on a nonzero element
    // means some tensor factor is reducible
    std::vector<Rat> x(n, Rat(0));
    for (int col = 0; col < n; ++col) {
        int prow = -1;
        for (int r = 0; r < n; ++r)
            if (m[r][col] == 1) {
                bool pivot = true;
                for (int c = 0; c < col; ++c)
                    if (m[r][c] != 0) pivot = false;
                if (pivot) {
                    prow = r;
                    break;
                }
            }
        if (prow >= 0) x[col] = rhs[prow];
    }
    FieldElement cand(this, x);
    if (!(mul(cand, a) == one()))
        throw ZeroDivisorError(
            "nonzero element has no inverse; a tensor factor of the tower is reducible "
            "(configuration error), element = " +
            render(a));
    return cand;
}

Rat Field::norm(const FieldElement& a) const {
    auto m = mult_matrix(a);
    // Gaussian determinant
    Rat det(1);
    int n = dim_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat d = m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / d;
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

Rat Field::trace(const FieldElement& a) const {
    auto m = mult_matrix(a);
    Rat t(0);
    for (int i = 0; i < dim_; ++i) t += m[i][i];
    return t;
}

std::vector<Rat> Field::min_poly(const FieldElement& a) const {
    // powers of a until linearly dependent; solve for the monic relation
    std::vector<std::vector<Rat>> pows;
    FieldElement p = one();
    for (int k = 0; k <= dim_; ++k) {
        pows.push_back(p.coords());
        // try to express pows[k] in terms of pows[0..k-1]
        int rows = dim_, cols = k;
        std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) m[r][c] = pows[c][r];
            m[r][cols] = pows[k][r];
        }
        // gaussian solve
        std::vector<int> pivcol(cols, -1);
        int row = 0;
        for (int col = 0; col < cols && row < rows; ++col) {
            int piv = -1;
            for (int r = row; r < rows; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(m[piv], m[row]);
            Rat d = m[row][col];
            for (int c = col; c <= cols; ++c) m[row][c] /= d;
            for (int r = 0; r < rows; ++r) {
                if (r == row || m[r][col] == 0) continue;
                Rat f = m[r][col];
                for (int c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
            }
            pivcol[col] = row;
            ++row;
        }
        bool consistent = true;
        for (int r = row; r < rows; ++r)
            if (m[r][cols] != 0) consistent = false;
        if (consistent && k > 0) {
            std::vector<Rat> poly(k + 1, Rat(0));
            poly[k] = 1;
            for (int c = 0; c < cols; ++c)
                if (pivcol[c] >= 0) poly[c] = -m[pivcol[c]][cols];
            return poly;
        }
        p = mul(p, a);
    }
    throw FieldError("min_poly: no relation found (internal error)");
}

std::string Field::describe_basis(int idx) const {
    if (idx == 0) return "1";
    std::string s;
    for (int g = 0; g < num_gens(); ++g) {
        int e = (idx / strides_[g]) % degs_[g];
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += spec_.gens[g].name;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string Field::render(const FieldElement& a) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim_; ++i) {
        const Rat& c = a.coords_[i];
        if (c == 0) continue;
        Rat ab = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || ab != 1) {
            os << ab.get_str();
            if (i != 0) os << "*";
        }
        if (i != 0) os << describe_basis(i);
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- Automorphism

Automorphism::Automorphism(const Field* f, std::vector<FieldElement> gen_images)
    : field_(f), images_(std::move(gen_images)) {
    if ((int)images_.size() != f->num_gens())
        throw FieldError("automorphism needs one image per generator");
    // each image must satisfy its generator's minimal polynomial
    for (int g = 0; g < f->num_gens(); ++g) {
        const auto& mp = f->spec().gens[g].minpoly;
        FieldElement acc = f->zero(), p = f->one();
        for (long c : mp) {
            acc += p * Rat(c);
            p = p * images_[g];
        }
        if (!acc.is_zero())
            throw FieldError("automorphism image of " + f->spec().gens[g].name +
                             " does not satisfy its minimal polynomial");
    }
    // basis images
    basis_images_.reserve(f->degree());
    for (int idx = 0; idx < f->degree(); ++idx) {
        FieldElement v = f->one();
        for (int g = 0; g < f->num_gens(); ++g) {
            int deg = (int)f->spec().gens[g].minpoly.size() - 1;
            int stride = idx;
            for (int h = 0; h < g; ++h) stride /= (int)f->spec().gens[h].minpoly.size() - 1;
            int e = stride % deg;
            for (int k = 0; k < e; ++k) v = v * images_[g];
        }
        basis_images_.push_back(v);
    }
    // verified multiplicative on all basis pairs
    for (int i = 0; i < f->degree(); ++i)
        for (int j = 0; j < f->degree(); ++j) {
            FieldElement lhs = apply(f->mul(f->make([&] {
                                                std::vector<Rat> c(f->degree(), Rat(0));
                                                c[i] = 1;
                                                return c;
                                            }()),
                                            f->make([&] {
                                                std::vector<Rat> c(f->degree(), Rat(0));
                                                c[j] = 1;
                                                return c;
                                            }())));
            FieldElement rhs = basis_images_[i] * basis_images_[j];
            if (!(lhs == rhs)) throw FieldError("automorphism is not multiplicative");
        }
}

FieldElement Automorphism::apply(const FieldElement& x) const {
    FieldElement acc = field_->zero();
    for (int i = 0; i < field_->degree(); ++i)
        if (x.coords()[i] != 0) acc += basis_images_[i] * x.coords()[i];
    return acc;
}

// --------------------------------------------------------------- IntegralBasis

static std::vector<std::vector<Rat>> invert_matrix(std::vector<std::vector<Rat>> m) {
    int n = (int)m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw FieldError("integral basis is not a Q-basis");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (int c = 0; c < n; ++c) {
            m[col][c] /= d;
            inv[col][c] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

IntegralBasis::IntegralBasis(const Field* f, std::vector<FieldElement> basis)
    : field_(f), basis_(std::move(basis)) {
    if ((int)basis_.size() != f->degree())
        throw FieldError("integral basis must have deg(K) elements");
    std::vector<std::vector<Rat>> m(f->degree(), std::vector<Rat>(f->degree()));
    for (int j = 0; j < f->degree(); ++j)
        for (int i = 0; i < f->degree(); ++i) m[i][j] = basis_[j].coords()[i];
    inv_ = invert_matrix(std::move(m));
    if (!contains(f->one())) throw FieldError("integral basis does not contain 1");
    for (const auto& a : basis_)
        for (const auto& b : basis_)
            if (!contains(a * b))
                throw FieldError("integral basis is not multiplicatively closed: " + a.str() +
                                 " * " + b.str());
}

std::vector<Rat> IntegralBasis::coordinates(const FieldElement& x) const {
    std::vector<Rat> out(field_->degree(), Rat(0));
    for (int i = 0; i < field_->degree(); ++i) {
        for (int j = 0; j < field_->degree(); ++j)
            if (x.coords()[j] != 0) out[i] += inv_[i][j] * x.coords()[j];
    }
    return out;
}

bool IntegralBasis::contains(const FieldElement& x) const {
    for (const auto& c : coordinates(x))
        if (c.get_den() != 1) return false;
    return true;
}

IntegralBasis IntegralBasis::monomial(const Field* f) {
    std::vector<FieldElement> b;
    for (int i = 0; i < f->degree(); ++i) {
        std::vector<Rat> c(f->degree(), Rat(0));
        c[i] = 1;
        b.push_back(f->make(std::move(c)));
    }
    return IntegralBasis(f, std::move(b));
}

bool is_integral(const IntegralBasis& O, const FieldElement& x) { return O.contains(x); }

bool divides(const FieldElement& d, const FieldElement& x, const IntegralBasis& O) {
    if (d.is_zero()) throw DivisionError("divides: divisor is zero");
    return O.contains(x / d);
}

// ----------------------------------------------------------------- IdealHandle

// row-style HNF over Z; shared with the lattice module via this local helper
// (the lattice module has its own richer version; this one is self-contained)
static std::vector<std::vector<Int>> hnf_rows_local(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) return rows;
    size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        // euclidean elimination in column c over rows r..end
        while (true) {
            int piv = -1;
            for (size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0) {
                    if (piv < 0 || cmp(abs(rows[i][c]), abs(rows[piv][c])) < 0) piv = (int)i;
                }
            if (piv < 0) break;
            std::swap(rows[r], rows[(size_t)piv]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[r][c];  // truncated division is fine for descent
                if (q != 0)
                    for (size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[r][k];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (size_t k = 0; k < cols; ++k) rows[r][k] = -rows[r][k];
            // reduce entries above
            for (size_t i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                if (q != 0)
                    for (size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[r][k];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

IdealHandle::IdealHandle(const IntegralBasis* O, std::vector<FieldElement> gens)
    : order_(O), gens_(std::move(gens)) {
    const Field* f = O->field();
    int d = f->degree();
    std::vector<std::vector<Int>> rows;
    for (const auto& g : gens_) {
        if (!O->contains(g)) throw FieldError("ideal generator is not integral: " + g.str());
        for (int k = 0; k < d; ++k) {
            FieldElement prod = O->basis()[k] * g;
            auto co = O->coordinates(prod);
            std::vector<Int> row(d);
            for (int i = 0; i < d; ++i) {
                if (co[i].get_den() != 1) throw FieldError("ideal lattice row not integral");
                row[i] = co[i].get_num();
            }
            rows.push_back(std::move(row));
        }
    }
    hnf_ = hnf_rows_local(std::move(rows));
}

bool IdealHandle::contains(const FieldElement& x) const {
    if (!order_->contains(x)) throw FieldError("ideal membership asked for non-integral element");
    auto co = order_->coordinates(x);
    int d = order_->field()->degree();
    std::vector<Int> v(d);
    for (int i = 0; i < d; ++i) v[i] = co[i].get_num();
    // reduce v against the HNF rows
    for (const auto& row : hnf_) {
        int p = -1;
        for (int i = 0; i < d; ++i)
            if (row[i] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (v[p] == 0) continue;
        if (v[p] % row[p] != 0) return false;
        Int q = v[p] / row[p];
        for (int i = 0; i < d; ++i) v[i] -= q * row[i];
    }
    for (int i = 0; i < d; ++i)
        if (v[i] != 0) return false;
    return true;
}

// ----------------------------------------------------------------- expr parser

namespace {

struct ExprParser {
    const Field* f;
    const std::map<std::string, FieldElement>& env;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw FieldError("parse error at position " + std::to_string(pos) + " in \"" + s +
                         "\": " + msg);
    }

    FieldElement parse() {
        FieldElement v = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return v;
    }

    FieldElement expr() {
        FieldElement v = term();
        while (true) {
            skip();
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    FieldElement term() {
        FieldElement v = factor();
        while (true) {
            skip();
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }

    FieldElement factor() {
        skip();
        if (eat('-')) return -factor();
        FieldElement v = base();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            if (pos >= s.size() || !isdigit((unsigned char)s[pos])) fail("expected exponent");
            long e = 0;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) e = e * 10 + (s[pos++] - '0');
            v = v.pow(neg ? -e : e);
        }
        return v;
    }

    FieldElement base() {
        skip();
        if (eat('(')) {
            FieldElement v = expr();
            if (!eat(')')) fail("expected )");
            return v;
        }
        if (pos < s.size() && isdigit((unsigned char)s[pos])) {
            std::string num;
            while (pos < s.size() && isdigit((unsigned char)s[pos])) num += s[pos++];
            return f->from_rational(Rat(num));
        }
        if (pos < s.size() && (isalpha((unsigned char)s[pos]) || s[pos] == '_')) {
            std::string name;
            while (pos < s.size() &&
                   (isalnum((unsigned char)s[pos]) || s[pos] == '_'))
                name += s[pos++];
            auto it = env.find(name);
            if (it != env.end()) return it->second;
            for (int i = 0; i < f->num_gens(); ++i)
                if (f->spec().gens[i].name == name) return f->gen(i);
            fail("unknown name " + name);
        }
        fail("expected value");
    }
};

}  // namespace

FieldElement parse_element(const Field* f, const std::string& text,
                           const std::map<std::string, FieldElement>& env) {
    ExprParser p{f, env, text};
    return p.parse();
}

}  // namespace reflex
