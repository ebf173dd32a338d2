#include "reflex/closure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace reflex {

long element_order(const Mat& m, long cap) { return matrix_order(m, cap); }

GroupClosure::GroupClosure(std::vector<Mat> gens, long cap) : gens_(std::move(gens)) {
    if (gens_.empty()) throw std::runtime_error("closure needs at least one generator");
    const Field* F = gens_[0].field();
    Mat id = Mat::identity(F, gens_[0].n());
    elems_.push_back(id);
    index_[id.key()] = 0;
    std::vector<int> frontier = {0};
    // make sure the generators themselves are present even if equal to identity
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int ei : frontier) {
            for (const Mat& g : gens_) {
                Mat p = elems_[ei] * g;
                std::string k = p.key();
                auto it = index_.find(k);
                if (it != index_.end()) continue;
                if ((long)elems_.size() >= cap)
                    throw ClosureOverflow("closure exceeded cap " + std::to_string(cap));
                int idx = (int)elems_.size();
                elems_.push_back(std::move(p));
                index_.emplace(std::move(k), idx);
                next.push_back(idx);
            }
        }
        frontier = std::move(next);
    }
}

bool GroupClosure::contains(const Mat& m) const { return index_.count(m.key()) > 0; }

int GroupClosure::index_of(const Mat& m) const {
    auto it = index_.find(m.key());
    return it == index_.end() ? -1 : it->second;
}

void GroupClosure::ensure_tables() const {
    if (!mul_table_.empty()) return;
    size_t n = elems_.size();
    mul_table_.assign(n, {});
    inverse_.assign(n, -1);
    for (size_t a = 0; a < n; ++a) {
        mul_table_[a].resize(n);
        for (size_t b = 0; b < n; ++b) {
            Mat p = elems_[a] * elems_[b];
            auto it = index_.find(p.key());
            if (it == index_.end()) throw std::runtime_error("closure not closed (internal)");
            mul_table_[a][b] = it->second;
            if (p.is_identity()) inverse_[a] = (int)b;
        }
    }
}

int GroupClosure::mul(int a, int b) const {
    ensure_tables();
    return mul_table_[a][b];
}

int GroupClosure::inv(int a) const {
    ensure_tables();
    return inverse_[a];
}

std::vector<int> GroupClosure::center() const {
    ensure_tables();
    std::vector<int> gi;
    for (const Mat& g : gens_) gi.push_back(index_of(g));
    std::vector<int> out;
    for (int e = 0; e < (int)elems_.size(); ++e) {
        bool central = true;
        for (int g : gi)
            if (mul(e, g) != mul(g, e)) {
                central = false;
                break;
            }
        if (central) out.push_back(e);
    }
    return out;
}

std::vector<int> GroupClosure::subgroup(const std::vector<Mat>& sg) const {
    ensure_tables();
    std::set<int> have = {0};
    std::vector<int> gi, frontier = {0};
    for (const Mat& g : sg) {
        int i = index_of(g);
        if (i < 0) throw std::runtime_error("subgroup generator not in group");
        gi.push_back(i);
    }
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int e : frontier)
            for (int g : gi) {
                int p = mul(e, g);
                if (have.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return std::vector<int>(have.begin(), have.end());
}

std::vector<int> GroupClosure::derived_subgroup() const {
    ensure_tables();
    // normal closure of the commutators of generator pairs
    std::vector<int> gi;
    for (const Mat& g : gens_) gi.push_back(index_of(g));
    std::set<int> have = {0};
    std::vector<int> frontier;
    auto push = [&](int x) {
        if (have.insert(x).second) frontier.push_back(x);
    };
    for (int a : gi)
        for (int b : gi) push(mul(mul(inv(a), inv(b)), mul(a, b)));
    while (!frontier.empty()) {
        std::vector<int> work = std::move(frontier);
        frontier.clear();
        for (int e : work) {
            for (int x : std::vector<int>(have.begin(), have.end())) push(mul(e, x));
            for (int g : gi) push(mul(mul(inv(g), e), g));
        }
    }
    return std::vector<int>(have.begin(), have.end());
}

long GroupClosure::quotient_order(const std::vector<int>& sub) const {
    ensure_tables();
    std::set<int> subset(sub.begin(), sub.end());
    std::set<int> seen;
    long cosets = 0;
    for (int e = 0; e < (int)elems_.size(); ++e) {
        if (seen.count(e)) continue;
        ++cosets;
        for (int h : sub) seen.insert(mul(e, h));
    }
    return cosets;
}

GroupFingerprint GroupClosure::fingerprint() const {
    ensure_tables();
    GroupFingerprint fp;
    fp.order = order();
    for (int e = 0; e < (int)elems_.size(); ++e) {
        long o = 1;
        int p = e;
        while (p != 0) {
            p = mul(p, e);
            ++o;
        }
        fp.order_multiset[o]++;
    }
    fp.center_order = (long)center().size();
    // abelianization: quotient by the derived subgroup; invariant factors from
    // the p-power order counts (enough to pin an abelian group)
    auto D = derived_subgroup();
    std::set<int> dset(D.begin(), D.end());
    // coset representatives
    std::map<int, int> coset_of;  // element -> coset id
    std::vector<int> reps;
    for (int e = 0; e < (int)elems_.size(); ++e) {
        if (coset_of.count(e)) continue;
        int id = (int)reps.size();
        reps.push_back(e);
        for (int h : D) coset_of[mul(e, h)] = id;
    }
    long n = (long)reps.size();
    int idcoset = coset_of[0];
    auto coset_mul = [&](int a, int b) { return coset_of[mul(reps[a], reps[b])]; };
    std::vector<long> corder(n, 0);
    for (int c = 0; c < n; ++c) {
        long o = 1;
        int p = c;
        while (p != idcoset) {
            p = coset_mul(p, c);
            ++o;
            if (o > n + 1) throw std::runtime_error("quotient order runaway");
        }
        corder[c] = o;
    }
    // abelian quotient: per prime, the counts of elements whose p-part order
    // divides p^k determine the partition, hence the invariant factors
    long nn = n;
    std::vector<long> primes;
    for (long p = 2; p * p <= nn; ++p)
        if (nn % p == 0) {
            primes.push_back(p);
            while (nn % p == 0) nn /= p;
        }
    if (nn > 1) primes.push_back(nn);
    std::map<long, std::vector<long>> ppart;  // prime -> cyclic-factor exponents, descending
    for (long p : primes) {
        long cofactor = n;
        while (cofactor % p == 0) cofactor /= p;
        std::vector<long> cum;  // within the Sylow subgroup: #elems of order <= p^k
        long pk = 1;
        while (true) {
            long cnt = 0;
            for (int c = 0; c < n; ++c) {
                long oc = corder[c], pc = 1;
                while (oc % p == 0) {
                    oc /= p;
                    pc *= p;
                }
                if (pc <= pk) ++cnt;
            }
            cum.push_back(cnt / cofactor);
            if (cnt == n) break;
            pk *= p;
            if (cum.size() > 64) throw std::runtime_error("abelian invariant runaway");
        }
        std::vector<long> exps;
        // number of cyclic factors with exponent >= k is log_p(cum[k]/cum[k-1])
        std::vector<long> atleast;
        for (size_t k = 1; k < cum.size(); ++k) {
            long ratio = cum[k] / cum[k - 1], cnt = 0;
            while (ratio > 1) {
                ratio /= p;
                ++cnt;
            }
            atleast.push_back(cnt);
        }
        for (size_t k = 0; k < atleast.size(); ++k) {
            long here = atleast[k] - (k + 1 < atleast.size() ? atleast[k + 1] : 0);
            for (long t = 0; t < here; ++t) exps.push_back((long)k + 1);
        }
        std::sort(exps.rbegin(), exps.rend());
        ppart[p] = exps;
    }
    size_t maxlen = 0;
    for (auto& [p, exps] : ppart) maxlen = std::max(maxlen, exps.size());
    std::vector<long> inv(maxlen, 1);
    for (auto& [p, exps] : ppart)
        for (size_t i = 0; i < exps.size(); ++i) {
            long q = 1;
            for (long t = 0; t < exps[i]; ++t) q *= p;
            inv[i] *= q;
        }
    std::sort(inv.begin(), inv.end());
    fp.abelian_invariants = inv;
    return fp;
}

std::string GroupFingerprint::str() const {
    std::ostringstream os;
    os << "order=" << order << " orders={";
    bool first = true;
    for (auto& [o, c] : order_multiset) {
        if (!first) os << ",";
        first = false;
        os << o << ":" << c;
    }
    os << "} center=" << center_order << " ab=[";
    for (size_t i = 0; i < abelian_invariants.size(); ++i) {
        if (i) os << ",";
        os << abelian_invariants[i];
    }
    os << "]";
    return os.str();
}

}  // namespace reflex
