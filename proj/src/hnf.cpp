#include "reflex/hnf.hpp"

#include <algorithm>
#include <stdexcept>

namespace reflex {

IntMat hnf_rows(IntMat rows) {
    if (rows.empty()) return rows;
    size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw std::runtime_error("hnf_rows: ragged matrix");
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
        // gcd-descent elimination in column c
        while (true) {
            int piv = -1;
            for (size_t i = rank; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (piv < 0 || cmp(abs(rows[i][c]), abs(rows[(size_t)piv][c])) < 0))
                    piv = (int)i;
            if (piv < 0) break;
            std::swap(rows[rank], rows[(size_t)piv]);
            bool clean = true;
            for (size_t i = rank + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                mpz_class q = rows[i][c] / rows[rank][c];
                if (q != 0)
                    for (size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[rank][k];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[rank][c] != 0) {
            if (rows[rank][c] < 0)
                for (size_t k = 0; k < cols; ++k) rows[rank][k] = -rows[rank][k];
            for (size_t i = 0; i < rank; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[rank][c].get_mpz_t());
                if (q != 0)
                    for (size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[rank][k];
            }
            ++rank;
        }
    }
    rows.resize(rank);
    return rows;
}

bool hnf_member(const IntMat& hnf, IntRow v) {
    for (const auto& row : hnf) {
        size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        if (v[p] == 0) continue;
        if (v[p] % row[p] != 0) return false;
        mpz_class q = v[p] / row[p];
        for (size_t k = 0; k < row.size(); ++k) v[k] -= q * row[k];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntMat preimage_lattice(const IntMat& A, const IntMat& L) {
    size_t k = A.size();
    size_t w = k ? A[0].size() : (L.empty() ? 0 : L[0].size());
    // rows (A_i | e_i) and (L_j | 0); in the HNF the rows with zero left part
    // span exactly the solutions
    IntMat m;
    for (size_t i = 0; i < k; ++i) {
        IntRow r = A[i];
        r.resize(w + k, 0);
        r[w + i] = 1;
        m.push_back(std::move(r));
    }
    for (const auto& l : L) {
        IntRow r = l;
        r.resize(w + k, 0);
        m.push_back(std::move(r));
    }
    IntMat h = hnf_rows(std::move(m));
    IntMat out;
    for (const auto& r : h) {
        bool leftzero = true;
        for (size_t c = 0; c < w; ++c)
            if (r[c] != 0) leftzero = false;
        if (!leftzero) continue;
        IntRow x(r.begin() + w, r.end());
        bool nz = false;
        for (const auto& v : x) nz = nz || v != 0;
        if (nz) out.push_back(std::move(x));
    }
    return hnf_rows(std::move(out));
}

}  // namespace reflex
