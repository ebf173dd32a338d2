#pragma once

// Finite matrix-group machinery: BFS closure over exact canonical keys,
// element orders, center, derived subgroup and structural fingerprints.

#include <set>

#include "reflex/qmat.hpp"

namespace reflex {

struct ClosureOverflow : std::runtime_error {
    explicit ClosureOverflow(const std::string& m) : std::runtime_error(m) {}
};

struct GroupFingerprint {
    long order = 0;
    std::map<long, long> order_multiset;  // element order -> count
    long center_order = 0;
    std::vector<long> abelian_invariants;  // invariant factors of G/[G,G], ascending

    bool operator==(const GroupFingerprint& o) const {
        return order == o.order && order_multiset == o.order_multiset &&
               center_order == o.center_order && abelian_invariants == o.abelian_invariants;
    }
    std::string str() const;
};

class GroupClosure {
public:
    // BFS closure of the generators; throws ClosureOverflow past `cap`
    GroupClosure(std::vector<Mat> gens, long cap = 1000000);

    long order() const { return (long)elems_.size(); }
    const std::vector<Mat>& elements() const { return elems_; }
    const std::vector<Mat>& generators() const { return gens_; }

    bool contains(const Mat& m) const;
    int index_of(const Mat& m) const;  // -1 if absent

    // subgroups come back as sorted element-index sets
    std::vector<int> center() const;
    std::vector<int> derived_subgroup() const;

    // subgroup generated by the given elements (must lie in the group)
    std::vector<int> subgroup(const std::vector<Mat>& gens) const;

    // order of the quotient by a *central* subgroup (index count of cosets)
    long quotient_order(const std::vector<int>& subgroup) const;

    GroupFingerprint fingerprint() const;

private:
    std::vector<Mat> gens_;
    std::vector<Mat> elems_;
    std::map<std::string, int> index_;
    mutable std::vector<int> inverse_;  // element index -> inverse index

    int mul(int a, int b) const;  // multiplication on indices
    int inv(int a) const;
    mutable std::vector<std::vector<int>> mul_table_;  // lazy rows
    void ensure_tables() const;
};

// least n <= cap with m^n = I; 0 signals overflow
long element_order(const Mat& m, long cap = 1000);

}  // namespace reflex
