#include "reflex/catalog.hpp"

// Section-4 A forms over Q(sqrt(eps sqrt2)), both square-root designations of
// the abstract root of X^4 - 2. The +/- twins are exchanged by the order-8
// Galois twist r -> i r over the composite tower.

namespace reflex::catalog_data {

const char* family_s4a = R"JSON(
{
  "family": "S4A",
  "entries": [
    {
      "id": "S4A.A1p",
      "triple": [3, 3, 8],
      "field": [["w", [-2, 0, 0, 0, 1]]],
      "defs": [["sqrt2", "w^2"], ["el", "sqrt2+w"], ["em", "sqrt2-w"]],
      "alpha": "1", "beta": "1", "gamma": "2-sqrt2",
      "alpha_l": "em", "beta_m": "el",
      "vpoly": {"alpha": 3, "beta": 3, "gamma": 8},
      "cdefs": [
        ["c1", {"word": "(s1 (s2 s3)^4)^2", "scale": "-(4-gamma)/2"}],
        ["c2", {"rel": "act(s2, c1) - c1"}],
        ["c3", {"rel": "act(s3, c1) - c1"}]
      ],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 11", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,1,2-sqrt2; sqrt2+w, sqrt2-w)", "paper_ref": "Prop 11", "tag": "PAPER",
         "identities": ["el*em = gamma", "el+em = 2*sqrt2"]},
        {"kind": "cartan_value", "label": "C(s1, s2(s2s3)^4) = 4 - alpha = 3", "paper_ref": "Prop 11", "tag": "PAPER",
         "w1": "s1", "w2": "s2 (s2 s3)^4", "expected": "3"},
        {"kind": "regeneration", "label": "regenerates the (6,6,8) system", "paper_ref": "Prop 11", "tag": "DERIVED",
         "words": ["s1", "s2 (s2 s3)^4", "s3 (s2 s3)^4"],
         "alpha": "3", "beta": "3", "gamma": "2-sqrt2",
         "mixed_pair": ["-4+sqrt2+w", "-4+sqrt2-w"], "delta_zero": true},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 3+sqrt2 certifies G' infinite",
         "paper_ref": "Prop 11", "tag": "PAPER", "w1": "s1", "w2": "s2^s3", "expected_c": "3+sqrt2"},
        {"kind": "word_order", "label": "s1 s2^s3 has infinite order", "paper_ref": "Prop 11", "tag": "PAPER",
         "space": "rep", "word": "s1 s2^s3", "order": "infinite"},
        {"kind": "galois_twin", "label": "theta twists A1+ onto A1-", "paper_ref": "§4.2", "tag": "PAPER",
         "other": "S4A.A1m",
         "tower": [["r", [-2, 0, 0, 0, 1]], ["i", [1, 0, 1]]],
         "defs_self": [["w", "r"], ["sqrt2", "r^2"]],
         "defs_other": [["w", "i*r"], ["sqrt2", "r^2"]],
         "theta": ["i*r", "i"]},
        {"kind": "split_obstruction", "label": "non-split: 2^(1/4) divides every term of (E)", "paper_ref": "Prop 11", "tag": "PAPER",
         "mode": "ideal", "pi": "w",
         "coeffs": ["4-gamma", "el+2", "em+2"], "cs": ["c1", "c2", "c3"]}
      ]
    },
    {
      "id": "S4A.A1m",
      "triple": [3, 3, 8],
      "field": [["w", [-2, 0, 0, 0, 1]]],
      "defs": [["sqrt2", "-(w^2)"], ["el", "-sqrt2+w"], ["em", "-sqrt2-w"]],
      "alpha": "1", "beta": "1", "gamma": "2+sqrt2",
      "alpha_l": "em", "beta_m": "el",
      "vpoly": {"alpha": 3, "beta": 3, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 11", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,1,2+sqrt2; -sqrt2+w, -sqrt2-w)", "paper_ref": "Prop 11", "tag": "PAPER",
         "identities": ["el*em = gamma", "el+em = -2*sqrt2"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 3-sqrt2 certifies G' infinite",
         "paper_ref": "Prop 11", "tag": "PAPER", "w1": "s1", "w2": "s2^s3", "expected_c": "3-sqrt2"}
      ]
    },
    {
      "id": "S4A.A2p",
      "triple": [3, 6, 8],
      "field": [["w", [-2, 0, 0, 0, 1]]],
      "defs": [["sqrt2", "w^2"]],
      "alpha": "1", "beta": "3", "gamma": "2+sqrt2",
      "alpha_l": "-2-sqrt2+w", "beta_m": "-2-sqrt2-w",
      "vpoly": {"alpha": 3, "beta": 6, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 11", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,3,2+sqrt2; -2-sqrt2+w, -2-sqrt2-w)", "paper_ref": "Prop 11", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 3+sqrt2 certifies G' infinite",
         "paper_ref": "Prop 11", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "3+sqrt2"}
      ]
    },
    {
      "id": "S4A.A2m",
      "triple": [3, 6, 8],
      "field": [["w", [-2, 0, 0, 0, 1]]],
      "defs": [["sqrt2", "-(w^2)"]],
      "alpha": "1", "beta": "3", "gamma": "2-sqrt2",
      "alpha_l": "-2+sqrt2+w", "beta_m": "-2+sqrt2-w",
      "vpoly": {"alpha": 3, "beta": 6, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 11", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,3,2-sqrt2; -2+sqrt2+w, -2+sqrt2-w)", "paper_ref": "Prop 11", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 3-sqrt2 certifies G' infinite",
         "paper_ref": "Prop 11", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "3-sqrt2"}
      ]
    },
    {
      "id": "S4A.A3p",
      "triple": [6, 6, 8],
      "field": [["w", [-2, 0, 0, 0, 1]]],
      "defs": [["sqrt2", "w^2"], ["el", "(-4+sqrt2+w)/3"], ["em", "(-4+sqrt2-w)/3"]],
      "alpha": "3", "beta": "3", "gamma": "2-sqrt2",
      "alpha_l": "-4+sqrt2-w", "beta_m": "-4+sqrt2+w",
      "vpoly": {"alpha": 6, "beta": 6, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 11", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(3,3,2-sqrt2; -4+sqrt2+w, -4+sqrt2-w)", "paper_ref": "Prop 11", "tag": "PAPER",
         "identities": ["el*em = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 1-sqrt2 certifies G' infinite",
         "paper_ref": "Prop 11", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "1-sqrt2"}
      ]
    },
    {
      "id": "S4A.A3m",
      "triple": [6, 6, 8],
      "field": [["w", [-2, 0, 0, 0, 1]]],
      "defs": [["sqrt2", "-(w^2)"], ["el", "(-4-sqrt2+w)/3"], ["em", "(-4-sqrt2-w)/3"]],
      "alpha": "3", "beta": "3", "gamma": "2+sqrt2",
      "alpha_l": "-4-sqrt2-w", "beta_m": "-4-sqrt2+w",
      "vpoly": {"alpha": 6, "beta": 6, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 11", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(3,3,2+sqrt2; -4-sqrt2+w, -4-sqrt2-w)", "paper_ref": "Prop 11", "tag": "PAPER",
         "identities": ["el*em = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 1+sqrt2 certifies G' infinite",
         "paper_ref": "Prop 11", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "1+sqrt2"}
      ]
    }
  ]
}
)JSON";

}  // namespace reflex::catalog_data
