#include "reflex/catalog.hpp"

// Section-4 B forms ((8,8,8), splitting field of X^4-2X^2-1) and C forms
// ((8,8,3)/(8,8,6) over Q(sqrt2, sqrt3)) with the coefficient-ideal chain.

namespace reflex::catalog_data {

const char* family_s4bc = R"JSON(
{
  "family": "S4BC",
  "entries": [
    {
      "id": "S4B.B1p",
      "triple": [8, 8, 8],
      "field": [["w", [-1, 0, -2, 0, 1]]],
      "defs": [["sqrt2", "1-w^2"]],
      "alpha": "2+sqrt2", "beta": "2+sqrt2", "gamma": "2+sqrt2",
      "alpha_l": "-2-3*sqrt2-sqrt2*w", "beta_m": "-2-3*sqrt2+sqrt2*w",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 8},
      "cdefs": [
        ["c1", {"word": "(s1 (s2 s3)^4)^2", "scale": "-(4-gamma)/2"}],
        ["c2", {"word": "(s2 (s1 s3)^4)^2", "scale": "-(lp+2)/2"}],
        ["c3", {"word": "(s3 (s1 s2)^4)^2", "scale": "-(mp+2)/2"}]
      ],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 12", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2+sqrt2 (x3); -2-3sqrt2 +/- sqrt2 w)", "paper_ref": "Prop 12", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 4-sqrt2 certifies G' infinite",
         "paper_ref": "Prop 12", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "4-sqrt2"},
        {"kind": "split_obstruction", "label": "non-split: sqrt2 divides every term of (E)", "paper_ref": "Prop 12", "tag": "PAPER",
         "mode": "ideal", "pi": "sqrt2",
         "coeffs": ["4-gamma", "lp+2", "mp+2"], "cs": ["c1", "c2", "c3"]}
      ]
    },
    {
      "id": "S4B.B1m",
      "triple": [8, 8, 8],
      "field": [["w", [-1, 0, -2, 0, 1]]],
      "defs": [["sqrt2", "w^2-1"]],
      "alpha": "2-sqrt2", "beta": "2-sqrt2", "gamma": "2-sqrt2",
      "alpha_l": "-2+3*sqrt2-sqrt2*w", "beta_m": "-2+3*sqrt2+sqrt2*w",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 12", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2-sqrt2 (x3); -2+3sqrt2 +/- sqrt2 w)", "paper_ref": "Prop 12", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 4+sqrt2 certifies G' infinite",
         "paper_ref": "Prop 12", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "4+sqrt2"}
      ]
    },
    {
      "id": "S4B.B2p",
      "triple": [8, 8, 8],
      "field": [["w", [-1, 0, -2, 0, 1]]],
      "defs": [["sqrt2", "1-w^2"]],
      "alpha": "2-sqrt2", "beta": "2-sqrt2", "gamma": "2+sqrt2",
      "alpha_l": "-2+sqrt2-sqrt2*w", "beta_m": "-2+sqrt2+sqrt2*w",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 12", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2-sqrt2, 2-sqrt2, 2+sqrt2; -2+sqrt2 +/- sqrt2 w)", "paper_ref": "Prop 12", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = sqrt2 certifies G' infinite",
         "paper_ref": "Prop 12", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "sqrt2"}
      ]
    },
    {
      "id": "S4B.B2m",
      "triple": [8, 8, 8],
      "field": [["w", [-1, 0, -2, 0, 1]]],
      "defs": [["sqrt2", "w^2-1"]],
      "alpha": "2+sqrt2", "beta": "2+sqrt2", "gamma": "2-sqrt2",
      "alpha_l": "-2-sqrt2-sqrt2*w", "beta_m": "-2-sqrt2+sqrt2*w",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 12", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2+sqrt2, 2+sqrt2, 2-sqrt2; -2-sqrt2 +/- sqrt2 w)", "paper_ref": "Prop 12", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = -sqrt2 certifies G' infinite",
         "paper_ref": "Prop 12", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "-sqrt2"}
      ]
    },
    {
      "id": "S4C.C1p",
      "triple": [8, 8, 3],
      "field": [["a", [-2, 0, 1]], ["b", [-3, 0, 1]]],
      "defs": [["sqrt2", "a"], ["rt3", "b"], ["rt6", "a*b"]],
      "alpha": "2+sqrt2", "beta": "2+sqrt2", "gamma": "1",
      "alpha_l": "-1-2*sqrt2-rt3", "beta_m": "-1-2*sqrt2+rt3",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 3},
      "integral_basis": ["1", "a", "b", "(a+a*b)/2"],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 13", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2+sqrt2, 2+sqrt2, 1; -1-2sqrt2 +/- sqrt3)", "paper_ref": "Prop 13", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "alpha*mp + beta*lp = 6 - 2*(alpha+beta)"]},
        {"kind": "presentation_order", "label": "Cor 1 relators hold in the matrix group", "paper_ref": "Cor 1", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(8,8,3)\n(s2 s3^(s1 s3 s1))^6\n"},
        {"kind": "cartan_value", "label": "C(s2, s3^(s1 s3 s1)) = 3", "paper_ref": "Prop 12", "tag": "PAPER",
         "w1": "s2", "w2": "s3^(s1 s3 s1)", "expected": "3"},
        {"kind": "word_order", "label": "s2 s3^(s1 s3 s1) has order 6", "paper_ref": "Prop 12", "tag": "PAPER",
         "space": "rep", "word": "s2 s3^(s1 s3 s1)", "order": 6},
        {"kind": "cartan_value", "label": "C(s2, s1^(s3 s1 s3)) = 4 - alpha", "paper_ref": "Prop 12", "tag": "DERIVED",
         "w1": "s2", "w2": "s1^(s3 s1 s3)", "expected": "4-alpha"},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 2-2sqrt2 certifies G' infinite",
         "paper_ref": "Prop 13", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "2-2*sqrt2"},
        {"kind": "condition_table", "label": "Prop 12 equivalences A-D with perturbed controls", "paper_ref": "Prop 12", "tag": "PAPER",
         "rule": "equivalent",
         "conditions": [
           {"name": "A", "type": "delta_zero"},
           {"name": "B", "type": "identity", "identity": "alpha*mp + beta*lp = 6 - 2*(alpha+beta)"},
           {"name": "C", "type": "word_order", "word": "s2 s3^(s1 s3 s1)", "order": 6},
           {"name": "D", "type": "word_order", "word": "s3 s2^(s1 s2 s1)", "order": 6}
         ],
         "instances": [
           {"expect_all": true},
           {"alpha_l": "2*(-1-2*sqrt2-rt3)", "beta_m": "(-1-2*sqrt2+rt3)/2", "expect_count": 0},
           {"alpha_l": "3*(-1-2*sqrt2-rt3)", "beta_m": "(-1-2*sqrt2+rt3)/3", "expect_count": 0},
           {"alpha_l": "-(-1-2*sqrt2-rt3)", "beta_m": "-(-1-2*sqrt2+rt3)", "expect_count": 0}
         ]}
      ]
    },
    {
      "id": "S4C.C1m",
      "triple": [8, 8, 3],
      "field": [["a", [-2, 0, 1]], ["b", [-3, 0, 1]]],
      "defs": [["sqrt2", "a"], ["rt3", "b"]],
      "alpha": "2-sqrt2", "beta": "2-sqrt2", "gamma": "1",
      "alpha_l": "-1+2*sqrt2-rt3", "beta_m": "-1+2*sqrt2+rt3",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 3},
      "integral_basis": ["1", "a", "b", "(a+a*b)/2"],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 13", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2-sqrt2, 2-sqrt2, 1; -1+2sqrt2 +/- sqrt3)", "paper_ref": "Prop 13", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "alpha*mp + beta*lp = 6 - 2*(alpha+beta)"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 2+2sqrt2 certifies G' infinite",
         "paper_ref": "Prop 13", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "2+2*sqrt2"}
      ]
    },
    {
      "id": "S4C.C2p",
      "triple": [8, 8, 6],
      "field": [["a", [-2, 0, 1]], ["b", [-3, 0, 1]]],
      "defs": [["sqrt2", "a"], ["rt3", "b"], ["rt6", "a*b"]],
      "alpha": "2+sqrt2", "beta": "2-sqrt2", "gamma": "3",
      "alpha_l": "-3+rt3", "beta_m": "-3-rt3",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 6},
      "integral_basis": ["1", "a", "b", "(a+a*b)/2"],
      "ring_gens": ["sqrt2", "rt3"],
      "cdefs": [
        ["c1", {"word": "(s1 (s2 s3)^3)^2", "scale": "-(4-gamma)/2"}],
        ["c2", {"word": "(s2 (s3 s1)^4)^2", "scale": "-(mp+2)/2"}],
        ["c3", {"word": "(s3 (s1 s2)^4)^2", "scale": "-(lp+2)/2"}]
      ],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 13", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2+sqrt2, 2-sqrt2, 3; -3+sqrt3, -3-sqrt3)", "paper_ref": "Prop 13", "tag": "PAPER",
         "identities": ["lp*mp = gamma",
                        "mp = (-6+3*sqrt2+2*rt3-rt6)/2", "lp = (-6-3*sqrt2-2*rt3-rt6)/2",
                        "2/(mp+2) = -2+3*sqrt2-2*rt3+rt6", "2/(lp+2) = -2-3*sqrt2+2*rt3+rt6"]},
        {"kind": "presentation_order", "label": "Cor 1 relators hold in the matrix group", "paper_ref": "Cor 1", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(8,8,6)\n(s2 s3^(s1 s3 s1))^3\n"},
        {"kind": "infinite_commutator_witness", "label": "C(s2, s3^s1) certifies G' infinite",
         "paper_ref": "Prop 13", "tag": "DERIVED", "w1": "s2", "w2": "s3^s1", "expected_c": "alpha*beta + gamma + alpha*mp + beta*lp"},
        {"kind": "lattice_rank", "label": "Z-rank 8", "paper_ref": "Prop 14", "tag": "PAPER", "rank": 8},
        {"kind": "module_closure", "label": "stable under sqrt2 and sqrt3", "paper_ref": "Prop 14", "tag": "PAPER"},
        {"kind": "coefficient_ideal", "label": "I_1: 2, 2 sqrt2, 2 sqrt3 in I_1, I_1 = (sqrt2)", "paper_ref": "Prop 14", "tag": "PAPER",
         "c": "c1", "contains": ["2", "2*sqrt2", "2*rt3", "2/(mp+2)"],
         "divisor": "sqrt2", "equals_principal": "sqrt2"},
        {"kind": "coefficient_ideal", "label": "I_2 chain: (1)-(4) of the proof, I_2 = (sqrt2)", "paper_ref": "Prop 14", "tag": "PAPER",
         "c": "c2",
         "contains": ["2/(mp+2)",
                      "2-3*sqrt2+2*rt3-rt6", "-6+2*sqrt2-2*rt3+2*rt6",
                      "6-3*sqrt2+2*rt3-3*rt6", "-6+6*sqrt2-6*rt3+2*rt6",
                      "sqrt2+rt6", "2*sqrt2", "2*rt6", "2+2*rt3"],
         "divisor": "sqrt2"},
        {"kind": "coefficient_ideal", "label": "I_3 = (sqrt2)", "paper_ref": "Prop 14", "tag": "PAPER",
         "c": "c3", "contains": ["2/(lp+2)", "2"], "divisor": "sqrt2"},
        {"kind": "coefficient_ideal", "label": "proof elements (1)-(4) lie in the principal ideal (sqrt2)", "paper_ref": "Prop 14", "tag": "PAPER",
         "ideal_gens": ["sqrt2"],
         "contains": ["2-3*sqrt2+2*rt3-rt6", "-6+2*sqrt2-2*rt3+2*rt6",
                      "6-3*sqrt2+2*rt3-3*rt6", "-6+6*sqrt2-6*rt3+2*rt6"]},
        {"kind": "split_obstruction", "label": "non-split: every term of (E) lies in (sqrt2)", "paper_ref": "Cor 2", "tag": "PAPER",
         "mode": "ideal", "pi": "sqrt2",
         "coeffs": ["4-gamma", "mp+2", "lp+2"], "cs": ["c1", "c2", "c3"]}
      ]
    },
    {
      "id": "S4C.C2m",
      "triple": [8, 8, 6],
      "field": [["a", [-2, 0, 1]], ["b", [-3, 0, 1]]],
      "defs": [["sqrt2", "a"], ["rt3", "b"]],
      "alpha": "2-sqrt2", "beta": "2+sqrt2", "gamma": "3",
      "alpha_l": "-3+rt3", "beta_m": "-3-rt3",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 6},
      "integral_basis": ["1", "a", "b", "(a+a*b)/2"],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 13", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2-sqrt2, 2+sqrt2, 3; -3+sqrt3, -3-sqrt3)", "paper_ref": "Prop 13", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) certifies G' infinite",
         "paper_ref": "Prop 13", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3",
         "expected_c": "alpha + beta*gamma + alpha*mp + beta*lp"}
      ]
    }
  ]
}
)JSON";

}  // namespace reflex::catalog_data
