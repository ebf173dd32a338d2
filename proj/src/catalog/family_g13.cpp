#include "reflex/catalog.hpp"

// The D forms over Q(sqrt2, i) whose finite quotient has order 96. D3 (triple
// (3,4,8)) carries the Z[zeta8] translation analysis: zeta = (1+i)/sqrt2.

namespace reflex::catalog_data {

const char* family_g13 = R"JSON(
{
  "family": "G13",
  "entries": [
    {
      "id": "G13.D1p",
      "triple": [8, 8, 3],
      "field": [["a", [-2, 0, 1]], ["i", [1, 0, 1]]],
      "defs": [["sqrt2", "a"]],
      "alpha": "2+sqrt2", "beta": "2-sqrt2", "gamma": "1",
      "alpha_l": "-1+i", "beta_m": "-1-i",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 3},
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(8,8,3)\n(s1 s2^s3)^2 = (s1 s3)^4\n",
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 15", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2+sqrt2, 2-sqrt2, 1; -1+i, -1-i)", "paper_ref": "Prop 15", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "alpha*mp + beta*lp = -2"],
         "distinct": [["alpha", "beta"]]},
        {"kind": "quotient_order", "label": "|G'| = 96", "paper_ref": "Thm 4", "tag": "PAPER", "order": 96},
        {"kind": "matrix_identity", "label": "t'^3 = -i id (i under the conjugate designation)", "paper_ref": "Prop 15", "tag": "DERIVED",
         "space": "quotient", "words": ["(s1 s2 s3)^3"], "rhs": "scalar:-i"},
        {"kind": "matrix_identity", "label": "t'^6 = -1 (designation-free)", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^6"], "rhs": "-I"},
        {"kind": "presentation_order", "label": "Thm 5 presentation enumerates to 96", "paper_ref": "Thm 5", "tag": "DERIVED",
         "order": 96, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(8,8,3)\n(s1 s2^s3)^2 = (s1 s3)^4\n"},
        {"kind": "quotient_structure", "label": "z = (s1's3')^4 = (s1's2'^s3')^2 central of order 2", "paper_ref": "Thm 5", "tag": "PAPER",
         "check": "central_word", "word": "(s1 s3)^4", "order": 2, "equals": ["(s1 s2^s3)^2"]},
        {"kind": "presentation_order", "label": "Cor 3 relators hold in the matrix group", "paper_ref": "Cor 3", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(8,8,3)\n(s2 s3^s1)^3\n(s2 s1^s3)^4\n"},
        {"kind": "cartan_value", "label": "C(s2, s3^s1) = 1", "paper_ref": "Prop 16", "tag": "PAPER",
         "w1": "s2", "w2": "s3^s1", "expected": "1"},
        {"kind": "cartan_value", "label": "C(s2, s1^s3) = 2", "paper_ref": "Prop 16", "tag": "PAPER",
         "w1": "s2", "w2": "s1^s3", "expected": "2"},
        {"kind": "condition_table", "label": "Prop 16: two of A-D imply the others", "paper_ref": "Prop 16", "tag": "PAPER",
         "rule": "two_imply",
         "conditions": [
           {"name": "A", "type": "delta_zero"},
           {"name": "B", "type": "param_distinct", "a": "alpha", "b": "beta"},
           {"name": "C", "type": "word_order", "word": "s2 s3^s1", "order": 3},
           {"name": "D", "type": "word_order", "word": "s2 s1^s3", "order": 4}
         ],
         "instances": [
           {"expect_all": true},
           {"alpha_l": "2*(-1+i)", "beta_m": "(-1-i)/2", "expect_count": 1},
           {"alpha_l": "2*i", "beta_m": "1/i", "expect_count": 1},
           {"alpha": "2+sqrt2", "beta": "2+sqrt2", "alpha_l": "2+sqrt2", "beta_m": "2+sqrt2", "expect_count": 0}
         ]},
        {"kind": "regeneration", "label": "D1+ regenerates the (3,4,8) system of D3-", "paper_ref": "Prop 20", "tag": "PAPER",
         "words": ["s2", "s3", "s1^s3"],
         "alpha": "1", "beta": "2", "gamma": "2-sqrt2", "delta_zero": true},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with D2p", "paper_ref": "Prop 20", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G13.D2p"},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with D1m", "paper_ref": "Prop 20", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G13.D1m"}
      ]
    },
    {
      "id": "G13.D1m",
      "triple": [8, 8, 3],
      "field": [["a", [-2, 0, 1]], ["i", [1, 0, 1]]],
      "defs": [["sqrt2", "a"]],
      "alpha": "2-sqrt2", "beta": "2+sqrt2", "gamma": "1",
      "alpha_l": "-1+i", "beta_m": "-1-i",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 3},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 15", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2-sqrt2, 2+sqrt2, 1; -1+i, -1-i)", "paper_ref": "Prop 15", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "alpha*mp + beta*lp = -2"]},
        {"kind": "quotient_order", "label": "|G'| = 96", "paper_ref": "Thm 4", "tag": "PAPER", "order": 96},
        {"kind": "matrix_identity", "label": "t'^3 = -i id (i under the conjugate designation)", "paper_ref": "Prop 15", "tag": "DERIVED",
         "space": "quotient", "words": ["(s1 s2 s3)^3"], "rhs": "scalar:-i"},
        {"kind": "matrix_identity", "label": "t'^6 = -1 (designation-free)", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^6"], "rhs": "-I"}
      ]
    },
    {
      "id": "G13.D2p",
      "triple": [8, 8, 6],
      "field": [["a", [-2, 0, 1]], ["i", [1, 0, 1]]],
      "defs": [["sqrt2", "a"]],
      "alpha": "2+sqrt2", "beta": "2+sqrt2", "gamma": "3",
      "alpha_l": "-3-2*sqrt2-i", "beta_m": "-3-2*sqrt2+i",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 6},
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(8,8,6)\n(s2 s1^(s3 s1))^2 = (s2 s3)^3 = (s1 s3)^4\n",
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 15", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2+sqrt2, 2+sqrt2, 3; -3-2sqrt2+i, -3-2sqrt2-i)", "paper_ref": "Prop 15", "tag": "PAPER",
         "identities": ["lp*mp = gamma"], "equal": [["alpha", "beta"]]},
        {"kind": "quotient_order", "label": "|G'| = 96", "paper_ref": "Thm 4", "tag": "PAPER", "order": 96},
        {"kind": "matrix_identity", "label": "t'^3 = i id", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^3"], "rhs": "scalar:i"},
        {"kind": "matrix_identity", "label": "t'^6 = -1 (designation-free)", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^6"], "rhs": "-I"},
        {"kind": "presentation_order", "label": "Thm 5 presentation enumerates to 96", "paper_ref": "Thm 5", "tag": "DERIVED",
         "order": 96, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(8,8,6)\n(s2 s1^(s3 s1))^2 = (s2 s3)^3 = (s1 s3)^4\n"},
        {"kind": "presentation_order", "label": "Cor 3 relators hold in the matrix group", "paper_ref": "Cor 3", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(8,8,6)\n(s1 s2^s3)^4\n(s2 s3^(s1 s3))^3\n"},
        {"kind": "condition_table", "label": "Prop 17: two of A-D imply the others", "paper_ref": "Prop 17", "tag": "PAPER",
         "rule": "two_imply",
         "conditions": [
           {"name": "A", "type": "delta_zero"},
           {"name": "B", "type": "param_equal", "a": "alpha", "b": "beta"},
           {"name": "C", "type": "word_order", "word": "s1 s2^s3", "order": 4},
           {"name": "D", "type": "word_order", "word": "s2 s3^(s1 s3)", "order": 3}
         ],
         "instances": [
           {"expect_all": true},
           {"alpha_l": "2*(-3-2*sqrt2-i)", "beta_m": "(-3-2*sqrt2+i)/2", "expect_count": 1},
           {"alpha_l": "3*i", "beta_m": "-(6+4*sqrt2)*i", "expect_count": 1},
           {"alpha": "2+sqrt2", "beta": "2-sqrt2", "alpha_l": "3*i", "beta_m": "-2*i", "expect_count": 0}
         ]},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with D3p", "paper_ref": "Prop 20", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G13.D3p"}
      ]
    },
    {
      "id": "G13.D2m",
      "triple": [8, 8, 6],
      "field": [["a", [-2, 0, 1]], ["i", [1, 0, 1]]],
      "defs": [["sqrt2", "a"]],
      "alpha": "2-sqrt2", "beta": "2-sqrt2", "gamma": "3",
      "alpha_l": "-3+2*sqrt2-i", "beta_m": "-3+2*sqrt2+i",
      "vpoly": {"alpha": 8, "beta": 8, "gamma": 6},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 15", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2-sqrt2, 2-sqrt2, 3; -3+2sqrt2+i, -3+2sqrt2-i)", "paper_ref": "Prop 15", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "quotient_order", "label": "|G'| = 96", "paper_ref": "Thm 4", "tag": "PAPER", "order": 96},
        {"kind": "matrix_identity", "label": "t'^3 = i id", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^3"], "rhs": "scalar:i"},
        {"kind": "matrix_identity", "label": "t'^6 = -1 (designation-free)", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^6"], "rhs": "-I"}
      ]
    },
    {
      "id": "G13.D3p",
      "triple": [3, 4, 8],
      "field": [["a", [-2, 0, 1]], ["i", [1, 0, 1]]],
      "defs": [["sqrt2", "a"], ["zeta", "(sqrt2 + sqrt2*i)/2"], ["u", "1 - zeta + zeta^2"],
               ["lL", "1 + i - sqrt2"], ["mL", "(1 - i - sqrt2)/2"], ["gL", "2 + sqrt2"]],
      "alpha": "1", "beta": "2", "gamma": "2+sqrt2",
      "alpha_l": "-1-sqrt2+i", "beta_m": "-1-sqrt2-i",
      "vpoly": {"alpha": 3, "beta": 4, "gamma": 8},
      "integral_basis": ["1", "zeta", "zeta^2", "zeta^3"],
      "ring_gens": ["zeta", "sqrt2", "i"],
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(3,4,8)\n(s1 s3)^2 = (s2 s3)^4\n",
      "cdefs": [
        ["c1", {"word": "(s1 (s2 s3)^4)^2", "scale": "-(4-gamma)/2"}],
        ["c2", {"word": "(s2 (s3 s1)^2)^2", "scale": "-(mp+2)/2"}]
      ],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 15", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,2,2+sqrt2; -1-sqrt2+i, -1-sqrt2-i)", "paper_ref": "Prop 15", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "mp + 2*lp = 2 - 2*gamma"]},
        {"kind": "param_poly", "label": "zeta identities of Lemma 1", "paper_ref": "Lemma 1", "tag": "PAPER",
         "identities": [
           "i*sqrt2 = (1+zeta)^2*u",
           "sqrt2 = -zeta^2*(1+zeta)^2*u",
           "1+i = -zeta^3*(1+zeta)^2*u",
           "1-i = -zeta*(1+zeta)^2*u",
           "2 = -(1+zeta)^4*u^2",
           "gL = -zeta^3*(1+zeta)^2",
           "4-gL = -zeta*(1+zeta)^2*u^2",
           "lL = -zeta^3*(1+zeta)^3*u^2",
           "2*mL = zeta^2*(1+zeta)^3*u^2",
           "mL = -zeta^2/(1+zeta)",
           "lL+2 = -(1+zeta)^3*u^2*(1+zeta+zeta^3)",
           "mL*sqrt2 = -(1+zeta)*u",
           "lL/sqrt2 = zeta-1",
           "lL/sqrt2 = zeta*(1+zeta)*u",
           "1/u = 1-zeta^2-zeta^3",
           "1-zeta = -zeta*u*(1+zeta)"]},
        {"kind": "coefficient_ideal", "label": "the ideals (1-zeta) and (1+zeta) coincide", "paper_ref": "§4.4.3", "tag": "PAPER",
         "ideal_gens": ["1-zeta"], "contains": ["1+zeta"]},
        {"kind": "quotient_order", "label": "|G'| = 96", "paper_ref": "Thm 4", "tag": "PAPER", "order": 96},
        {"kind": "matrix_identity", "label": "t'^3 = -i id (i under the conjugate designation)", "paper_ref": "Prop 15", "tag": "DERIVED",
         "space": "quotient", "words": ["(s1 s2 s3)^3"], "rhs": "scalar:-i"},
        {"kind": "matrix_identity", "label": "t'^6 = -1 (designation-free)", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^6"], "rhs": "-I"},
        {"kind": "presentation_order", "label": "Thm 5 presentation enumerates to 96", "paper_ref": "Thm 5", "tag": "DERIVED",
         "order": 96, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(3,4,8)\n(s1 s3)^2 = (s2 s3)^4\n"},
        {"kind": "quotient_structure", "label": "z = (s1's3')^2 = (s2's3')^4 central of order 2", "paper_ref": "Thm 4", "tag": "PAPER",
         "check": "central_word", "word": "(s1 s3)^2", "order": 2, "equals": ["(s2 s3)^4"]},
        {"kind": "quotient_structure", "label": "G'/<z> has order 48", "paper_ref": "Thm 4", "tag": "PAPER",
         "check": "quotient_by_central", "word": "(s1 s3)^2", "order": 48},
        {"kind": "quotient_structure", "label": "G' acts faithfully on M'", "paper_ref": "Thm 7", "tag": "PAPER",
         "check": "faithful"},
        {"kind": "presentation_order", "label": "Cor 3 relators hold in the matrix group", "paper_ref": "Cor 3", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(3,4,8)\n(s1 s2^(s3 s2))^3\n"},
        {"kind": "condition_table", "label": "Prop 18: Delta = 0 iff (s1 s2^(s3 s2))^3 = 1", "paper_ref": "Prop 18", "tag": "PAPER",
         "rule": "equivalent",
         "conditions": [
           {"name": "A", "type": "delta_zero"},
           {"name": "B", "type": "word_order", "word": "s1 s2^(s3 s2)", "order": 3}
         ],
         "instances": [
           {"expect_all": true},
           {"alpha_l": "2*(-1-sqrt2+i)", "beta_m": "(-1-sqrt2-i)/2", "expect_count": 0},
           {"alpha_l": "i*(-1-sqrt2+i)", "beta_m": "(-1-sqrt2-i)/i", "expect_count": 0},
           {"alpha_l": "2*(2+sqrt2)", "beta_m": "1", "expect_count": 0}
         ]},
        {"kind": "cartan_value", "label": "C(s1, s2^s3) = 3 (order 6 pair)", "paper_ref": "Prop 21", "tag": "PAPER",
         "w1": "s1", "w2": "s2^s3", "expected": "3"},
        {"kind": "word_order", "label": "s1's2'^s3' has order 6", "paper_ref": "Prop 21", "tag": "DERIVED",
         "space": "quotient", "word": "s1 s2^s3", "order": 6},
        {"kind": "cartan_value", "label": "C(s1, s3^s2) = 4 - gamma (order 8 pair)", "paper_ref": "Prop 21", "tag": "PAPER",
         "w1": "s1", "w2": "s3^s2", "expected": "4-gamma"},
        {"kind": "word_order", "label": "s1's3'^s2' has order 8", "paper_ref": "Prop 21", "tag": "DERIVED",
         "space": "quotient", "word": "s1 s3^s2", "order": 8},
        {"kind": "cartan_value", "label": "C(s1, s2^(s3 s2)) = 1 (order 3 pair)", "paper_ref": "Prop 21", "tag": "PAPER",
         "w1": "s1", "w2": "s2^(s3 s2)", "expected": "1"},
        {"kind": "word_order", "label": "s1's2'^(s3's2') has order 3", "paper_ref": "Prop 21", "tag": "DERIVED",
         "space": "quotient", "word": "s1 s2^(s3 s2)", "order": 3},
        {"kind": "cartan_value", "label": "C(s1, s3^(s2 s3)) = gamma (order 8 pair)", "paper_ref": "Prop 21", "tag": "PAPER",
         "w1": "s1", "w2": "s3^(s2 s3)", "expected": "gamma"},
        {"kind": "word_order", "label": "s1's3'^(s2's3') has order 8", "paper_ref": "Prop 21", "tag": "DERIVED",
         "space": "quotient", "word": "s1 s3^(s2 s3)", "order": 8},
        {"kind": "cartan_value", "label": "C(s1, s2^(s3 s2 s3)) = 3 (order 6 pair)", "paper_ref": "Prop 21", "tag": "PAPER",
         "w1": "s1", "w2": "s2^(s3 s2 s3)", "expected": "3"},
        {"kind": "word_order", "label": "s1's2'^(s3's2's3') has order 6", "paper_ref": "Prop 21", "tag": "DERIVED",
         "space": "quotient", "word": "s1 s2^(s3 s2 s3)", "order": 6},
        {"kind": "cartan_value", "label": "C(s1, s3^(s2 s3 s2)) = 2 (order 4 pair)", "paper_ref": "Prop 21", "tag": "PAPER",
         "w1": "s1", "w2": "s3^(s2 s3 s2)", "expected": "2"},
        {"kind": "word_order", "label": "s1's3'^(s2's3's2') has order 4", "paper_ref": "Prop 21", "tag": "DERIVED",
         "space": "quotient", "word": "s1 s3^(s2 s3 s2)", "order": 4},
        {"kind": "lattice_rank", "label": "N has Z-rank 8", "paper_ref": "Thm 6", "tag": "PAPER", "rank": 8},
        {"kind": "module_closure", "label": "N is stable under zeta, sqrt2 and i", "paper_ref": "Thm 6", "tag": "PAPER"},
        {"kind": "coefficient_ideal", "label": "I_1 chain: gamma, 2, sqrt2, 1+i, zeta-1 down to I_1 = (1+zeta)", "paper_ref": "Thm 6", "tag": "PAPER",
         "c": "c1",
         "contains": ["gamma", "2", "sqrt2", "gamma*mp", "2*mp", "1-i", "1+i", "mp*sqrt2", "zeta-1", "1+zeta", "2*zeta", "zeta*sqrt2", "zeta*gamma"],
         "divisor": "1+zeta", "equals_principal": "1+zeta"},
        {"kind": "coefficient_ideal", "label": "I_2 = I_1 = (1+zeta)", "paper_ref": "Thm 6", "tag": "PAPER",
         "c": "c2", "contains": ["2/(mp+2)", "1+zeta"], "divisor": "1+zeta", "equals_principal": "1+zeta"},
        {"kind": "split_obstruction", "label": "non-split: 1+zeta divides the I_1 and I_2 terms of (E)", "paper_ref": "Thm 6", "tag": "PAPER",
         "mode": "ideal", "pi": "1+zeta",
         "coeffs": ["4-gamma", "mp+2"], "cs": ["c1", "c2"]},
        {"kind": "split_obstruction", "label": "non-split: no relator lift lands in N", "paper_ref": "Thm 6", "tag": "DERIVED",
         "mode": "lift"},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with D4p", "paper_ref": "Prop 20", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G13.D4p"}
      ]
    },
    {
      "id": "G13.D3m",
      "triple": [3, 4, 8],
      "field": [["a", [-2, 0, 1]], ["i", [1, 0, 1]]],
      "defs": [["sqrt2", "a"]],
      "alpha": "1", "beta": "2", "gamma": "2-sqrt2",
      "alpha_l": "-1+sqrt2+i", "beta_m": "-1+sqrt2-i",
      "vpoly": {"alpha": 3, "beta": 4, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 15", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,2,2-sqrt2; -1+sqrt2+i, -1+sqrt2-i)", "paper_ref": "Prop 15", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "mp + 2*lp = 2 - 2*gamma"]},
        {"kind": "quotient_order", "label": "|G'| = 96", "paper_ref": "Thm 4", "tag": "PAPER", "order": 96},
        {"kind": "matrix_identity", "label": "t'^3 = -i id (i under the conjugate designation)", "paper_ref": "Prop 15", "tag": "DERIVED",
         "space": "quotient", "words": ["(s1 s2 s3)^3"], "rhs": "scalar:-i"},
        {"kind": "matrix_identity", "label": "t'^6 = -1 (designation-free)", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^6"], "rhs": "-I"}
      ]
    },
    {
      "id": "G13.D4p",
      "triple": [4, 6, 8],
      "field": [["a", [-2, 0, 1]], ["i", [1, 0, 1]]],
      "defs": [["sqrt2", "a"]],
      "alpha": "2", "beta": "3", "gamma": "2+sqrt2",
      "alpha_l": "-3-sqrt2+i", "beta_m": "-3-sqrt2-i",
      "vpoly": {"alpha": 4, "beta": 6, "gamma": 8},
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(4,6,8)\n(s1 s2)^2 = (s1 s3)^3 = (s2 s3)^4\n",
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 15", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2,3,2+sqrt2; -3-sqrt2+i, -3-sqrt2-i)", "paper_ref": "Prop 15", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "quotient_order", "label": "|G'| = 96", "paper_ref": "Thm 4", "tag": "PAPER", "order": 96},
        {"kind": "matrix_identity", "label": "t'^3 = -i id (i under the conjugate designation)", "paper_ref": "Prop 15", "tag": "DERIVED",
         "space": "quotient", "words": ["(s1 s2 s3)^3"], "rhs": "scalar:-i"},
        {"kind": "matrix_identity", "label": "t'^6 = -1 (designation-free)", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^6"], "rhs": "-I"},
        {"kind": "presentation_order", "label": "Thm 5 presentation enumerates to 96", "paper_ref": "Thm 5", "tag": "DERIVED",
         "order": 96, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(4,6,8)\n(s1 s2)^2 = (s1 s3)^3 = (s2 s3)^4\n"},
        {"kind": "presentation_order", "label": "Cor 3 relators hold in the matrix group", "paper_ref": "Cor 3", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(4,6,8)\n(s1 s3^s2)^3\n"},
        {"kind": "condition_table", "label": "Prop 19: Delta = 0 iff (s1 s3^s2)^3 = 1", "paper_ref": "Prop 19", "tag": "PAPER",
         "rule": "equivalent",
         "conditions": [
           {"name": "A", "type": "delta_zero"},
           {"name": "B", "type": "word_order", "word": "s1 s3^s2", "order": 3}
         ],
         "instances": [
           {"expect_all": true},
           {"alpha_l": "2*(-3-sqrt2+i)", "beta_m": "(-3-sqrt2-i)/2", "expect_count": 0},
           {"alpha_l": "i*(-3-sqrt2+i)", "beta_m": "(-3-sqrt2-i)/i", "expect_count": 0},
           {"alpha_l": "6*(2+sqrt2)", "beta_m": "1", "expect_count": 0}
         ]},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with D4m", "paper_ref": "Prop 20", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G13.D4m"}
      ]
    },
    {
      "id": "G13.D4m",
      "triple": [4, 6, 8],
      "field": [["a", [-2, 0, 1]], ["i", [1, 0, 1]]],
      "defs": [["sqrt2", "a"]],
      "alpha": "2", "beta": "3", "gamma": "2-sqrt2",
      "alpha_l": "-3+sqrt2+i", "beta_m": "-3+sqrt2-i",
      "vpoly": {"alpha": 4, "beta": 6, "gamma": 8},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 15", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(2,3,2-sqrt2; -3+sqrt2+i, -3+sqrt2-i)", "paper_ref": "Prop 15", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "quotient_order", "label": "|G'| = 96", "paper_ref": "Thm 4", "tag": "PAPER", "order": 96},
        {"kind": "matrix_identity", "label": "t'^3 = -i id (i under the conjugate designation)", "paper_ref": "Prop 15", "tag": "DERIVED",
         "space": "quotient", "words": ["(s1 s2 s3)^3"], "rhs": "scalar:-i"},
        {"kind": "matrix_identity", "label": "t'^6 = -1 (designation-free)", "paper_ref": "Prop 15", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^6"], "rhs": "-I"}
      ]
    }
  ]
}
)JSON";

}  // namespace reflex::catalog_data
