#include "reflex/catalog.hpp"

// The five forms whose finite quotient is the rank-2 group of order 48
// (quaternion extension of S3). K = Q(sqrt(-2)), r = sqrt(-2).

namespace reflex::catalog_data {

const char* family_g12 = R"JSON(
{
  "family": "G12",
  "entries": [
    {
      "id": "G12.A1",
      "triple": [3, 3, 4],
      "field": [["r", [2, 0, 1]]],
      "defs": [["el", "r"], ["em", "-r"]],
      "alpha": "1", "beta": "1", "gamma": "2",
      "alpha_l": "em", "beta_m": "el",
      "vpoly": {"alpha": 3, "beta": 3, "gamma": 4},
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(3,3,4)\n(s2 s3)^2 = (s1 s2^s3)^3\n",
      "ring_gens": ["r"],
      "cdefs": [
        ["c1", {"word": "(s1 (s2 s3)^2)^2", "scale": "-(4-gamma)/2"}],
        ["c2", {"rel": "act(s2, c1) - c1"}],
        ["c3", {"rel": "act(s3, c1) - c1"}]
      ],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 8", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,1,2; sqrt(-2), -sqrt(-2))", "paper_ref": "Prop 8", "tag": "PAPER",
         "identities": ["el*em = gamma", "el+em = 0"]},
        {"kind": "presentation_order", "label": "affine relators of Prop 9 hold", "paper_ref": "Prop 9", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(3,3,4)\n(s1 s2^s3)^6\n"},
        {"kind": "cartan_value", "label": "C(s1, s2^s3) = 3", "paper_ref": "Prop 9", "tag": "PAPER",
         "w1": "s1", "w2": "s2^s3", "expected": "3"},
        {"kind": "cartan_value", "label": "C(s1, s2 (s2 s3)^2) = 4 - alpha = 3", "paper_ref": "Prop 8", "tag": "PAPER",
         "w1": "s1", "w2": "s2 (s2 s3)^2", "expected": "3"},
        {"kind": "quotient_order", "label": "|G'| = 48", "paper_ref": "Thm 1", "tag": "DERIVED", "order": 48},
        {"kind": "matrix_identity", "label": "t'^4 = -1", "paper_ref": "Prop 8", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^4"], "rhs": "-I"},
        {"kind": "word_order", "label": "t' has order 8", "paper_ref": "Prop 8", "tag": "DERIVED",
         "space": "quotient", "word": "s1 s2 s3", "order": 8},
        {"kind": "matrix_identity", "label": "char poly of t'", "paper_ref": "Prop 8", "tag": "PAPER",
         "space": "quotient", "word": "s1 s2 s3", "charpoly": ["-1", "-r"]},
        {"kind": "quotient_structure", "label": "z = (s2's3')^2 central of order 2", "paper_ref": "Thm 1", "tag": "PAPER",
         "check": "central_word", "word": "(s2 s3)^2", "order": 2},
        {"kind": "quotient_structure", "label": "quaternion subgroup of order 8", "paper_ref": "Thm 1", "tag": "PAPER",
         "check": "subgroup_order", "words": ["s2 s3", "s1 s2 s3 s1"], "order": 8},
        {"kind": "presentation_order", "label": "Prop 10 presentation enumerates to 48", "paper_ref": "Prop 10", "tag": "DERIVED",
         "order": 48, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(3,3,4)\n(s2 s3)^2 = (s1 s2^s3)^3\n"},
        {"kind": "regeneration", "label": "A1 regenerates the (6,6,4) system", "paper_ref": "Prop 8", "tag": "DERIVED",
         "words": ["s1", "s2 (s2 s3)^2", "s3 (s2 s3)^2"],
         "alpha": "3", "beta": "3", "gamma": "2",
         "mixed_pair": ["-4+r", "-4-r"], "delta_zero": true},
        {"kind": "translation_identity", "label": "(s1 z1)^2 = -c1; c2, c3 are the anti-fixed conjugate lines", "paper_ref": "Thm 2", "tag": "PAPER",
         "relations": [
           "covof((s1 (s2 s3)^2)^2) = [-1] c1",
           "act(s2, c1) - c1 = c2",
           "act(s3, c1) - c1 = c3",
           "act(s2, c2) = [-1] c2",
           "act(s3, c3) = [-1] c3"]},
        {"kind": "lattice_rank", "label": "Z-rank 4", "paper_ref": "Thm 2", "tag": "PAPER", "rank": 4},
        {"kind": "module_closure", "label": "stable under sqrt(-2)", "paper_ref": "Thm 2", "tag": "PAPER"},
        {"kind": "coefficient_ideal", "label": "c1 lies in N", "paper_ref": "Thm 2", "tag": "PAPER",
         "c": "c1", "contains": ["1"]},
        {"kind": "split_obstruction", "label": "non-split: sqrt(-2) divides every term of (E)", "paper_ref": "Thm 3", "tag": "PAPER",
         "mode": "ideal", "pi": "r",
         "coeffs": ["4-gamma", "el+2", "em+2"], "cs": ["c1", "c2", "c3"]},
        {"kind": "split_obstruction", "label": "non-split: no relator lift lands in N", "paper_ref": "Thm 3", "tag": "DERIVED",
         "mode": "lift"},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with A2", "paper_ref": "Prop 8", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G12.A2"}
      ]
    },
    {
      "id": "G12.A2",
      "triple": [3, 3, 6],
      "field": [["r", [2, 0, 1]]],
      "defs": [["el", "-1+r"], ["em", "-1-r"]],
      "alpha": "1", "beta": "1", "gamma": "3",
      "alpha_l": "em", "beta_m": "el",
      "vpoly": {"alpha": 3, "beta": 3, "gamma": 6},
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(3,3,6)\n(s2 s3)^3 = (s1 s2^s3)^2\n",
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 8", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,1,3; -1+sqrt(-2), -1-sqrt(-2))", "paper_ref": "Prop 8", "tag": "PAPER",
         "identities": ["el*em = gamma", "el+em = -2"]},
        {"kind": "presentation_order", "label": "affine relators of Prop 9 hold", "paper_ref": "Prop 9", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(3,3,6)\n(s1 s2^s3)^4\n"},
        {"kind": "cartan_value", "label": "C(s1, s2^s3) = 2", "paper_ref": "Prop 9", "tag": "PAPER",
         "w1": "s1", "w2": "s2^s3", "expected": "2"},
        {"kind": "quotient_order", "label": "|G'| = 48", "paper_ref": "Thm 1", "tag": "DERIVED", "order": 48},
        {"kind": "matrix_identity", "label": "t'^4 = -1", "paper_ref": "Prop 8", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^4"], "rhs": "-I"},
        {"kind": "presentation_order", "label": "Prop 10 presentation enumerates to 48", "paper_ref": "Prop 10", "tag": "DERIVED",
         "order": 48, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(3,3,6)\n(s2 s3)^3 = (s1 s2^s3)^2\n"},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with A3", "paper_ref": "Prop 8", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G12.A3"}
      ]
    },
    {
      "id": "G12.A3",
      "triple": [3, 4, 6],
      "field": [["r", [2, 0, 1]]],
      "defs": [],
      "alpha": "1", "beta": "2", "gamma": "3",
      "alpha_l": "-2+r", "beta_m": "-2-r",
      "vpoly": {"alpha": 3, "beta": 4, "gamma": 6},
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(3,4,6)\n(s1 s3)^2 = (s2 s3)^3\n",
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 8", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,2,3; -2+sqrt(-2), -2-sqrt(-2))", "paper_ref": "Prop 8", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "alpha*mp + beta*lp = -4"]},
        {"kind": "presentation_order", "label": "affine relators of Prop 9 hold", "paper_ref": "Prop 9", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(3,4,6)\n(s1 s2^s3)^6\n"},
        {"kind": "cartan_value", "label": "C(s1, s2^s3) = 3", "paper_ref": "Prop 9", "tag": "PAPER",
         "w1": "s1", "w2": "s2^s3", "expected": "3"},
        {"kind": "quotient_order", "label": "|G'| = 48", "paper_ref": "Thm 1", "tag": "DERIVED", "order": 48},
        {"kind": "matrix_identity", "label": "t'^4 = -1", "paper_ref": "Prop 8", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^4"], "rhs": "-I"},
        {"kind": "presentation_order", "label": "Prop 10 presentation enumerates to 48", "paper_ref": "Prop 10", "tag": "DERIVED",
         "order": 48, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(3,4,6)\n(s1 s3)^2 = (s2 s3)^3\n"},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with A4", "paper_ref": "Prop 8", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G12.A4"}
      ]
    },
    {
      "id": "G12.A4",
      "triple": [6, 6, 4],
      "field": [["r", [2, 0, 1]]],
      "defs": [["el", "(-4+r)/3"], ["em", "(-4-r)/3"]],
      "alpha": "3", "beta": "3", "gamma": "2",
      "alpha_l": "-4-r", "beta_m": "-4+r",
      "vpoly": {"alpha": 6, "beta": 6, "gamma": 4},
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(6,6,4)\n(s1 s2)^3 = (s2 s3)^2 = (s1 s3)^3\n",
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 8", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(3,3,2; -4+sqrt(-2), -4-sqrt(-2))", "paper_ref": "Prop 8", "tag": "PAPER",
         "identities": ["el*em = gamma", "3*el + 3*em = -8"]},
        {"kind": "presentation_order", "label": "affine relators of Prop 9 hold", "paper_ref": "Prop 9", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(6,6,4)\n(s1 s2^s3)^3\n"},
        {"kind": "cartan_value", "label": "C(s1, s2^s3) = 1", "paper_ref": "Prop 9", "tag": "PAPER",
         "w1": "s1", "w2": "s2^s3", "expected": "1"},
        {"kind": "quotient_order", "label": "|G'| = 48", "paper_ref": "Thm 1", "tag": "DERIVED", "order": 48},
        {"kind": "matrix_identity", "label": "t'^4 = -1", "paper_ref": "Prop 8", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^4"], "rhs": "-I"},
        {"kind": "presentation_order", "label": "Prop 10 presentation enumerates to 48", "paper_ref": "Prop 10", "tag": "DERIVED",
         "order": 48, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(6,6,4)\n(s1 s2)^3 = (s2 s3)^2 = (s1 s3)^3\n"},
        {"kind": "quotient_structure", "label": "isomorphism-consistent with A5", "paper_ref": "Prop 8", "tag": "DERIVED",
         "check": "fingerprint_match", "other": "G12.A5"}
      ]
    },
    {
      "id": "G12.A5",
      "triple": [6, 6, 6],
      "field": [["r", [2, 0, 1]]],
      "defs": [["el", "(-5+r)/3"], ["em", "(-5-r)/3"]],
      "alpha": "3", "beta": "3", "gamma": "3",
      "alpha_l": "-5-r", "beta_m": "-5+r",
      "vpoly": {"alpha": 6, "beta": 6, "gamma": 6},
      "n_presentation": "gens: s1 s2 s3\ncoxeter: w(6,6,6)\n(s1 s2^s3)^2 = (s1 s2)^3 = (s2 s3)^3 = (s1 s3)^3\n",
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 8", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(3,3,3; -5+sqrt(-2), -5-sqrt(-2)), triple fixed from (6,6,6)", "paper_ref": "Prop 8", "tag": "DERIVED",
         "identities": ["el*em = gamma", "3*el + 3*em = -10"]},
        {"kind": "presentation_order", "label": "affine relators of Prop 9 hold", "paper_ref": "Prop 9", "tag": "PAPER",
         "mode": "relations",
         "text": "gens: s1 s2 s3\ncoxeter: w(6,6,6)\n(s1 s2^s3)^4\n"},
        {"kind": "cartan_value", "label": "C(s1, s2^s3) = 2", "paper_ref": "Prop 9", "tag": "PAPER",
         "w1": "s1", "w2": "s2^s3", "expected": "2"},
        {"kind": "quotient_order", "label": "|G'| = 48", "paper_ref": "Thm 1", "tag": "DERIVED", "order": 48},
        {"kind": "matrix_identity", "label": "t'^4 = -1", "paper_ref": "Prop 8", "tag": "PAPER",
         "space": "quotient", "words": ["(s1 s2 s3)^4"], "rhs": "-I"},
        {"kind": "presentation_order", "label": "Prop 10 presentation enumerates to 48", "paper_ref": "Prop 10", "tag": "DERIVED",
         "order": 48, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ncoxeter: w(6,6,6)\n(s1 s2^s3)^2 = (s1 s2)^3 = (s2 s3)^3 = (s1 s3)^3\n"}
      ]
    }
  ]
}
)JSON";

}  // namespace reflex::catalog_data
