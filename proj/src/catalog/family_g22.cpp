#include "reflex/catalog.hpp"

// The eighteen forms over Q(sqrt5, i) whose finite quotient has order 240.
// Generated by tools/gen_g22.py; edit the tables there and regenerate.

namespace reflex::catalog_data {

const char* family_g22 = R"JSON(
{
  "family": "G22",
  "entries": [
    {
      "id": "G22.G1",
      "triple": [
        3,
        3,
        10
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "1",
      "beta": "1",
      "gamma": "tau+1",
      "alpha_l": "1-tau+i",
      "beta_m": "1-tau-i",
      "vpoly": {
        "alpha": 3,
        "beta": 3,
        "gamma": 10
      },
      "n_presentation": "gens: s1 s2 s3\nlet t = s1 s2 s3\ncoxeter: w(3,3,10)\n(s2 s3)^5 = (s1 s2^(s3 s2))^2 = t^6\nt^3 = s1 t^3 s1 = s3 t^3 s3\n",
      "ring_gens": [
        "tau",
        "i"
      ],
      "integral_basis": [
        "1",
        "tau",
        "i",
        "i*tau"
      ],
      "cdefs": [
        [
          "c1",
          {
            "word": "(s1 (s2 s3)^5)^2",
            "scale": "-(4-gamma)/2"
          }
        ],
        [
          "c2",
          {
            "rel": "act(s1 s2, c1)",
            "seed": false
          }
        ],
        [
          "c3",
          {
            "rel": "act(s1 s3, c1)",
            "seed": false
          }
        ]
      ],
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G1",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^(s3 s2)) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^(s3 s2)",
          "expected": "2"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta*gamma + alpha*(gamma-1)^2 + (alpha*mp + beta*lp)*(gamma-1) = 2"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(1-tau+i)",
              "beta_m": "(1-tau-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(1-tau+i)",
              "beta_m": "(1-tau-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(1-tau+i)",
              "beta_m": "(1-tau-i)/5",
              "expect_count": 0
            }
          ]
        },
        {
          "kind": "quotient_structure",
          "label": "derived subgroup has index 2 and a unique involution",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "check": "derived",
          "index": 2,
          "unique_involution": true
        },
        {
          "kind": "quotient_structure",
          "label": "isomorphism-consistent with G22.G8",
          "paper_ref": "Prop 22",
          "tag": "DERIVED",
          "check": "fingerprint_match",
          "other": "G22.G8"
        },
        {
          "kind": "presentation_order",
          "label": "Prop 24 presentation enumerates to 240",
          "paper_ref": "Prop 24",
          "tag": "DERIVED",
          "order": 240,
          "cross_check_closure": true,
          "text": "gens: s1 s2 s3\nlet t = s1 s2 s3\ncoxeter: w(3,3,10)\n(s2 s3)^5 = (s1 s2^(s3 s2))^2 = t^6\nt^3 = s1 t^3 s1 = s3 t^3 s3\n"
        },
        {
          "kind": "lattice_rank",
          "label": "N has Z-rank 8",
          "paper_ref": "Prop 25",
          "tag": "PAPER",
          "rank": 8
        },
        {
          "kind": "module_closure",
          "label": "N is a Z[tau, i] module",
          "paper_ref": "Prop 25",
          "tag": "PAPER"
        },
        {
          "kind": "coefficient_ideal",
          "label": "2 in I; every generator of I is a multiple of 1+i",
          "paper_ref": "Prop 25",
          "tag": "PAPER",
          "c": "c1",
          "contains": [
            "2"
          ],
          "divisor": "1+i"
        },
        {
          "kind": "coefficient_ideal",
          "label": "I_2 generators are multiples of 1+i",
          "paper_ref": "Prop 25",
          "tag": "PAPER",
          "c": "c2",
          "divisor": "1+i"
        },
        {
          "kind": "coefficient_ideal",
          "label": "I_3 generators are multiples of 1+i",
          "paper_ref": "Prop 25",
          "tag": "PAPER",
          "c": "c3",
          "divisor": "1+i"
        },
        {
          "kind": "split_obstruction",
          "label": "non-split: 1+i divides every term of (E)",
          "paper_ref": "Prop 25",
          "tag": "PAPER",
          "mode": "ideal",
          "pi": "1+i",
          "coeffs": [
            "4-gamma",
            "lp+2",
            "mp+2"
          ],
          "cs": [
            "c1",
            "c2",
            "c3"
          ]
        },
        {
          "kind": "split_obstruction",
          "label": "non-split: no relator lift lands in N",
          "paper_ref": "Prop 25",
          "tag": "DERIVED",
          "mode": "lift"
        }
      ]
    },
    {
      "id": "G22.G2",
      "triple": [
        6,
        6,
        10
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "3",
      "beta": "3",
      "gamma": "tau+1",
      "alpha_l": "-3-tau+i",
      "beta_m": "-3-tau-i",
      "vpoly": {
        "alpha": 6,
        "beta": 6,
        "gamma": 10
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G2",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^(s3 s2)) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^(s3 s2)",
          "expected": "2"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta*gamma + alpha*(gamma-1)^2 + (alpha*mp + beta*lp)*(gamma-1) = 2"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-3-tau+i)",
              "beta_m": "(-3-tau-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-3-tau+i)",
              "beta_m": "(-3-tau-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-3-tau+i)",
              "beta_m": "(-3-tau-i)/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G3",
      "triple": [
        3,
        6,
        5
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "1",
      "beta": "3",
      "gamma": "tau",
      "alpha_l": "-tau+i",
      "beta_m": "-tau-i",
      "vpoly": {
        "alpha": 3,
        "beta": 6,
        "gamma": 5
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G3",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s3^(s2 s3)) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s3^(s2 s3)",
          "expected": "2"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "alpha*gamma + beta*(gamma-1)^2 + (alpha*mp + beta*lp)*(gamma-1) = 2"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-tau+i)",
              "beta_m": "(-tau-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-tau+i)",
              "beta_m": "(-tau-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-tau+i)",
              "beta_m": "(-tau-i)/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G4",
      "triple": [
        4,
        6,
        10
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "2",
      "beta": "3",
      "gamma": "tau+1",
      "alpha_l": "-2-tau+i*(tau-2)",
      "beta_m": "-2-tau-i*(tau-2)",
      "vpoly": {
        "alpha": 4,
        "beta": 6,
        "gamma": 10
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G4",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s1^s2) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s1^s2",
          "expected": "1"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 1"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-2-tau+i*(tau-2))",
              "beta_m": "(-2-tau-i*(tau-2))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-2-tau+i*(tau-2))",
              "beta_m": "(-2-tau-i*(tau-2))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-2-tau+i*(tau-2))",
              "beta_m": "(-2-tau-i*(tau-2))/5",
              "expect_count": 0
            }
          ]
        },
        {
          "kind": "quotient_structure",
          "label": "derived subgroup has index 2 and a unique involution",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "check": "derived",
          "index": 2,
          "unique_involution": true
        },
        {
          "kind": "quotient_structure",
          "label": "isomorphism-consistent with G22.G17",
          "paper_ref": "Prop 22",
          "tag": "DERIVED",
          "check": "fingerprint_match",
          "other": "G22.G17"
        },
        {
          "kind": "presentation_order",
          "label": "Prop 24 presentation enumerates to 240",
          "paper_ref": "Prop 24",
          "tag": "DERIVED",
          "order": 240,
          "cross_check_closure": true,
          "text": "gens: s1 s2 s3\nlet t = s1 s2 s3\ncoxeter: w(4,6,10)\n(s1 s2)^2 = (s1 s3)^3 = (s2 s3)^5 = t^10\nt^5 = s1 t^5 s1 = s3 t^5 s3\n"
        },
        {
          "kind": "quotient_structure",
          "label": "(s1's2')^2 = (s1's3')^3 = (s2's3')^5 = z central of order 2",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "check": "central_word",
          "word": "(s1 s2)^2",
          "order": 2,
          "equals": [
            "(s1 s3)^3",
            "(s2 s3)^5"
          ]
        },
        {
          "kind": "quotient_structure",
          "label": "G' acts faithfully on M'",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "check": "faithful"
        }
      ]
    },
    {
      "id": "G22.G5",
      "triple": [
        4,
        3,
        10
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "2",
      "beta": "1",
      "gamma": "tau+1",
      "alpha_l": "-tau-i*(tau-2)",
      "beta_m": "-tau+i*(tau-2)",
      "vpoly": {
        "alpha": 4,
        "beta": 3,
        "gamma": 10
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G5",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s1^s2) = 3",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s1^s2",
          "expected": "3"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 3"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-tau-i*(tau-2))",
              "beta_m": "(-tau+i*(tau-2))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-tau-i*(tau-2))",
              "beta_m": "(-tau+i*(tau-2))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-tau-i*(tau-2))",
              "beta_m": "(-tau+i*(tau-2))/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G6",
      "triple": [
        4,
        3,
        5
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "2",
      "beta": "1",
      "gamma": "tau",
      "alpha_l": "(1-tau)*(1-i)",
      "beta_m": "(1-tau)*(1+i)",
      "vpoly": {
        "alpha": 4,
        "beta": 3,
        "gamma": 5
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G6",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s1^s2) = 3",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s1^s2",
          "expected": "3"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 3"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*((1-tau)*(1-i))",
              "beta_m": "((1-tau)*(1+i))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*((1-tau)*(1-i))",
              "beta_m": "((1-tau)*(1+i))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*((1-tau)*(1-i))",
              "beta_m": "((1-tau)*(1+i))/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G7",
      "triple": [
        4,
        6,
        5
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "2",
      "beta": "3",
      "gamma": "tau",
      "alpha_l": "-1-tau+i*(tau-1)",
      "beta_m": "-1-tau-i*(tau-1)",
      "vpoly": {
        "alpha": 4,
        "beta": 6,
        "gamma": 5
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G7",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s1^s2) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s1^s2",
          "expected": "1"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 1"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-1-tau+i*(tau-1))",
              "beta_m": "(-1-tau-i*(tau-1))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-1-tau+i*(tau-1))",
              "beta_m": "(-1-tau-i*(tau-1))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-1-tau+i*(tau-1))",
              "beta_m": "(-1-tau-i*(tau-1))/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G8",
      "triple": [
        5,
        5,
        3
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau",
      "beta": "3-tau",
      "gamma": "1",
      "alpha_l": "i",
      "beta_m": "-i",
      "vpoly": {
        "alpha": 5,
        "beta": 5,
        "gamma": 3
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G8",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s1^s2) = 3",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s1^s2",
          "expected": "3"
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s2^s1) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s2^s1",
          "expected": "2"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 3"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "gamma + alpha*beta + alpha*mp + beta*lp = 2"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(i)",
              "beta_m": "(-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(i)",
              "beta_m": "(-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(i)",
              "beta_m": "(-i)/5",
              "expect_count": 0
            }
          ]
        },
        {
          "kind": "quotient_structure",
          "label": "derived subgroup has index 2 and a unique involution",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "check": "derived",
          "index": 2,
          "unique_involution": true
        },
        {
          "kind": "quotient_structure",
          "label": "isomorphism-consistent with G22.G4",
          "paper_ref": "Prop 22",
          "tag": "DERIVED",
          "check": "fingerprint_match",
          "other": "G22.G4"
        },
        {
          "kind": "presentation_order",
          "label": "Prop 24 presentation enumerates to 240",
          "paper_ref": "Prop 24",
          "tag": "DERIVED",
          "order": 240,
          "cross_check_closure": true,
          "text": "gens: s1 s2 s3\nlet t = s1 s2 s3\ncoxeter: w(5,5,3)\n(s3 s1^s2)^3 = (s3 s2^s1)^2 = t^6\nt^3 = s1 t^3 s1 = s3 t^3 s3\n"
        }
      ]
    },
    {
      "id": "G22.G9",
      "triple": [
        10,
        10,
        3
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau+1",
      "beta": "4-tau",
      "gamma": "1",
      "alpha_l": "-2+i",
      "beta_m": "-2-i",
      "vpoly": {
        "alpha": 10,
        "beta": 10,
        "gamma": 3
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G9",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s1^s2) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s1^s2",
          "expected": "1"
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s2^s1) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s2^s1",
          "expected": "2"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 1"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "gamma + alpha*beta + alpha*mp + beta*lp = 2"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-2+i)",
              "beta_m": "(-2-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-2+i)",
              "beta_m": "(-2-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-2+i)",
              "beta_m": "(-2-i)/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G10",
      "triple": [
        5,
        10,
        6
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau",
      "beta": "tau+1",
      "gamma": "3",
      "alpha_l": "-2*tau+i",
      "beta_m": "-2*tau-i",
      "vpoly": {
        "alpha": 5,
        "beta": 10,
        "gamma": 6
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G10",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^s3) = 3",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^s3",
          "expected": "3"
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s3^s2) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s3^s2",
          "expected": "1"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "alpha + beta*gamma + alpha*mp + beta*lp = 3"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 1"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-2*tau+i)",
              "beta_m": "(-2*tau-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-2*tau+i)",
              "beta_m": "(-2*tau-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-2*tau+i)",
              "beta_m": "(-2*tau-i)/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G11",
      "triple": [
        5,
        5,
        6
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau",
      "beta": "tau",
      "gamma": "3",
      "alpha_l": "1-2*tau+i*(tau-1)",
      "beta_m": "1-2*tau-i*(tau-1)",
      "vpoly": {
        "alpha": 5,
        "beta": 5,
        "gamma": 6
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G11",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^s3) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^s3",
          "expected": "2"
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s3^s2) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s3^s2",
          "expected": "2"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "alpha + beta*gamma + alpha*mp + beta*lp = 2"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 2"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(1-2*tau+i*(tau-1))",
              "beta_m": "(1-2*tau-i*(tau-1))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(1-2*tau+i*(tau-1))",
              "beta_m": "(1-2*tau-i*(tau-1))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(1-2*tau+i*(tau-1))",
              "beta_m": "(1-2*tau-i*(tau-1))/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G12",
      "triple": [
        10,
        10,
        6
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau+1",
      "beta": "tau+1",
      "gamma": "3",
      "alpha_l": "-1-2*tau+i*(tau-2)",
      "beta_m": "-1-2*tau-i*(tau-2)",
      "vpoly": {
        "alpha": 10,
        "beta": 10,
        "gamma": 6
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G12",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^s3) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^s3",
          "expected": "2"
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s3^s2) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s3^s2",
          "expected": "2"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "alpha + beta*gamma + alpha*mp + beta*lp = 2"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "beta + alpha*gamma + alpha*mp + beta*lp = 2"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-1-2*tau+i*(tau-2))",
              "beta_m": "(-1-2*tau-i*(tau-2))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-1-2*tau+i*(tau-2))",
              "beta_m": "(-1-2*tau-i*(tau-2))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-1-2*tau+i*(tau-2))",
              "beta_m": "(-1-2*tau-i*(tau-2))/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G13",
      "triple": [
        5,
        10,
        3
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau",
      "beta": "4-tau",
      "gamma": "1",
      "alpha_l": "-1+i*(tau-1)",
      "beta_m": "-1-i*(tau-1)",
      "vpoly": {
        "alpha": 5,
        "beta": 10,
        "gamma": 3
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G13",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^s3) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^s3",
          "expected": "2"
        },
        {
          "kind": "cartan_value",
          "label": "C(s2, s1^(s3 s1)) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s2",
          "w2": "s1^(s3 s1)",
          "expected": "1"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "alpha + beta*gamma + alpha*mp + beta*lp = 2"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "gamma*beta + alpha*(beta-1)^2 + (alpha*mp + beta*lp)*(beta-1) = 1"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-1+i*(tau-1))",
              "beta_m": "(-1-i*(tau-1))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-1+i*(tau-1))",
              "beta_m": "(-1-i*(tau-1))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-1+i*(tau-1))",
              "beta_m": "(-1-i*(tau-1))/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G14",
      "triple": [
        5,
        5,
        4
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau",
      "beta": "3-tau",
      "gamma": "2",
      "alpha_l": "-1+i",
      "beta_m": "-1-i",
      "vpoly": {
        "alpha": 5,
        "beta": 5,
        "gamma": 4
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G14",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s2, s3^s1) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s2",
          "w2": "s3^s1",
          "expected": "1"
        },
        {
          "kind": "cartan_value",
          "label": "C(s2, s1^(s3 s1)) = 3",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s2",
          "w2": "s1^(s3 s1)",
          "expected": "3"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "gamma + alpha*beta + alpha*mp + beta*lp = 1"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "gamma*beta + alpha*(beta-1)^2 + (alpha*mp + beta*lp)*(beta-1) = 3"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-1+i)",
              "beta_m": "(-1-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-1+i)",
              "beta_m": "(-1-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-1+i)",
              "beta_m": "(-1-i)/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G15",
      "triple": [
        10,
        10,
        4
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau+1",
      "beta": "4-tau",
      "gamma": "2",
      "alpha_l": "-3+i",
      "beta_m": "-3-i",
      "vpoly": {
        "alpha": 10,
        "beta": 10,
        "gamma": 4
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G15",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s2, s3^s1) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s2",
          "w2": "s3^s1",
          "expected": "1"
        },
        {
          "kind": "cartan_value",
          "label": "C(s2, s1^(s3 s1)) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s2",
          "w2": "s1^(s3 s1)",
          "expected": "1"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "gamma + alpha*beta + alpha*mp + beta*lp = 1"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "gamma*beta + alpha*(beta-1)^2 + (alpha*mp + beta*lp)*(beta-1) = 1"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-3+i)",
              "beta_m": "(-3-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-3+i)",
              "beta_m": "(-3-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-3+i)",
              "beta_m": "(-3-i)/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G16",
      "triple": [
        5,
        10,
        4
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau",
      "beta": "tau+1",
      "gamma": "2",
      "alpha_l": "1-2*tau+i",
      "beta_m": "1-2*tau-i",
      "vpoly": {
        "alpha": 5,
        "beta": 10,
        "gamma": 4
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G16",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^3 = -i id (i under the conjugate designation)",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^3"
          ],
          "rhs": "scalar:-i"
        },
        {
          "kind": "word_order",
          "label": "t' has order 12",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 12
        },
        {
          "kind": "cartan_value",
          "label": "C(s2, s3^(s1 s3)) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s2",
          "w2": "s3^(s1 s3)",
          "expected": "1"
        },
        {
          "kind": "cartan_value",
          "label": "C(s3, s1^(s2 s1)) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s3",
          "w2": "s1^(s2 s1)",
          "expected": "1"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "alpha*beta + gamma*(beta-1)^2 + (alpha*mp + beta*lp)*(beta-1) = 1"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "gamma*alpha + beta*(alpha-1)^2 + (alpha*mp + beta*lp)*(alpha-1) = 1"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(1-2*tau+i)",
              "beta_m": "(1-2*tau-i)/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(1-2*tau+i)",
              "beta_m": "(1-2*tau-i)/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(1-2*tau+i)",
              "beta_m": "(1-2*tau-i)/5",
              "expect_count": 0
            }
          ]
        }
      ]
    },
    {
      "id": "G22.G17",
      "triple": [
        10,
        10,
        10
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau+1",
      "beta": "tau+1",
      "gamma": "tau+1",
      "alpha_l": "1-3*tau+i*(tau-2)",
      "beta_m": "1-3*tau-i*(tau-2)",
      "vpoly": {
        "alpha": 10,
        "beta": 10,
        "gamma": 10
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G17",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^(s3 s2)) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^(s3 s2)",
          "expected": "2"
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^s3) = 3",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^s3",
          "expected": "3"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "beta*gamma + alpha*(gamma-1)^2 + (alpha*mp + beta*lp)*(gamma-1) = 2"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "alpha + beta*gamma + alpha*mp + beta*lp = 3"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(1-3*tau+i*(tau-2))",
              "beta_m": "(1-3*tau-i*(tau-2))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(1-3*tau+i*(tau-2))",
              "beta_m": "(1-3*tau-i*(tau-2))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(1-3*tau+i*(tau-2))",
              "beta_m": "(1-3*tau-i*(tau-2))/5",
              "expect_count": 0
            }
          ]
        },
        {
          "kind": "quotient_structure",
          "label": "derived subgroup has index 2 and a unique involution",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "check": "derived",
          "index": 2,
          "unique_involution": true
        }
      ]
    },
    {
      "id": "G22.G18",
      "triple": [
        5,
        5,
        10
      ],
      "field": [
        [
          "s",
          [
            -5,
            0,
            1
          ]
        ],
        [
          "i",
          [
            1,
            0,
            1
          ]
        ]
      ],
      "defs": [
        [
          "sqrt5",
          "s"
        ],
        [
          "tau",
          "(3+sqrt5)/2"
        ]
      ],
      "alpha": "tau",
      "beta": "tau",
      "gamma": "4-tau",
      "alpha_l": "-tau+i*(tau-1)",
      "beta_m": "-tau-i*(tau-1)",
      "vpoly": {
        "alpha": 5,
        "beta": 5,
        "gamma": 10
      },
      "claims": [
        {
          "kind": "delta_zero",
          "label": "Delta = 0",
          "paper_ref": "Prop 22",
          "tag": "PAPER"
        },
        {
          "kind": "param_poly",
          "label": "parameter system of form G18",
          "paper_ref": "Prop 22",
          "tag": "PAPER",
          "identities": [
            "lp*mp = gamma"
          ]
        },
        {
          "kind": "quotient_order",
          "label": "|G'| = 240",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "order": 240
        },
        {
          "kind": "matrix_identity",
          "label": "t'^10 = -id (sign-free consequence of t'^5 = +/- i id)",
          "paper_ref": "Thm 7",
          "tag": "PAPER",
          "space": "quotient",
          "words": [
            "(s1 s2 s3)^10"
          ],
          "rhs": "-I"
        },
        {
          "kind": "word_order",
          "label": "t' has order 20",
          "paper_ref": "Thm 7",
          "tag": "DERIVED",
          "space": "quotient",
          "word": "s1 s2 s3",
          "order": 20
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^s3) = 1",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^s3",
          "expected": "1"
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s2^(s3 s2)) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s2^(s3 s2)",
          "expected": "2"
        },
        {
          "kind": "cartan_value",
          "label": "C(s1, s3^(s2 s3)) = 2",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "w1": "s1",
          "w2": "s3^(s2 s3)",
          "expected": "2"
        },
        {
          "kind": "condition_table",
          "label": "Prop 23 characterization: catalog parameters satisfy it, perturbations falsify it",
          "paper_ref": "Prop 23",
          "tag": "PAPER",
          "rule": "equivalent",
          "conditions": [
            {
              "name": "A",
              "type": "delta_zero"
            },
            {
              "name": "C1",
              "type": "identity",
              "identity": "alpha + beta*gamma + alpha*mp + beta*lp = 1"
            },
            {
              "name": "C2",
              "type": "identity",
              "identity": "beta*gamma + alpha*(gamma-1)^2 + (alpha*mp + beta*lp)*(gamma-1) = 2"
            },
            {
              "name": "C3",
              "type": "identity",
              "identity": "alpha*gamma + beta*(gamma-1)^2 + (alpha*mp + beta*lp)*(gamma-1) = 2"
            }
          ],
          "instances": [
            {
              "expect_all": true
            },
            {
              "alpha_l": "2*(-tau+i*(tau-1))",
              "beta_m": "(-tau-i*(tau-1))/2",
              "expect_count": 0
            },
            {
              "alpha_l": "3*(-tau+i*(tau-1))",
              "beta_m": "(-tau-i*(tau-1))/3",
              "expect_count": 0
            },
            {
              "alpha_l": "5*(-tau+i*(tau-1))",
              "beta_m": "(-tau-i*(tau-1))/5",
              "expect_count": 0
            }
          ]
        }
      ]
    }
  ]
}
)JSON";

}  // namespace reflex::catalog_data
