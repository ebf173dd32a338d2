#include "reflex/catalog.hpp"

// W(4,4,r) family, even r: the imprimitive quotients G(r, r/2, 2).
// K = Q(zeta_r); gamma = 2 + z + 1/z; l = -1 - z, m = -1 - 1/z.

namespace reflex::catalog_data {

const char* family_s2 = R"JSON(
{
  "family": "S2",
  "entries": [
    {
      "id": "S2.r4",
      "triple": [4, 4, 4],
      "field": [["i", [1, 0, 1]]],
      "defs": [["zeta", "i"], ["el", "-1-i"], ["em", "-1+i"]],
      "alpha": "2", "beta": "2", "gamma": "2",
      "alpha_l": "2*em", "beta_m": "2*el",
      "vpoly": {"gamma": 4},
      "n_presentation": "gens: s1 s2 s3\ns1^2\ns2^2\ns3^2\n(s2 s3)^4\n(s1 s2)^2 = (s1 s3)^2 = (s2 s3)^2\n",
      "ring_gens": ["gamma", "2*zeta"],
      "cdefs": [
        ["e1", {"word": "(s2 s3)^2 (s1 s3)^2"}],
        ["e2", {"word": "(s2 s3)^2 (s1 s2)^2"}],
        ["c1", {"word": "(s1 (s2 s3)^2)^2", "scale": "-(4-gamma)/2"}],
        ["c2", {"word": "(s2 (s3 s1)^2)^2", "scale": "-(el+2)/2"}],
        ["c3", {"word": "(s3 (s1 s2)^2)^2", "scale": "-(em+2)/2"}]
      ],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "parameter polynomials and relations (1)-(4)", "paper_ref": "§2.1", "tag": "PAPER",
         "identities": [
           "el*em = gamma", "el+em = -gamma",
           "el^2 + gamma*el + gamma = 0", "em^2 + gamma*em + gamma = 0",
           "4-gamma = (el+2)*(em+2)", "4-gamma = (el+2)+(em+2)",
           "1 = (el+1)*(em+1)", "em+2 = (el+2)*(em+1)", "el+2 = (em+2)*(el+1)",
           "(4-gamma)*(el+1) = (el+2)^2", "(4-gamma)*(em+1) = (em+2)^2",
           "1/(el+2) + 1/(em+2) = 1",
           "(el+2)^2 - (4-gamma)*(el+2) + (4-gamma) = 0"]},
        {"kind": "matrix_identity", "label": "Prop 3 relators hold in the matrix group", "paper_ref": "Prop 3", "tag": "PAPER",
         "space": "rep", "rhs": "I",
         "words": ["s1^2", "s2^2", "s3^2", "(s1 s2)^4", "(s1 s3)^4", "(s2 s3)^4", "(s1 s3^s2)^4"]},
        {"kind": "cartan_value", "label": "C(s1, s3^s2) = 2", "paper_ref": "Prop 3", "tag": "PAPER",
         "w1": "s1", "w2": "s3^s2", "expected": "2"},
        {"kind": "quotient_order", "label": "|G'| = 4r = 16", "paper_ref": "§2.2", "tag": "PAPER", "order": 16},
        {"kind": "quotient_structure", "label": "z' central of order 2", "paper_ref": "§2.2", "tag": "PAPER",
         "check": "central_word", "word": "(s1 s2)^2", "order": 2, "equals": ["(s1 s3)^2", "(s2 s3)^2"]},
        {"kind": "matrix_identity", "label": "char poly of s2's3'", "paper_ref": "§2.2", "tag": "PAPER",
         "space": "quotient", "word": "s2 s3", "charpoly": ["1", "-(gamma-2)"], "charpoly_factors": ["el+1", "em+1"]},
        {"kind": "word_order", "label": "s2's3' has order r = 4", "paper_ref": "Prop 4", "tag": "DERIVED",
         "space": "quotient", "word": "s2 s3", "order": 4},
        {"kind": "word_order", "label": "s1 s3^s2 has order 4 in the matrix group", "paper_ref": "Prop 3", "tag": "PAPER",
         "space": "rep", "word": "s1 s3^s2", "order": 4},
        {"kind": "word_order", "label": "s1 (s2 s3)^2 has infinite order (its square is a nonzero translation)", "paper_ref": "§2.3", "tag": "DERIVED",
         "space": "rep", "word": "s1 (s2 s3)^2", "order": "infinite"},
        {"kind": "line_map", "label": "eigenlines: swapped by s2',s3', stabilized by s1'", "paper_ref": "§2.2", "tag": "PAPER",
         "v1": ["el", "-em"], "v2": ["1", "-1"], "eigen1": "-(el+1)", "eigen2": "-(em+1)"},
        {"kind": "presentation_order", "label": "Prop 4 presentation enumerates to 16", "paper_ref": "Prop 4", "tag": "DERIVED",
         "order": 16, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ns1^2\ns2^2\ns3^2\n(s2 s3)^4\n(s1 s2)^2 = (s1 s3)^2 = (s2 s3)^2\n"},
        {"kind": "regeneration", "label": "Prop 2 regenerated system", "paper_ref": "Prop 2", "tag": "PAPER",
         "words": ["s1", "s2 (s1 s2)^2", "s3"],
         "alpha": "2", "beta": "2", "gamma": "4-gamma",
         "mixed_pair": ["-2*(el+2)", "-2*(em+2)"], "delta_zero": true, "involutive": true},
        {"kind": "translation_identity", "label": "c expansions over (e1, e2)", "paper_ref": "§2.3", "tag": "PAPER",
         "relations": [
           "c1 = [el+2] e1 + [em+2] e2",
           "c2 = [-(el+2)] e1 + [el*(em+2)/2] e2",
           "c3 = [em*(el+2)/2] e1 + [-(em+2)] e2"]},
        {"kind": "translation_identity", "label": "generator action on e1, e2", "paper_ref": "§2.3", "tag": "PAPER",
         "relations": [
           "act(s1, e1) = [em/(em+2)] e1 + [-2/(el+2)] e2",
           "act(s1, e2) = [-2/(em+2)] e1 + [el/(el+2)] e2",
           "act(s2, e1) = [-1] e1 + [-em] e2",
           "act(s2, e2) = e2",
           "act(s3, e1) = e1",
           "act(s3, e2) = [-el] e1 + [-1] e2"]},
        {"kind": "translation_identity", "label": "commutator generators of [N, s_i]", "paper_ref": "Prop 6", "tag": "PAPER",
         "relations": [
           "act(s1, e1) - e1 = [-2/(4-gamma)] c1",
           "act(s1, e2) - e2 = [-2/(4-gamma)] c1",
           "act(s2, e1) - e1 = [2/(el+2)] c2",
           "act(s3, e2) - e2 = [2/(em+2)] c3"]},
        {"kind": "lattice_rank", "label": "Z-rank of the computed translation lattice", "paper_ref": "Prop 5", "tag": "DERIVED", "rank": 4},
        {"kind": "module_closure", "label": "stable under gamma and 2 zeta", "paper_ref": "Prop 5", "tag": "PAPER"},
        {"kind": "split_obstruction", "label": "no splitting: lifting system infeasible", "paper_ref": "Prop 7", "tag": "PAPER",
         "mode": "linear", "cs": ["c1", "c2", "c3"],
         "pairs": [["(s1 s2)^2", "(s1 s3)^2"], ["(s1 s3)^2", "(s2 s3)^2"]],
         "trivial_words": ["(s2 s3)^4"]}
      ]
    },
    {
      "id": "S2.r6",
      "triple": [4, 4, 6],
      "field": [["z", [1, -1, 1]]],
      "defs": [["zinv", "1-z"], ["el", "-1-z"], ["em", "-1-zinv"]],
      "alpha": "2", "beta": "2", "gamma": "3",
      "alpha_l": "2*em", "beta_m": "2*el",
      "vpoly": {"gamma": 6},
      "n_presentation": "gens: s1 s2 s3\ns1^2\ns2^2\ns3^2\n(s2 s3)^6\n(s1 s2)^2 = (s1 s3)^2 = (s2 s3)^3\n",
      "ring_gens": ["gamma", "2*z"],
      "cdefs": [
        ["e1", {"word": "(s2 s3)^3 (s1 s3)^2"}],
        ["e2", {"word": "(s2 s3)^3 (s1 s2)^2"}],
        ["c1", {"word": "(s1 (s2 s3)^3)^2", "scale": "-(4-gamma)/2"}],
        ["c2", {"word": "(s2 (s3 s1)^2)^2", "scale": "-(el+2)/2"}],
        ["c3", {"word": "(s3 (s1 s2)^2)^2", "scale": "-(em+2)/2"}]
      ],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "parameter polynomials and relations (1)-(4)", "paper_ref": "§2.1", "tag": "PAPER",
         "identities": [
           "el*em = gamma", "el+em = -gamma",
           "el^2 + gamma*el + gamma = 0",
           "4-gamma = (el+2)*(em+2)", "4-gamma = (el+2)+(em+2)",
           "1 = (el+1)*(em+1)", "em+2 = (el+2)*(em+1)", "el+2 = (em+2)*(el+1)",
           "(4-gamma)*(el+1) = (el+2)^2", "(4-gamma)*(em+1) = (em+2)^2",
           "1/(el+2) + 1/(em+2) = 1"]},
        {"kind": "matrix_identity", "label": "Prop 3 relators hold in the matrix group", "paper_ref": "Prop 3", "tag": "PAPER",
         "space": "rep", "rhs": "I",
         "words": ["s1^2", "s2^2", "s3^2", "(s1 s2)^4", "(s1 s3)^4", "(s2 s3)^6", "(s1 s3^s2)^4"]},
        {"kind": "cartan_value", "label": "C(s1, s3^s2) = 2", "paper_ref": "Prop 3", "tag": "PAPER",
         "w1": "s1", "w2": "s3^s2", "expected": "2"},
        {"kind": "quotient_order", "label": "|G'| = 4r = 24", "paper_ref": "§2.2", "tag": "PAPER", "order": 24},
        {"kind": "quotient_structure", "label": "z' central of order 2", "paper_ref": "§2.2", "tag": "PAPER",
         "check": "central_word", "word": "(s1 s2)^2", "order": 2, "equals": ["(s1 s3)^2", "(s2 s3)^3"]},
        {"kind": "matrix_identity", "label": "char poly of s2's3'", "paper_ref": "§2.2", "tag": "PAPER",
         "space": "quotient", "word": "s2 s3", "charpoly": ["1", "-(gamma-2)"], "charpoly_factors": ["el+1", "em+1"]},
        {"kind": "presentation_order", "label": "Prop 4 presentation enumerates to 24", "paper_ref": "Prop 4", "tag": "DERIVED",
         "order": 24, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ns1^2\ns2^2\ns3^2\n(s2 s3)^6\n(s1 s2)^2 = (s1 s3)^2 = (s2 s3)^3\n"},
        {"kind": "regeneration", "label": "Prop 2 regenerated system", "paper_ref": "Prop 2", "tag": "PAPER",
         "words": ["s1", "s2 (s1 s2)^2", "s3"],
         "alpha": "2", "beta": "2", "gamma": "4-gamma",
         "mixed_pair": ["-2*(el+2)", "-2*(em+2)"], "delta_zero": true, "involutive": true},
        {"kind": "lattice_rank", "label": "Z-rank of the computed translation lattice", "paper_ref": "Prop 5", "tag": "DERIVED", "rank": 4},
        {"kind": "module_closure", "label": "stable under gamma and 2 zeta", "paper_ref": "Prop 5", "tag": "PAPER"},
        {"kind": "split_obstruction", "label": "no splitting: lifting system infeasible", "paper_ref": "Prop 7", "tag": "PAPER",
         "mode": "linear", "cs": ["c1", "c2", "c3"],
         "pairs": [["(s1 s2)^2", "(s1 s3)^2"], ["(s1 s3)^2", "(s2 s3)^3"]],
         "trivial_words": ["(s2 s3)^6"]}
      ]
    },
    {
      "id": "S2.r8",
      "triple": [4, 4, 8],
      "field": [["z", [1, 0, 0, 0, 1]]],
      "defs": [["zinv", "-z^3"], ["el", "-1-z"], ["em", "-1-zinv"]],
      "alpha": "2", "beta": "2", "gamma": "2 + z + zinv",
      "alpha_l": "2*em", "beta_m": "2*el",
      "vpoly": {"gamma": 8},
      "n_presentation": "gens: s1 s2 s3\ns1^2\ns2^2\ns3^2\n(s2 s3)^8\n(s1 s2)^2 = (s1 s3)^2 = (s2 s3)^4\n",
      "ring_gens": ["gamma", "2*z"],
      "cdefs": [
        ["e1", {"word": "(s2 s3)^4 (s1 s3)^2"}],
        ["e2", {"word": "(s2 s3)^4 (s1 s2)^2"}],
        ["c1", {"word": "(s1 (s2 s3)^4)^2", "scale": "-(4-gamma)/2"}],
        ["c2", {"word": "(s2 (s3 s1)^2)^2", "scale": "-(el+2)/2"}],
        ["c3", {"word": "(s3 (s1 s2)^2)^2", "scale": "-(em+2)/2"}]
      ],
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "Prop 1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "parameter polynomials and relations (1)-(4)", "paper_ref": "§2.1", "tag": "PAPER",
         "identities": [
           "el*em = gamma", "el+em = -gamma",
           "el^2 + gamma*el + gamma = 0",
           "4-gamma = (el+2)*(em+2)", "4-gamma = (el+2)+(em+2)",
           "1 = (el+1)*(em+1)", "em+2 = (el+2)*(em+1)", "el+2 = (em+2)*(el+1)",
           "(4-gamma)*(el+1) = (el+2)^2", "(4-gamma)*(em+1) = (em+2)^2",
           "1/(el+2) + 1/(em+2) = 1"]},
        {"kind": "matrix_identity", "label": "Prop 3 relators hold in the matrix group", "paper_ref": "Prop 3", "tag": "PAPER",
         "space": "rep", "rhs": "I",
         "words": ["s1^2", "s2^2", "s3^2", "(s1 s2)^4", "(s1 s3)^4", "(s2 s3)^8", "(s1 s3^s2)^4"]},
        {"kind": "cartan_value", "label": "C(s1, s3^s2) = 2", "paper_ref": "Prop 3", "tag": "PAPER",
         "w1": "s1", "w2": "s3^s2", "expected": "2"},
        {"kind": "quotient_order", "label": "|G'| = 4r = 32", "paper_ref": "§2.2", "tag": "PAPER", "order": 32},
        {"kind": "quotient_structure", "label": "z' central of order 2", "paper_ref": "§2.2", "tag": "PAPER",
         "check": "central_word", "word": "(s1 s2)^2", "order": 2, "equals": ["(s1 s3)^2", "(s2 s3)^4"]},
        {"kind": "matrix_identity", "label": "char poly of s2's3'", "paper_ref": "§2.2", "tag": "PAPER",
         "space": "quotient", "word": "s2 s3", "charpoly": ["1", "-(gamma-2)"], "charpoly_factors": ["el+1", "em+1"]},
        {"kind": "presentation_order", "label": "Prop 4 presentation enumerates to 32", "paper_ref": "Prop 4", "tag": "DERIVED",
         "order": 32, "cross_check_closure": true,
         "text": "gens: s1 s2 s3\ns1^2\ns2^2\ns3^2\n(s2 s3)^8\n(s1 s2)^2 = (s1 s3)^2 = (s2 s3)^4\n"},
        {"kind": "regeneration", "label": "Prop 2 regenerated system", "paper_ref": "Prop 2", "tag": "PAPER",
         "words": ["s1", "s2 (s1 s2)^2", "s3"],
         "alpha": "2", "beta": "2", "gamma": "4-gamma",
         "mixed_pair": ["-2*(el+2)", "-2*(em+2)"], "delta_zero": true, "involutive": true},
        {"kind": "lattice_rank", "label": "Z-rank of the computed translation lattice", "paper_ref": "Prop 5", "tag": "DERIVED", "rank": 8},
        {"kind": "module_closure", "label": "stable under gamma and 2 zeta", "paper_ref": "Prop 5", "tag": "PAPER"},
        {"kind": "split_obstruction", "label": "no splitting: lifting system infeasible", "paper_ref": "Prop 7", "tag": "PAPER",
         "mode": "linear", "cs": ["c1", "c2", "c3"],
         "pairs": [["(s1 s2)^2", "(s1 s3)^2"], ["(s1 s3)^2", "(s2 s3)^4"]],
         "trivial_words": ["(s2 s3)^8"]}
      ]
    }
  ]
}
)JSON";

}  // namespace reflex::catalog_data
