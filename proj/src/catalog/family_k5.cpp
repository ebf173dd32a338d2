#include "reflex/catalog.hpp"

// Section-5 auxiliary families over the four quartic fields K1..K4' and the
// real field Q(sqrt5). All have infinite linear part; the +/- twins of the
// (3,3,5) family are exchanged by the Galois twist over Q(5^(1/4), i).

namespace reflex::catalog_data {

const char* family_k5 = R"JSON(
{
  "family": "K5",
  "entries": [
    {
      "id": "K1.A1p",
      "triple": [3, 3, 5],
      "field": [["w", [-5, 0, 0, 0, 1]]],
      "defs": [["sqrt5", "-(w^2)"], ["tau", "(3+sqrt5)/2"], ["el", "2-tau+w"], ["em", "2-tau-w"]],
      "alpha": "1", "beta": "1", "gamma": "tau",
      "alpha_l": "em", "beta_m": "el",
      "vpoly": {"alpha": 3, "beta": 3, "gamma": 5},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,1,tau; 2-tau+w, 2-tau-w)", "paper_ref": "§5.1.1", "tag": "PAPER",
         "identities": ["el*em = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 5-tau certifies G' infinite",
         "paper_ref": "§5.1.1", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "5-tau"}
      ]
    },
    {
      "id": "K1.A1m",
      "triple": [3, 3, 5],
      "field": [["w", [-5, 0, 0, 0, 1]]],
      "defs": [["sqrt5", "w^2"], ["tau", "(3-sqrt5)/2"], ["el", "2-tau+w"], ["em", "2-tau-w"]],
      "alpha": "1", "beta": "1", "gamma": "tau",
      "alpha_l": "em", "beta_m": "el",
      "vpoly": {"alpha": 3, "beta": 3, "gamma": 5},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,1,tau-; 2-tau-+w, 2-tau--w)", "paper_ref": "§5.1.1", "tag": "PAPER",
         "identities": ["el*em = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 5-tau- certifies G' infinite",
         "paper_ref": "§5.1.1", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "5-tau"},
        {"kind": "galois_twin", "label": "theta twists A1- onto A1+ over Q(5^(1/4), i)", "paper_ref": "§5.1.1", "tag": "PAPER",
         "other": "K1.A1p",
         "tower": [["r", [-5, 0, 0, 0, 1]], ["i", [1, 0, 1]]],
         "defs_self": [["w", "r"]],
         "defs_other": [["w", "i*r"]],
         "theta": ["i*r", "i"]}
      ]
    },
    {
      "id": "K1.A2p",
      "triple": [6, 6, 5],
      "field": [["w", [-5, 0, 0, 0, 1]]],
      "defs": [["sqrt5", "-(w^2)"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "3", "beta": "3", "gamma": "tau",
      "alpha_l": "-2-tau-w", "beta_m": "-2-tau+w",
      "vpoly": {"alpha": 6, "beta": 6, "gamma": 5},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(3,3,tau; -2-tau+w, -2-tau-w)", "paper_ref": "§5.1.1", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = tau-1 certifies G' infinite",
         "paper_ref": "§5.1.1", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "tau-1"}
      ]
    },
    {
      "id": "K1.A2m",
      "triple": [6, 6, 5],
      "field": [["w", [-5, 0, 0, 0, 1]]],
      "defs": [["sqrt5", "w^2"], ["tau", "(3-sqrt5)/2"]],
      "alpha": "3", "beta": "3", "gamma": "tau",
      "alpha_l": "-2-tau-w", "beta_m": "-2-tau+w",
      "vpoly": {"alpha": 6, "beta": 6, "gamma": 5},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(3,3,tau-; -2-tau-+w, -2-tau--w)", "paper_ref": "§5.1.1", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = tau--1 certifies G' infinite",
         "paper_ref": "§5.1.1", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "tau-1"}
      ]
    },
    {
      "id": "K1.A3p",
      "triple": [3, 6, 10],
      "field": [["w", [-5, 0, 0, 0, 1]]],
      "defs": [["sqrt5", "-(w^2)"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "1", "beta": "3", "gamma": "4-tau",
      "alpha_l": "-4+tau+w", "beta_m": "-4+tau-w",
      "vpoly": {"alpha": 3, "beta": 6, "gamma": 10},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,3,4-tau; -4+tau+w, -4+tau-w)", "paper_ref": "§5.1.1", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 5-tau certifies G' infinite",
         "paper_ref": "§5.1.1", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "5-tau"},
        {"kind": "regeneration", "label": "A3 regenerates the (6,6,5) system of A2", "paper_ref": "§5.1.1", "tag": "DERIVED",
         "words": ["s1 (s1 s3)^3", "s2", "s3 (s1 s3)^3"],
         "alpha": "3", "beta": "3", "gamma": "tau", "delta_zero": true}
      ]
    },
    {
      "id": "K1.A3m",
      "triple": [3, 6, 10],
      "field": [["w", [-5, 0, 0, 0, 1]]],
      "defs": [["sqrt5", "w^2"], ["tau", "(3-sqrt5)/2"]],
      "alpha": "1", "beta": "3", "gamma": "4-tau",
      "alpha_l": "-4+tau+w", "beta_m": "-4+tau-w",
      "vpoly": {"alpha": 3, "beta": 6, "gamma": 10},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.1", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(1,3,4-tau-; -4+tau-+w, -4+tau--w)", "paper_ref": "§5.1.1", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 5-tau- certifies G' infinite",
         "paper_ref": "§5.1.1", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "5-tau"}
      ]
    },
    {
      "id": "K2.B1p",
      "triple": [5, 5, 3],
      "field": [["w", [-144, 0, -12, 0, 1]]],
      "defs": [["sqrt5", "(6-w^2)/6"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau", "beta": "tau", "gamma": "1",
      "alpha_l": "-sqrt5-w/2", "beta_m": "-sqrt5+w/2",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 3},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.2", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau,tau,1; -sqrt5+w/2, -sqrt5-w/2)", "paper_ref": "§5.1.2", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "alpha*mp + beta*lp = -2*sqrt5"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 3-sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.2", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "3-sqrt5"}
      ]
    },
    {
      "id": "K2.B1m",
      "triple": [5, 5, 3],
      "field": [["w", [-144, 0, -12, 0, 1]]],
      "defs": [["sqrt5", "(w^2-6)/6"], ["tau", "(3-sqrt5)/2"]],
      "alpha": "tau", "beta": "tau", "gamma": "1",
      "alpha_l": "sqrt5-w/2", "beta_m": "sqrt5+w/2",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 3},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.2", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau-,tau-,1; sqrt5+w/2, sqrt5-w/2)", "paper_ref": "§5.1.2", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 3+sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.2", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "3+sqrt5"}
      ]
    },
    {
      "id": "K2.B2p",
      "triple": [10, 10, 3],
      "field": [["w", [-144, 0, -12, 0, 1]]],
      "defs": [["sqrt5", "(w^2-6)/6"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau+1", "beta": "tau+1", "gamma": "1",
      "alpha_l": "3-2*alpha-w/2", "beta_m": "3-2*alpha+w/2",
      "vpoly": {"alpha": 10, "beta": 10, "gamma": 3},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.2", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(alpha,alpha,1; 3-2alpha+w/2, 3-2alpha-w/2)", "paper_ref": "§5.1.2", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "alpha*mp + beta*lp = 6-4*alpha"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 1-sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.2", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "1-sqrt5"}
      ]
    },
    {
      "id": "K2.B2m",
      "triple": [10, 10, 3],
      "field": [["w", [-144, 0, -12, 0, 1]]],
      "defs": [["sqrt5", "(6-w^2)/6"], ["tau", "(3-sqrt5)/2"]],
      "alpha": "tau+1", "beta": "tau+1", "gamma": "1",
      "alpha_l": "3-2*alpha-w/2", "beta_m": "3-2*alpha+w/2",
      "vpoly": {"alpha": 10, "beta": 10, "gamma": 3},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.2", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(alpha-,alpha-,1; ...)", "paper_ref": "§5.1.2", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 1+sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.2", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "1+sqrt5"}
      ]
    },
    {
      "id": "K2.B3p",
      "triple": [5, 10, 6],
      "field": [["w", [-144, 0, -12, 0, 1]]],
      "defs": [["sqrt5", "(w^2-6)/6"]],
      "alpha": "(3-sqrt5)/2", "beta": "(5+sqrt5)/2", "gamma": "3",
      "alpha_l": "-3+w/2", "beta_m": "-3-w/2",
      "vpoly": {"alpha": 5, "beta": 10, "gamma": 6},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0 (mixed products sign-corrected)", "paper_ref": "§5.1.2", "tag": "DERIVED"},
        {"kind": "param_poly", "label": "P(tau-, 4-tau-, 3; -3+w/2, -3-w/2)", "paper_ref": "§5.1.2", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 3+sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.2", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "3+sqrt5"}
      ]
    },
    {
      "id": "K2.B3m",
      "triple": [5, 10, 6],
      "field": [["w", [-144, 0, -12, 0, 1]]],
      "defs": [["sqrt5", "(6-w^2)/6"]],
      "alpha": "(3+sqrt5)/2", "beta": "(5-sqrt5)/2", "gamma": "3",
      "alpha_l": "-3+w/2", "beta_m": "-3-w/2",
      "vpoly": {"alpha": 5, "beta": 10, "gamma": 6},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0 (mixed products sign-corrected)", "paper_ref": "§5.1.2", "tag": "DERIVED"},
        {"kind": "param_poly", "label": "P(tau, 4-tau, 3; -3+w/2, -3-w/2)", "paper_ref": "§5.1.2", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 3-sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.2", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "3-sqrt5"}
      ]
    },
    {
      "id": "K3.C1p",
      "triple": [5, 5, 5],
      "field": [["w", [-16, 0, -4, 0, 1]]],
      "defs": [["sqrt5", "(2-w^2)/2"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau", "beta": "tau", "gamma": "tau",
      "alpha_l": "4-3*tau-(sqrt5/2)*w", "beta_m": "4-3*tau+(sqrt5/2)*w",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 5},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.3", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau,tau,tau; 4-3tau +/- sqrt(5(2-tau)))", "paper_ref": "§5.1.3", "tag": "PAPER",
         "identities": ["lp*mp = gamma", "(sqrt5*w/2)^2 = 5*(2-tau)"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 4-sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.3", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "4-sqrt5"}
      ]
    },
    {
      "id": "K3.C1m",
      "triple": [5, 5, 5],
      "field": [["w", [-16, 0, -4, 0, 1]]],
      "defs": [["sqrt5", "(w^2-2)/2"], ["tau", "(3-sqrt5)/2"]],
      "alpha": "tau", "beta": "tau", "gamma": "tau",
      "alpha_l": "4-3*tau-(sqrt5/2)*w", "beta_m": "4-3*tau+(sqrt5/2)*w",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 5},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.3", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau-,tau-,tau-; 4-3tau- +/- sqrt(5(2-tau-)))", "paper_ref": "§5.1.3", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 4+sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.3", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "4+sqrt5"}
      ]
    },
    {
      "id": "K3.C2p",
      "triple": [10, 10, 5],
      "field": [["w", [-16, 0, 4, 0, 1]]],
      "defs": [["sqrt5", "(w^2+2)/2"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau+1", "beta": "tau+1", "gamma": "(3-sqrt5)/2",
      "alpha_l": "-1-tau-(5+sqrt5)*w/4", "beta_m": "-1-tau+(5+sqrt5)*w/4",
      "vpoly": {"alpha": 10, "beta": 10, "gamma": 5},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0 (mixed products reconstructed)", "paper_ref": "§5.1.3", "tag": "DERIVED"},
        {"kind": "param_poly", "label": "P(tau+1,tau+1,tau-; -1-tau +/- theta)", "paper_ref": "§5.1.3", "tag": "DERIVED",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = -sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.3", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "-sqrt5"}
      ]
    },
    {
      "id": "K3.C2m",
      "triple": [10, 10, 5],
      "field": [["w", [-16, 0, 4, 0, 1]]],
      "defs": [["sqrt5", "-(w^2+2)/2"], ["tau", "(3-sqrt5)/2"]],
      "alpha": "tau+1", "beta": "tau+1", "gamma": "(3+sqrt5)/2",
      "alpha_l": "-1-tau-(5-sqrt5)*w/4", "beta_m": "-1-tau+(5-sqrt5)*w/4",
      "vpoly": {"alpha": 10, "beta": 10, "gamma": 5},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0 (mixed products reconstructed)", "paper_ref": "§5.1.3", "tag": "DERIVED"},
        {"kind": "param_poly", "label": "P(tau-+1,tau-+1,tau; -1-tau- +/- theta)", "paper_ref": "§5.1.3", "tag": "DERIVED",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.3", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "sqrt5"}
      ]
    },
    {
      "id": "K4.D1p",
      "triple": [5, 5, 4],
      "field": [["w", [-4, 0, 2, 0, 1]]],
      "defs": [["sqrt5", "-(w^2+1)"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau", "beta": "tau", "gamma": "2",
      "alpha_l": "-1-sqrt5-w", "beta_m": "-1-sqrt5+w",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 4},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.4", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau,tau,2; -1-sqrt5 +/- w)", "paper_ref": "§5.1.4", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s2, s3^s1) = (7-sqrt5)/2 certifies G' infinite",
         "paper_ref": "§5.1.4", "tag": "DERIVED", "w1": "s2", "w2": "s3^s1", "expected_c": "(7-sqrt5)/2"}
      ]
    },
    {
      "id": "K4.D1m",
      "triple": [5, 5, 4],
      "field": [["w", [-4, 0, 2, 0, 1]]],
      "defs": [["sqrt5", "w^2+1"], ["tau", "(3-sqrt5)/2"]],
      "alpha": "tau", "beta": "tau", "gamma": "2",
      "alpha_l": "-1+sqrt5-w", "beta_m": "-1+sqrt5+w",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 4},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.4", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau-,tau-,2; -1+sqrt5 +/- w)", "paper_ref": "§5.1.4", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s2, s3^s1) = (7+sqrt5)/2 certifies G' infinite",
         "paper_ref": "§5.1.4", "tag": "DERIVED", "w1": "s2", "w2": "s3^s1", "expected_c": "(7+sqrt5)/2"}
      ]
    },
    {
      "id": "K4.D2p",
      "triple": [10, 10, 4],
      "field": [["w", [-4, 0, 2, 0, 1]]],
      "defs": [["sqrt5", "-(w^2+1)"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "4-tau", "beta": "4-tau", "gamma": "2",
      "alpha_l": "-6+2*tau-w", "beta_m": "-6+2*tau+w",
      "vpoly": {"alpha": 10, "beta": 10, "gamma": 4},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.4", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(4-tau,4-tau,2; -6+2tau +/- w)", "paper_ref": "§5.1.4", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s2, s3^s1) = 5-tau certifies G' infinite",
         "paper_ref": "§5.1.4", "tag": "DERIVED", "w1": "s2", "w2": "s3^s1", "expected_c": "5-tau"}
      ]
    },
    {
      "id": "K4.D3p",
      "triple": [5, 10, 4],
      "field": [["w", [-4, 0, 2, 0, 1]]],
      "defs": [["sqrt5", "-(w^2+1)"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau", "beta": "4-tau", "gamma": "2",
      "alpha_l": "-2+w", "beta_m": "-2-w",
      "vpoly": {"alpha": 5, "beta": 10, "gamma": 4},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.4", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau,4-tau,2; -2+w, -2-w)", "paper_ref": "§5.1.4", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s2, s3^s1) = tau-1 certifies G' infinite",
         "paper_ref": "§5.1.4", "tag": "DERIVED", "w1": "s2", "w2": "s3^s1", "expected_c": "tau-1"}
      ]
    },
    {
      "id": "K4p.D4p",
      "triple": [10, 10, 10],
      "field": [["w", [-4, 0, -2, 0, 1]]],
      "defs": [["sqrt5", "w^2-1"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau+1", "beta": "tau+1", "gamma": "4-tau",
      "alpha_l": "-2-tau-w", "beta_m": "-2-tau+w",
      "vpoly": {"alpha": 10, "beta": 10, "gamma": 10},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.4", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau+1,tau+1,4-tau; -2-tau +/- w)", "paper_ref": "§5.1.4", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 2-tau certifies G' infinite",
         "paper_ref": "§5.1.4", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "2-tau"}
      ]
    },
    {
      "id": "K4p.D5p",
      "triple": [5, 5, 10],
      "field": [["w", [-4, 0, -2, 0, 1]]],
      "defs": [["sqrt5", "w^2-1"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau", "beta": "3-tau", "gamma": "tau+1",
      "alpha_l": "-tau+w", "beta_m": "-tau-w",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 10},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.4", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau,tau-,tau+1; -tau +/- w)", "paper_ref": "§5.1.4", "tag": "PAPER",
         "identities": ["lp*mp = gamma"], "distinct": [["alpha", "beta"]]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 1-sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.4", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "1-sqrt5"}
      ]
    },
    {
      "id": "K4p.D6p",
      "triple": [5, 5, 10],
      "field": [["w", [-4, 0, -2, 0, 1]]],
      "defs": [["sqrt5", "w^2-1"], ["taum", "(3-sqrt5)/2"]],
      "alpha": "taum", "beta": "taum", "gamma": "taum+1",
      "alpha_l": "3-3*taum-w", "beta_m": "3-3*taum+w",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 10},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.4", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau-,tau-,tau-+1; 3-3tau- +/- w)", "paper_ref": "§5.1.4", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = (7+sqrt5)/2 certifies G' infinite",
         "paper_ref": "§5.1.4", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "(7+sqrt5)/2"}
      ]
    },
    {
      "id": "E.E1",
      "triple": [5, 5, 6],
      "field": [["s", [-5, 0, 1]]],
      "defs": [["sqrt5", "s"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau", "beta": "3-tau", "gamma": "3",
      "alpha_l": "-1", "beta_m": "-3",
      "vpoly": {"alpha": 5, "beta": 5, "gamma": 6},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.5", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(tau,3-tau,3; -1,-3)", "paper_ref": "§5.1.5", "tag": "PAPER",
         "identities": ["lp*mp = gamma"], "distinct": [["alpha", "beta"]]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 2-sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.5", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "2-sqrt5"}
      ]
    },
    {
      "id": "E.E2",
      "triple": [10, 10, 6],
      "field": [["s", [-5, 0, 1]]],
      "defs": [["sqrt5", "s"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "4-tau", "beta": "tau+1", "gamma": "3",
      "alpha_l": "-3", "beta_m": "-5",
      "vpoly": {"alpha": 10, "beta": 10, "gamma": 6},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0", "paper_ref": "§5.1.5", "tag": "PAPER"},
        {"kind": "param_poly", "label": "P(4-tau,tau+1,3; -3,-5)", "paper_ref": "§5.1.5", "tag": "PAPER",
         "identities": ["lp*mp = gamma"], "distinct": [["alpha", "beta"]]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 2+sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.5", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "2+sqrt5"}
      ]
    },
    {
      "id": "E.E3",
      "triple": [5, 10, 3],
      "field": [["s", [-5, 0, 1]]],
      "defs": [["sqrt5", "s"], ["tau", "(3+sqrt5)/2"]],
      "alpha": "tau", "beta": "tau+1", "gamma": "1",
      "alpha_l": "1-2*tau", "beta_m": "3-2*tau",
      "vpoly": {"alpha": 5, "beta": 10, "gamma": 3},
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0 (mixed products sign-corrected)", "paper_ref": "§5.1.5", "tag": "DERIVED"},
        {"kind": "param_poly", "label": "P(tau,tau+1,1; 1-2tau, 3-2tau)", "paper_ref": "§5.1.5", "tag": "PAPER",
         "identities": ["lp*mp = gamma"]},
        {"kind": "infinite_commutator_witness", "label": "C(s1, s2^s3) = 2-sqrt5 certifies G' infinite",
         "paper_ref": "§5.1.5", "tag": "DERIVED", "w1": "s1", "w2": "s2^s3", "expected_c": "2-sqrt5"}
      ]
    }
  ]
}
)JSON";

}  // namespace reflex::catalog_data
