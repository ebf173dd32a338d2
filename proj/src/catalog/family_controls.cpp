#include "reflex/catalog.hpp"

// Negative controls: deliberately irreducible parameter systems. Excluded from
// the default verification run; exercised by the failure-path tests.

namespace reflex::catalog_data {

const char* family_controls = R"JSON(
{
  "family": "CTRL",
  "entries": [
    {
      "id": "CTRL.irred1",
      "triple": [3, 3, 4],
      "field": [],
      "defs": [],
      "alpha": "1", "beta": "1", "gamma": "2",
      "alpha_l": "-1", "beta_m": "-2",
      "negative_control": true,
      "claims": [
        {"kind": "delta_zero", "label": "Delta = 0 (expected to fail)", "paper_ref": "Prop 1", "tag": "TRIVIAL"}
      ]
    },
    {
      "id": "CTRL.irred2",
      "triple": [3, 3, 4],
      "field": [],
      "defs": [],
      "alpha": "1", "beta": "1", "gamma": "2",
      "alpha_l": "-1", "beta_m": "-2",
      "negative_control": true,
      "claims": [
        {"kind": "delta_zero", "label": "Delta != 0 for the control", "paper_ref": "Prop 1", "tag": "TRIVIAL", "expect": "nonzero"}
      ]
    }
  ]
}
)JSON";

}  // namespace reflex::catalog_data
