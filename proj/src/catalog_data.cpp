#include "reflex/catalog.hpp"

// Catalog documents, one JSON document per family. Kept as source so the
// binary is self-contained; `reflex rep --print-matrices` round-trips the same
// shapes.

namespace reflex {

namespace catalog_data {

extern const char* family_s2;
extern const char* family_g12;
extern const char* family_s4a;
extern const char* family_s4bc;
extern const char* family_g13;
extern const char* family_k5;
extern const char* family_g22;
extern const char* family_controls;

}  // namespace catalog_data

const std::vector<std::string>& catalog_documents() {
    static const std::vector<std::string> docs = {
        catalog_data::family_s2,  catalog_data::family_g12, catalog_data::family_s4a,
        catalog_data::family_s4bc, catalog_data::family_g13, catalog_data::family_k5,
        catalog_data::family_g22, catalog_data::family_controls,
    };
    return docs;
}

}  // namespace reflex
