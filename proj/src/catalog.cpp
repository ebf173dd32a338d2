#include "reflex/catalog.hpp"

#include <algorithm>

namespace reflex {

namespace {

CatalogEntry parse_entry(const nlohmann::json& j, const std::string& family) {
    CatalogEntry e;
    e.raw = j;
    e.family = family;
    e.id = j.at("id").get<std::string>();
    auto t = j.at("triple");
    e.triple = {t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
    for (const auto& g : j.at("field")) {
        FieldGen fg;
        fg.name = g.at(0).get<std::string>();
        for (const auto& c : g.at(1)) fg.minpoly.push_back(c.get<long>());
        e.fieldspec.gens.push_back(std::move(fg));
    }
    if (j.contains("defs"))
        for (const auto& d : j.at("defs"))
            e.defs.push_back({d.at(0).get<std::string>(), d.at(1).get<std::string>()});
    e.alpha = j.at("alpha").get<std::string>();
    e.beta = j.at("beta").get<std::string>();
    e.gamma = j.at("gamma").get<std::string>();
    e.alpha_l = j.at("alpha_l").get<std::string>();
    e.beta_m = j.at("beta_m").get<std::string>();
    if (j.contains("vpoly"))
        for (auto it = j.at("vpoly").begin(); it != j.at("vpoly").end(); ++it)
            e.vpoly[it.key()] = it.value().get<int>();
    if (j.contains("integral_basis"))
        for (const auto& b : j.at("integral_basis")) e.integral_basis.push_back(b.get<std::string>());
    if (j.contains("ring_gens"))
        for (const auto& r : j.at("ring_gens")) e.ring_gens.push_back(r.get<std::string>());
    if (j.contains("cdefs")) e.cdefs = j.at("cdefs");
    if (j.contains("n_presentation")) e.n_presentation = j.at("n_presentation").get<std::string>();
    if (j.contains("negative_control")) e.negative_control = j.at("negative_control").get<bool>();
    if (j.contains("claims")) e.claims = j.at("claims");
    if (e.claims.is_null()) e.claims = nlohmann::json::array();
    return e;
}

std::vector<CatalogEntry> load_all() {
    std::vector<CatalogEntry> out;
    for (const auto& doc : catalog_documents()) {
        nlohmann::json j = nlohmann::json::parse(doc);
        std::string family = j.at("family").get<std::string>();
        for (const auto& je : j.at("entries")) out.push_back(parse_entry(je, family));
    }
    // ids must be unique
    std::vector<std::string> ids;
    for (const auto& e : out) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw CatalogError("duplicate catalog id");
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = load_all();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw CatalogError("unknown catalog entry: " + id);
}

std::vector<std::string> catalog_ids(bool include_controls) {
    std::vector<std::string> out;
    for (const auto& e : catalog_entries())
        if (include_controls || !e.negative_control) out.push_back(e.id);
    return out;
}

}  // namespace reflex
