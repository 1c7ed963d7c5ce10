#include "lattheta/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#ifndef LATTHETA_DATA_DIR
#define LATTHETA_DATA_DIR "data"
#endif

namespace lattheta {

std::vector<std::pair<RootSystem, RootSystem>> Catalog::inclusion_pairs() const {
    std::vector<std::pair<RootSystem, RootSystem>> pairs;
    for (const auto& p : odd24_pairs)
        pairs.emplace_back(RootSystem::parse(p.r), RootSystem::parse(p.s));
    return pairs;
}

FamilyDescriptor Catalog::even24_family(const std::string& roots) const {
    for (const auto& e : even24) {
        if (e.roots == roots) {
            if (e.h == 0) return FamilyDescriptor::leech();
            return FamilyDescriptor::niemeier(e.h);
        }
    }
    throw domain_error("no even rank-24 lattice with root system " + roots);
}

Catalog load_catalog(const std::optional<std::string>& path) {
    std::string file;
    if (path) {
        file = *path;
    } else if (const char* env = std::getenv("LATTHETA_CATALOG")) {
        file = env;
    } else {
        file = std::string(LATTHETA_DATA_DIR) + "/catalog.json";
    }
    std::ifstream in(file);
    if (!in) throw domain_error("cannot open catalog file: " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    auto j = nlohmann::json::parse(buf.str());

    Catalog cat;
    for (const auto& e : j.at("even24"))
        cat.even24.push_back({e.at("roots").get<std::string>(), e.at("h").get<int>()});
    for (const auto& e : j.at("long_shadow"))
        cat.long_shadow.push_back(
            {e.at("roots").get<std::string>(), e.at("n").get<int>(), e.at("h").get<int>()});
    for (const auto& e : j.at("odd24_pairs"))
        cat.odd24_pairs.push_back({e.at("R").get<std::string>(), e.at("S").get<std::string>(),
                                   e.at("index").get<int>()});
    return cat;
}

}  // namespace lattheta
