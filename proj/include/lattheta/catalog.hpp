#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lattheta/rootsys.hpp"
#include "lattheta/strength.hpp"

namespace lattheta {

/// Paper-derived lattice data: the rank-24 even lattices, the long-shadow
/// classification, and the strongly eutactic odd rank-24 inclusion pairs.
struct Catalog {
    struct Even24 {
        std::string roots;  // "O24" is the Leech lattice
        int h = 0;
    };
    struct LongShadow {
        std::string roots;
        int n = 0;
        int h = 0;
    };
    struct Odd24Pair {
        std::string r;  // Λ_2
        std::string s;  // root system of the even neighbour containing Sh(Λ)_2
        int index = 0;  // opaque catalogue label
    };

    std::vector<Even24> even24;
    std::vector<LongShadow> long_shadow;
    std::vector<Odd24Pair> odd24_pairs;

    std::vector<std::pair<RootSystem, RootSystem>> inclusion_pairs() const;
    /// FamilyDescriptor for an even rank-24 lattice by root system name.
    FamilyDescriptor even24_family(const std::string& roots) const;
};

/// Loads the catalog: explicit path, else $LATTHETA_CATALOG, else the
/// data directory baked in at build time.
Catalog load_catalog(const std::optional<std::string>& path = std::nullopt);

}  // namespace lattheta
