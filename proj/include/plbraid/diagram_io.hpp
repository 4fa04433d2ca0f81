#pragma once

#include "plbraid/diagram.hpp"

#include <json.hpp>

#include <istream>

namespace plb {

inline LinkDiagram read_diagram(std::istream& is) {
    nlohmann::json j;
    try {
        is >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("diagram json: ") + e.what());
    }
    if (!j.contains("components")) throw ParseError("diagram: missing components");
    LinkDiagram d;
    for (const auto& comp : j["components"]) {
        std::vector<Pt> poly;
        for (const auto& v : comp)
            poly.push_back({parse_rat(v.at("x").get<std::string>()),
                            parse_rat(v.at("y").get<std::string>())});
        d.components.push_back(std::move(poly));
    }
    std::map<std::pair<SegRef, SegRef>, SegRef> assign;
    if (j.contains("crossings")) {
        for (const auto& c : j["crossings"]) {
            SegRef over{c.at("over")[0].get<int>(), c.at("over")[1].get<int>()};
            SegRef under{c.at("under")[0].get<int>(), c.at("under")[1].get<int>()};
            assign[{over, under}] = over;
        }
    }
    return recompute_crossings(d, assign);
}

} // namespace plb
