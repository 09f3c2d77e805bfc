// JSON encodings for exact forms, points, and numeric values.  Exact
// rationals travel as decimal strings ("p/q") so payloads stay lossless.
#pragma once

#include <string>

#include <json.hpp>

#include "waring_eig/nform.hpp"

namespace waring_eig {

inline nlohmann::json gauss_to_json(const GaussRat& z) {
    return nlohmann::json{{"re", rat_str(z.re)}, {"im", rat_str(z.im)}};
}

inline GaussRat gauss_from_json(const nlohmann::json& j) {
    return GaussRat(rat_from_string(j.at("re").get<std::string>()),
                    rat_from_string(j.at("im").get<std::string>()));
}

inline nlohmann::json cfloat_to_json(const CFloat& z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

inline nlohmann::json form_to_json(const NForm& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : f.terms()) {
        nlohmann::json t;
        t["alpha"] = alpha;
        t["re"] = rat_str(c.re);
        t["im"] = rat_str(c.im);
        terms.push_back(std::move(t));
    }
    return nlohmann::json{{"nvars", f.nvars()}, {"degree", f.degree()}, {"terms", terms}};
}

inline nlohmann::json form_to_json(const BForm& f) { return form_to_json(to_nform(f)); }

inline NForm form_from_json(const nlohmann::json& j) {
    NForm f(j.at("nvars").get<unsigned>(), j.at("degree").get<unsigned>());
    for (const auto& t : j.at("terms")) {
        Expo alpha = t.at("alpha").get<Expo>();
        f.add_term(alpha, GaussRat(rat_from_string(t.at("re").get<std::string>()),
                                   rat_from_string(t.at("im").get<std::string>())));
    }
    return f;
}

inline BForm bform_from_json(const nlohmann::json& j) { return to_bform(form_from_json(j)); }

inline nlohmann::json point_to_json(const ProjPoint& p) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : p.coords) coords.push_back(gauss_to_json(c));
    return nlohmann::json{{"coords", coords}};
}

inline ProjPoint point_from_json(const nlohmann::json& j) {
    std::vector<GaussRat> coords;
    for (const auto& c : j.at("coords")) coords.push_back(gauss_from_json(c));
    return ProjPoint(coords);
}

inline nlohmann::json point_to_json(const ProjPointC& p) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : p.coords) coords.push_back(cfloat_to_json(c));
    return nlohmann::json{{"coords", coords}};
}

inline nlohmann::json linform_to_json(const LinForm& l) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : l.coords) coords.push_back(gauss_to_json(c));
    return nlohmann::json{{"coords", coords}};
}

}  // namespace waring_eig
