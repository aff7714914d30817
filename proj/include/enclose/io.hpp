#pragma once

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>

#include "enclose/instance.hpp"
#include "enclose/solution.hpp"

namespace enclose {

namespace detail {

inline Rational rational_from_string(const std::string& s) {
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!digits(num) || !digits(den)) throw ParseError("bad rational '" + s + "'");
    try {
        return Rational(Int(num), Int(den));
    } catch (const DegenerateInput&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

inline Rational coordinate(const nlohmann::json& j) {
    if (j.is_number_float()) throw ParseError("floating point coordinate; use integers or \"p/q\"");
    if (j.is_number_unsigned()) {
        if (j.get<std::uint64_t>() > std::uint64_t(std::numeric_limits<std::int64_t>::max()))
            throw ParseError("integer coordinate too large; use a \"p/q\" string");
        return Rational(Int(j.get<std::uint64_t>()));
    }
    if (j.is_number_integer()) return Rational(Int(static_cast<long>(j.get<std::int64_t>())));
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw ParseError("coordinate must be an integer or a \"p/q\" string");
}

inline Point point(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be a two-element array");
    return {coordinate(j[0]), coordinate(j[1])};
}

inline nlohmann::json coordinate_json(const Rational& r) {
    if (r.is_integer() && r.num().fits_slong_p())
        return nlohmann::json(static_cast<std::int64_t>(r.num().get_si()));
    std::string s = r.num().get_str();
    if (!r.is_integer()) s += "/" + r.den().get_str();
    return nlohmann::json(s);
}

inline nlohmann::json point_json(const Point& p) {
    return nlohmann::json::array({coordinate_json(p.x), coordinate_json(p.y)});
}

} // namespace detail

// parse without validation; callers decide whether to validate_instance
inline Instance parse_instance_text(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("instance is not a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing kind");
    Instance inst;
    std::string kind = j["kind"].get<std::string>();
    if (kind == "unit_disks")
        inst.obstacles.kind = ObstacleKind::UnitDisks;
    else if (kind == "segments")
        inst.obstacles.kind = ObstacleKind::Segments;
    else
        throw ParseError("kind must be \"unit_disks\" or \"segments\"");

    if (!j.contains("points") || !j["points"].is_array()) throw ParseError("missing points array");
    for (const auto& p : j["points"]) inst.points.push_back(detail::point(p));

    if (!j.contains("obstacles") || !j["obstacles"].is_array())
        throw ParseError("missing obstacles array");
    for (const auto& o : j["obstacles"]) {
        if (!o.is_object()) throw ParseError("obstacle must be an object");
        if (inst.obstacles.kind == ObstacleKind::UnitDisks) {
            if (!o.contains("center")) throw ParseError("disk obstacle needs a center");
            inst.obstacles.disks.push_back({detail::point(o["center"])});
        } else {
            if (!o.contains("a") || !o.contains("b")) throw ParseError("segment obstacle needs a and b");
            inst.obstacles.segments.push_back({detail::point(o["a"]), detail::point(o["b"])});
        }
    }
    return inst;
}

// parse and validate
inline Instance parse_instance(const std::string& text) {
    Instance inst = parse_instance_text(text);
    validate_instance(inst);
    return inst;
}

inline std::string serialize_instance(const Instance& inst) {
    nlohmann::json j;
    j["kind"] = inst.obstacles.kind == ObstacleKind::UnitDisks ? "unit_disks" : "segments";
    j["points"] = nlohmann::json::array();
    for (const auto& p : inst.points) j["points"].push_back(detail::point_json(p));
    j["obstacles"] = nlohmann::json::array();
    if (inst.obstacles.kind == ObstacleKind::UnitDisks)
        for (const auto& d : inst.obstacles.disks)
            j["obstacles"].push_back({{"center", detail::point_json(d.center)}});
    else
        for (const auto& s : inst.obstacles.segments)
            j["obstacles"].push_back({{"a", detail::point_json(s.a)}, {"b", detail::point_json(s.b)}});
    return j.dump(2) + "\n";
}

inline Solution parse_solution(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("solution is not a JSON object");
    Solution s;
    if (!j.contains("selected") || !j["selected"].is_array())
        throw ParseError("missing selected array");
    for (const auto& v : j["selected"]) {
        if (!v.is_number_integer()) throw ParseError("selected indices must be integers");
        s.selected.push_back(v.get<int>());
    }
    for (size_t i = 0; i < s.selected.size(); ++i) {
        if (s.selected[i] < 0) throw ParseError("negative obstacle index");
        if (i > 0 && s.selected[i] <= s.selected[i - 1])
            throw ParseError("selected indices must be strictly increasing");
    }
    if (!j.contains("method") || !j["method"].is_string()) throw ParseError("missing method");
    s.method = j["method"].get<std::string>();
    if (s.method != "mincut" && s.method != "lp" && s.method != "exact")
        throw ParseError("method must be mincut, lp, or exact");
    if (!j.contains("objective") || !j["objective"].is_number_integer())
        throw ParseError("missing integer objective");
    s.objective = j["objective"].get<long>();
    if (j.contains("attempts")) s.attempts = j["attempts"].get<int>();
    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    return s;
}

inline std::string serialize_solution(const Solution& s) {
    nlohmann::json j;
    j["selected"] = s.selected;
    j["method"] = s.method;
    j["objective"] = s.objective;
    if (s.method == "lp") {
        j["attempts"] = s.attempts;
        j["seed"] = s.seed;
    }
    return j.dump(2) + "\n";
}

} // namespace enclose
