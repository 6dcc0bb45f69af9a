#pragma once

// JSON file format for moduli snapshots. Integers are JSON numbers,
// rationals are strings in canonical lowest terms ("p/q", or "p" when
// integral). Serialization is canonical: fixed field order, 2-space
// indent, trailing newline, so parse-then-serialize is byte-stable.

#include "casson/moduli.hpp"
#include "casson/rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace casson {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw ParseError(path + ": expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > std::uint64_t(INT64_MAX))
        throw ParseError(path + ": integer out of range");
    return j.get<std::int64_t>();
}

inline Rational get_rational(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ParseError(path + ": expected a rational encoded as a string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ParseError(path + ": expected a string");
    return j.get<std::string>();
}

inline const json& get_field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(path + ": missing field \"" + key + "\"");
    return *it;
}

inline void check_object(const json& j, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    if (!j.is_object())
        throw ParseError(path + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known)
            throw ParseError(path + ": unknown field \"" + it.key() + "\"");
    }
}

} // namespace detail

inline json moduli_to_json(const ModuliData& m) {
    json j;
    j["name"] = m.name;
    j["perturbation_label"] = m.perturbation_label;
    j["components"] = json::array();
    for (const auto& c : m.components) {
        json jc;
        jc["id"] = c.id;
        jc["cs_mod1"] = c.cs_mod1.str();
        jc["alpha_plus"] = c.alpha_plus.str();
        jc["alpha_minus"] = c.alpha_minus.str();
        jc["h1_minus"] = c.h1_minus;
        jc["sf_hperp_theta_plus"] = c.sf_hperp_theta_plus;
        jc["sf_hperp_theta_minus"] = c.sf_hperp_theta_minus;
        jc["cs_plus"] = c.cs_plus.str();
        jc["cs_minus"] = c.cs_minus.str();
        j["components"].push_back(std::move(jc));
    }
    j["reducible_orbits"] = json::array();
    for (const auto& o : m.reducible_orbits) {
        json jo;
        jo["component"] = o.component;
        jo["sf_theta"] = o.sf_theta;
        jo["sf_from_plus"] = o.sf_from_plus;
        jo["sf_from_minus"] = o.sf_from_minus;
        jo["sf_hperp_theta"] = o.sf_hperp_theta;
        jo["cs_hat"] = o.cs_hat.str();
        j["reducible_orbits"].push_back(std::move(jo));
    }
    j["irreducible_orbits"] = json::array();
    for (const auto& o : m.irreducible_orbits) {
        json jo;
        jo["sf_theta"] = o.sf_theta;
        j["irreducible_orbits"].push_back(std::move(jo));
    }
    return j;
}

inline ModuliData moduli_from_json(const json& j) {
    using namespace detail;
    ModuliData m;
    check_object(j, "$", {"name", "perturbation_label", "components", "reducible_orbits", "irreducible_orbits"});
    m.name = get_string(get_field(j, "name", "$"), "$.name");
    m.perturbation_label = get_string(get_field(j, "perturbation_label", "$"), "$.perturbation_label");

    const json& jc = get_field(j, "components", "$");
    if (!jc.is_array()) throw ParseError("$.components: expected an array");
    for (std::size_t i = 0; i < jc.size(); ++i) {
        std::string p = "$.components[" + std::to_string(i) + "]";
        const json& e = jc[i];
        check_object(e, p,
                     {"id", "cs_mod1", "alpha_plus", "alpha_minus", "h1_minus", "sf_hperp_theta_plus",
                      "sf_hperp_theta_minus", "cs_plus", "cs_minus"});
        ReducibleComponent c;
        c.id = get_int(get_field(e, "id", p), p + ".id");
        c.cs_mod1 = get_rational(get_field(e, "cs_mod1", p), p + ".cs_mod1");
        c.alpha_plus = get_rational(get_field(e, "alpha_plus", p), p + ".alpha_plus");
        c.alpha_minus = get_rational(get_field(e, "alpha_minus", p), p + ".alpha_minus");
        c.h1_minus = get_int(get_field(e, "h1_minus", p), p + ".h1_minus");
        c.sf_hperp_theta_plus = get_int(get_field(e, "sf_hperp_theta_plus", p), p + ".sf_hperp_theta_plus");
        c.sf_hperp_theta_minus = get_int(get_field(e, "sf_hperp_theta_minus", p), p + ".sf_hperp_theta_minus");
        c.cs_plus = get_rational(get_field(e, "cs_plus", p), p + ".cs_plus");
        c.cs_minus = get_rational(get_field(e, "cs_minus", p), p + ".cs_minus");
        m.components.push_back(std::move(c));
    }

    const json& jr = get_field(j, "reducible_orbits", "$");
    if (!jr.is_array()) throw ParseError("$.reducible_orbits: expected an array");
    for (std::size_t i = 0; i < jr.size(); ++i) {
        std::string p = "$.reducible_orbits[" + std::to_string(i) + "]";
        const json& e = jr[i];
        check_object(e, p, {"component", "sf_theta", "sf_from_plus", "sf_from_minus", "sf_hperp_theta", "cs_hat"});
        ReducibleOrbit o;
        o.component = get_int(get_field(e, "component", p), p + ".component");
        o.sf_theta = get_int(get_field(e, "sf_theta", p), p + ".sf_theta");
        o.sf_from_plus = get_int(get_field(e, "sf_from_plus", p), p + ".sf_from_plus");
        o.sf_from_minus = get_int(get_field(e, "sf_from_minus", p), p + ".sf_from_minus");
        o.sf_hperp_theta = get_int(get_field(e, "sf_hperp_theta", p), p + ".sf_hperp_theta");
        o.cs_hat = get_rational(get_field(e, "cs_hat", p), p + ".cs_hat");
        m.reducible_orbits.push_back(std::move(o));
    }

    const json& ji = get_field(j, "irreducible_orbits", "$");
    if (!ji.is_array()) throw ParseError("$.irreducible_orbits: expected an array");
    for (std::size_t i = 0; i < ji.size(); ++i) {
        std::string p = "$.irreducible_orbits[" + std::to_string(i) + "]";
        const json& e = ji[i];
        check_object(e, p, {"sf_theta"});
        IrreducibleOrbit o;
        o.sf_theta = get_int(get_field(e, "sf_theta", p), p + ".sf_theta");
        m.irreducible_orbits.push_back(o);
    }
    return m;
}

inline std::string serialize_moduli(const ModuliData& m) {
    return moduli_to_json(m).dump(2) + "\n";
}

inline ModuliData parse_moduli(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        if (byte > text.size()) byte = text.size();
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < byte; ++i) {
            if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
    }
    return moduli_from_json(j);
}

inline ModuliData load_moduli_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_moduli(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// Atomic write: the target either keeps its old content or receives
// the complete new content, never a partial file.
inline void write_file_atomic(const std::string& path, std::string_view content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error(tmp.string() + ": cannot open for writing");
        out.write(content.data(), std::streamsize(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error(tmp.string() + ": write failed");
        }
    }
    fs::rename(tmp, target);
}

inline void save_moduli_file(const std::string& path, const ModuliData& m) {
    write_file_atomic(path, serialize_moduli(m));
}

} // namespace casson
