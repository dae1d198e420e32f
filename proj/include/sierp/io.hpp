#pragma once

#include <sierp/certificate.hpp>
#include <sierp/covering.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace sierp {

struct ParseError : Error {
    using Error::Error;
};

using json = nlohmann::ordered_json;

namespace detail {

inline const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key: ") + key);
    return *it;
}

inline std::int64_t as_index(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
    return v.get<std::int64_t>();
}

inline Int as_decimal(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_string()) throw ParseError(std::string(key) + " must be a decimal string");
    try {
        return parse_decimal(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(key) + ": " + e.what());
    }
}

}  // namespace detail

inline json to_json(const Covering& c) {
    json out;
    out["congruences"] = json::array();
    for (const auto& cls : c.classes) {
        json e;
        e["r"] = cls.r;
        e["m"] = cls.m;
        if (cls.prime) e["p"] = to_string(*cls.prime);
        out["congruences"].push_back(std::move(e));
    }
    return out;
}

inline Covering covering_from_json(const json& j) {
    const json& arr = detail::require(j, "congruences");
    if (!arr.is_array() || arr.empty()) throw ParseError("congruences must be a nonempty array");
    Covering c;
    for (const auto& e : arr) {
        std::int64_t r = detail::as_index(e, "r");
        std::int64_t m = detail::as_index(e, "m");
        std::optional<Int> p;
        if (e.contains("p")) p = detail::as_decimal(e, "p");
        try {
            c.classes.emplace_back(r, m, std::move(p));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
    }
    return c;
}

inline json to_json(const SierpinskiCertificate& cert) {
    json out;
    out["kind"] = to_string(cert.kind);
    out["exponent"] = cert.exponent;
    out["P"] = to_string(cert.P);
    out["Q"] = to_string(cert.Q);
    out["D"] = to_string(cert.D);
    if (cert.a) out["a"] = to_string(*cert.a);
    if (cert.b) out["b"] = to_string(*cert.b);
    out["k"] = to_string(cert.k);
    out["modulus"] = to_string(cert.modulus);
    out["classes"] = json::array();
    for (std::size_t i = 0; i < cert.covering.classes.size(); ++i) {
        const auto& cls = cert.covering.classes[i];
        json e;
        e["r"] = cls.r;
        e["m"] = cls.m;
        e["p"] = to_string(*cls.prime);
        e["A"] = to_string(cert.offsets[i]);
        out["classes"].push_back(std::move(e));
    }
    out["k_class"] = cert.k_class;
    return out;
}

inline SierpinskiCertificate certificate_from_json(const json& j) {
    SierpinskiCertificate cert;
    const json& kind = detail::require(j, "kind");
    if (!kind.is_string()) throw ParseError("kind must be a string");
    auto parsed = certificate_kind_from(kind.get<std::string>());
    if (!parsed) throw ParseError("unknown certificate kind: " + kind.get<std::string>());
    cert.kind = *parsed;
    std::int64_t e = detail::as_index(j, "exponent");
    if (e != 1 && e != 2) throw ParseError("exponent must be 1 or 2");
    cert.exponent = static_cast<int>(e);
    cert.P = detail::as_decimal(j, "P");
    cert.Q = detail::as_decimal(j, "Q");
    cert.D = detail::as_decimal(j, "D");
    if (j.contains("a")) cert.a = detail::as_decimal(j, "a");
    if (j.contains("b")) cert.b = detail::as_decimal(j, "b");
    cert.k = detail::as_decimal(j, "k");
    cert.modulus = detail::as_decimal(j, "modulus");
    const json& classes = detail::require(j, "classes");
    if (!classes.is_array() || classes.empty()) throw ParseError("classes must be a nonempty array");
    for (const auto& c : classes) {
        std::int64_t r = detail::as_index(c, "r");
        std::int64_t m = detail::as_index(c, "m");
        Int p = detail::as_decimal(c, "p");
        try {
            cert.covering.classes.emplace_back(r, m, p);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(ex.what());
        }
        cert.offsets.push_back(detail::as_decimal(c, "A"));
    }
    if (j.contains("k_class")) {
        const json& kc = *j.find("k_class");
        if (!kc.is_string()) throw ParseError("k_class must be a string");
        cert.k_class = kc.get<std::string>();
    } else {
        cert.k_class = describe_k_class(cert.k, cert.modulus, cert.exponent);
    }
    return cert;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << text;
}

}  // namespace sierp
