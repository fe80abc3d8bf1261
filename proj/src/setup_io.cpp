#include "kslope/setup_io.hpp"

#include "kslope/documents.hpp"
#include "kslope/errors.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>

namespace kslope {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(errc::malformed_document, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_string()) fail(errc::malformed_document, std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

long require_integer(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) fail(errc::malformed_document, std::string("field \"") + key + "\" must be an integer");
    return v.get<long>();
}

ClassVector class_from_json(const json& v, const char* what) {
    if (!v.is_array()) fail(errc::malformed_document, std::string(what) + " must be an array of rationals");
    ClassVector out;
    out.coords.reserve(v.size());
    for (const json& e : v) out.coords.push_back(rational_from_json(e));
    return out;
}

ClassVector require_class(const json& j, const char* key) { return class_from_json(require(j, key), key); }

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

json fibration_to_json(const FibrationSection& f) {
    json j;
    j["fibre_dimension"] = f.fibre_dimension;
    j["fibre_scalar"] = f.fibre_scalar ? rational_json(*f.fibre_scalar) : json(nullptr);
    j["fibre_genus"] = f.fibre_genus ? json(*f.fibre_genus) : json(nullptr);
    j["fibre_degree"] = f.fibre_degree ? rational_json(*f.fibre_degree) : json(nullptr);
    j["pushforward_canonical"] = class_json(f.pushforward_canonical);
    j["pushforward_polarization"] = class_json(f.pushforward_polarization);
    return j;
}

FibrationSection fibration_from_json(const json& j) {
    if (!j.is_object()) fail(errc::malformed_document, "fibration section must be an object");
    FibrationSection f;
    f.fibre_dimension = require_integer(j, "fibre_dimension");
    if (auto it = j.find("fibre_scalar"); it != j.end() && !it->is_null()) f.fibre_scalar = rational_from_json(*it);
    if (auto it = j.find("fibre_genus"); it != j.end() && !it->is_null()) {
        if (!it->is_number_integer()) fail(errc::malformed_document, "fibre_genus must be an integer");
        f.fibre_genus = it->get<long>();
    }
    if (auto it = j.find("fibre_degree"); it != j.end() && !it->is_null()) f.fibre_degree = rational_from_json(*it);
    f.pushforward_canonical = require_class(j, "pushforward_canonical");
    f.pushforward_polarization = require_class(j, "pushforward_polarization");
    return f;
}

json bundle_to_json(const BundleData& b) {
    json j;
    json degrees = json::array();
    for (const Rational& d : b.degrees) degrees.push_back(rational_json(d));
    j["degrees"] = degrees;
    j["sub_degree"] = rational_json(b.sub_degree);
    j["sub_rank"] = b.sub_rank;
    j["total_degree"] = rational_json(b.total_degree);
    j["total_rank"] = b.total_rank;
    return j;
}

BundleData bundle_from_json(const json& j) {
    if (!j.is_object()) fail(errc::malformed_document, "bundle section must be an object");
    BundleData b;
    if (auto it = j.find("degrees"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) fail(errc::malformed_document, "bundle degrees must be an array");
        for (const json& e : *it) b.degrees.push_back(rational_from_json(e));
    }
    if (auto it = j.find("sub_degree"); it != j.end() && !it->is_null()) b.sub_degree = rational_from_json(*it);
    if (auto it = j.find("sub_rank"); it != j.end() && !it->is_null()) b.sub_rank = it->get<long>();
    if (auto it = j.find("total_degree"); it != j.end() && !it->is_null()) b.total_degree = rational_from_json(*it);
    if (auto it = j.find("total_rank"); it != j.end() && !it->is_null()) b.total_rank = it->get<long>();
    return b;
}

} // namespace

Setup load_setup(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) fail(errc::malformed_document, "input is not valid JSON");
    if (!j.is_object()) fail(errc::malformed_document, "setup document must be a JSON object");

    Setup s;
    s.name = require_string(j, "name");
    s.dimension = static_cast<int>(require_integer(j, "dimension"));

    const json& basis = require(j, "basis");
    if (!basis.is_array() || basis.empty()) fail(errc::malformed_document, "basis must be a nonempty array");
    for (const json& e : basis) {
        if (!e.is_string()) fail(errc::malformed_document, "basis entries must be strings");
        s.basis.push_back(e.get<std::string>());
    }

    s.form.dimension = s.dimension;
    const json& form = require(j, "form");
    if (!form.is_array()) fail(errc::malformed_document, "form must be an array of monomial entries");
    for (const json& e : form) {
        if (!e.is_object()) fail(errc::malformed_document, "form entries must be objects");
        const json& mono = require(e, "monomial");
        if (!mono.is_array()) fail(errc::malformed_document, "form monomial must be an array of indices");
        std::vector<int> key;
        for (const json& idx : mono) {
            if (!idx.is_number_integer()) fail(errc::malformed_document, "form monomial indices must be integers");
            key.push_back(idx.get<int>());
        }
        s.form.set(std::move(key), rational_from_json(require(e, "value")));
    }

    s.omega = require_class(j, "omega");
    s.canonical = require_class(j, "canonical");
    if (auto it = j.find("twist"); it != j.end() && !it->is_null())
        s.twist = class_from_json(*it, "twist");
    else
        s.twist = ClassVector::zero(s.basis.size());

    if (auto it = j.find("divisors"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) fail(errc::malformed_document, "divisors must be an array");
        for (const json& e : *it) {
            Divisor d;
            d.name = require_string(e, "name");
            d.total_class = require_class(e, "total");
            const json& comps = require(e, "components");
            if (!comps.is_array()) fail(errc::malformed_document, "divisor components must be an array");
            for (const json& c : comps) {
                DivisorComponent comp;
                comp.cls = require_class(c, "class");
                comp.multiplicity = require_integer(c, "multiplicity");
                d.components.push_back(std::move(comp));
            }
            s.divisors.push_back(std::move(d));
        }
    }

    if (auto it = j.find("curve_cone"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) fail(errc::malformed_document, "curve_cone must be an array");
        for (const json& e : *it) {
            ConeCurve c;
            c.name = require_string(e, "name");
            c.cls = require_class(e, "class");
            s.curve_cone.push_back(std::move(c));
        }
    }

    if (auto it = j.find("fibration"); it != j.end() && !it->is_null()) s.fibration = fibration_from_json(*it);
    if (auto it = j.find("bundle"); it != j.end() && !it->is_null()) s.bundle = bundle_from_json(*it);

    validate(s);
    return s;
}

BundleData load_bundle(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) fail(errc::malformed_document, "input is not valid JSON");
    if (!j.is_object()) fail(errc::malformed_document, "bundle document must be a JSON object");
    if (auto it = j.find("bundle"); it != j.end()) return bundle_from_json(*it);
    return bundle_from_json(j);
}

Setup load_setup_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::malformed_document, "cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_setup(buffer.str());
}

std::string serialize_setup(const Setup& s) {
    json j;
    j["name"] = s.name;
    j["dimension"] = s.dimension;
    j["basis"] = s.basis;

    json form = json::array();
    for (const auto& [key, value] : s.form.values) {
        json e;
        e["monomial"] = key;
        e["value"] = rational_json(value);
        form.push_back(std::move(e));
    }
    j["form"] = form;

    j["omega"] = class_json(s.omega);
    j["canonical"] = class_json(s.canonical);
    j["twist"] = class_json(s.twist);

    json divisors = json::array();
    for (const Divisor& d : s.divisors) {
        json e;
        e["name"] = d.name;
        e["total"] = class_json(d.total_class);
        json comps = json::array();
        for (const DivisorComponent& c : d.components) {
            json ce;
            ce["class"] = class_json(c.cls);
            ce["multiplicity"] = c.multiplicity;
            comps.push_back(std::move(ce));
        }
        e["components"] = comps;
        divisors.push_back(std::move(e));
    }
    j["divisors"] = divisors;

    json cone = json::array();
    for (const ConeCurve& c : s.curve_cone) {
        json e;
        e["name"] = c.name;
        e["class"] = class_json(c.cls);
        cone.push_back(std::move(e));
    }
    j["curve_cone"] = cone;

    if (s.fibration) j["fibration"] = fibration_to_json(*s.fibration);
    if (s.bundle) j["bundle"] = bundle_to_json(*s.bundle);

    return j.dump(2) + "\n";
}

std::string setup_digest(const Setup& s) {
    std::uint64_t h = fnv1a64(serialize_setup(s));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

} // namespace kslope
