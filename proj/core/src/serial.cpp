#include "dseq/serial.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dseq/integers.hpp"

namespace dseq {

using ordered_json = nlohmann::ordered_json;

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_text = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
    // cpp_int's string constructor accepts "" as 0; an empty field is junk here
    if (num_text.empty() || den_text.empty()) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    try {
        const Int num(num_text);
        const Int den(den_text);
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        // cpp_int's string constructor throws runtime_error on junk
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

std::string rational_to_string(const Rat& value) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(value);
    if (!is_integer(value)) out << "/" << boost::multiprecision::denominator(value);
    return out.str();
}

namespace {

ordered_json parse_document(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
    return doc;
}

std::int64_t int_field(const ordered_json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw std::invalid_argument(std::string("missing integer field '") + key + "'");
    }
    return doc[key].get<std::int64_t>();
}

std::vector<std::int64_t> int_array_field(const ordered_json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw std::invalid_argument(std::string("missing array field '") + key + "'");
    }
    std::vector<std::int64_t> out;
    for (const auto& v : doc[key]) {
        if (!v.is_number_integer()) {
            throw std::invalid_argument(std::string("non-integer entry in '") + key + "'");
        }
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

std::string rational_field(const ordered_json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_string()) {
        throw std::invalid_argument(std::string("missing rational field '") + key + "'");
    }
    return doc[key].get<std::string>();
}

}  // namespace

std::string to_json(const SequenceSpec& spec) {
    ordered_json doc;
    doc["a"] = spec.a;
    doc["b"] = spec.b;
    doc["c"] = spec.c;
    doc["x0"] = spec.x0;
    doc["x1"] = spec.x1;
    doc["x2"] = spec.x2;
    return doc.dump();
}

SequenceSpec spec_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    SequenceSpec spec;
    spec.a = int_field(doc, "a");
    spec.b = int_field(doc, "b");
    spec.c = int_field(doc, "c");
    spec.x0 = int_field(doc, "x0");
    spec.x1 = int_field(doc, "x1");
    spec.x2 = int_field(doc, "x2");
    return spec;
}

std::string to_json(const Poly& p) {
    ordered_json doc;
    doc["modulus"] = p.modulus();
    doc["coefficients"] = p.coefficients();
    return doc.dump();
}

Poly poly_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    return Poly(int_field(doc, "modulus"), int_array_field(doc, "coefficients"));
}

std::string to_json(const DCyclicCode& code) {
    ordered_json doc;
    doc["n"] = code.n;
    doc["k"] = code.k;
    doc["d"] = code.d;
    doc["mds"] = code.mds;
    doc["modulus"] = code.modulus;
    doc["generator"] = code.g.coefficients();
    doc["check"] = code.h.coefficients();
    return doc.dump();
}

std::string to_json(const Quaternion& q) {
    ordered_json doc;
    doc["alpha"] = rational_to_string(q.algebra().alpha);
    doc["beta"] = rational_to_string(q.algebra().beta);
    ordered_json coords = ordered_json::array();
    for (const auto& c : q.coefficients()) coords.push_back(rational_to_string(c));
    doc["c"] = coords;
    return doc.dump();
}

Quaternion quaternion_from_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    const Rat alpha = parse_rational(rational_field(doc, "alpha"));
    const Rat beta = parse_rational(rational_field(doc, "beta"));
    if (!doc.contains("c") || !doc["c"].is_array() || doc["c"].size() != 4) {
        throw std::invalid_argument("field 'c' must be an array of four rationals");
    }
    std::array<Rat, 4> coords;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!doc["c"][i].is_string()) {
            throw std::invalid_argument("quaternion coordinates must be \"num/den\" strings");
        }
        coords[i] = parse_rational(doc["c"][i].get<std::string>());
    }
    return Quaternion(QuaternionAlgebra(alpha, beta), std::move(coords));
}

std::string word_to_string(const std::vector<std::int64_t>& word) {
    std::ostringstream out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0) out << ",";
        out << word[i];
    }
    return out.str();
}

std::vector<std::int64_t> word_from_string(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(piece, &used));
            if (used != piece.size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + piece + "' in word");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace dseq
