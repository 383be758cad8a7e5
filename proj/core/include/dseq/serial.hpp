#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dseq/dcode.hpp"
#include "dseq/poly.hpp"
#include "dseq/quaternion.hpp"
#include "dseq/sequence.hpp"

namespace dseq {

// JSON field order is fixed so identical inputs serialize to identical bytes.
// Parsers throw std::invalid_argument on malformed documents.

std::string to_json(const SequenceSpec& spec);        // {"a","b","c","x0","x1","x2"}
SequenceSpec spec_from_json(const std::string& text);

std::string to_json(const Poly& p);                   // {"modulus","coefficients"}
Poly poly_from_json(const std::string& text);

std::string to_json(const DCyclicCode& code);  // {"n","k","d","mds","modulus","generator","check"}

// {"alpha","beta","c"}; rationals serialized as "num/den" strings.
std::string to_json(const Quaternion& q);
Quaternion quaternion_from_json(const std::string& text);

std::string word_to_string(const std::vector<std::int64_t>& word);  // "0,3,6,1,1,3"
std::vector<std::int64_t> word_from_string(const std::string& text);

}  // namespace dseq
