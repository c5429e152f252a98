#pragma once

#include <string_view>

#include "indel/word.hpp"

namespace test {

inline indel::Word W(std::string_view s, unsigned q = 2) { return indel::Word::parse(s, q); }

}  // namespace test
