#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssmc/error.hpp"

namespace ssmc::detail {

// Strips a '#' comment and surrounding whitespace.
std::string strip(const std::string& line);

// Whitespace-separated ids, each validated.
std::vector<std::string> split_ids(const std::string& text, const char* what);

// A group expression: id (= id)* (> id (= id)*)*. Separators may be glued
// to the ids since '>' and '=' cannot occur inside an id.
std::vector<std::vector<std::string>> parse_groups(const std::string& text,
                                                   const std::string& where);

std::vector<std::string> sorted_unique_ids(std::vector<std::string> ids, const char* what);

std::optional<int> index_of(const std::vector<std::string>& sorted, std::string_view name);

}  // namespace ssmc::detail
