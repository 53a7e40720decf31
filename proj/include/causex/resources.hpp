// Copyright 2026 The causex Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

// Contents of the files under data/, compiled into the library.
namespace causex::resources {

std::string_view stoplist();
std::string_view connectives();
std::string_view abbreviations();

}  // namespace causex::resources
