// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <string_view>

namespace tsc {

// Hex digest of the SHA-256 hash of the input bytes.
std::string sha256_hex(std::string_view data);

}  // namespace tsc
