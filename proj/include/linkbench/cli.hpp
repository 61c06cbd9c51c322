// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkbench::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitModel = 2;

/// Entry point behind the `linkbench` binary. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkbench::cli
