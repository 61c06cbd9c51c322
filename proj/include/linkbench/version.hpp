// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#pragma once

namespace linkbench {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace linkbench
