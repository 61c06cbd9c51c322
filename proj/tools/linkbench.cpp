// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: © 2026 The linkbench authors

#include <iostream>
#include <string>
#include <vector>

#include "linkbench/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return linkbench::cli::run(args, std::cout, std::cerr);
}
