/*
 * concord_main.cpp -- entry point for the concord command-line tool.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include <iostream>

#include "concord/cli.hpp"

int main(int argc, char** argv) {
  return concord::run_cli(argc, argv, std::cout, std::cerr);
}
