/*
 * cli.hpp -- the command-line front end: argument parsing, dispatch to the
 * library operations, and text/JSON report emission.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <iosfwd>

namespace concord {

/**
 * Run the command line.  Returns the process exit code: 0 on success, 1
 * when a requested verification fails (with the failing step on the error
 * stream), 2 on input errors (bad arguments, unreadable or malformed JSON,
 * invalid matrices).  Output is deterministic for fixed input.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace concord
