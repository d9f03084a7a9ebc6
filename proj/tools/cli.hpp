#pragma once

// Subcommands of the cutdiag tool. Each writes to the given streams and
// returns the process exit code.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cutdiag/core.hpp"

namespace cutdiag::cli {

enum Exit : int { ok = 0, failed = 1, parse_error = 2, differ = 3, rejected = 4 };

enum class Format { text, machine };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Reads a .cut or .gauss file (by extension). A missing name becomes the file stem.
CutDiagram load_diagram(const std::string& path);

int cmd_parse(const std::string& path, Format fmt, Streams io);
int cmd_invariants(const std::string& path, int maxlen, bool reduced, Format fmt, Streams io);
int cmd_compare(const std::string& a, const std::string& b, int maxlen, bool reduced, Format fmt, Streams io);
int cmd_moves(const std::string& path, Format fmt, Streams io);

struct FuzzOptions {
  int steps = 30;
  std::uint64_t seed = 0;
  int trials = 1;
  int maxlen = 4;
  bool sv = false;  ///< SV moves, compared on reduced tables
};
int cmd_fuzz(const std::string& path, const FuzzOptions& opt, Format fmt, Streams io);

int cmd_slice(const std::string& path, Streams io);
int cmd_trace(const std::string& path, const std::vector<std::string>& moves, bool reduced, Streams io);
int cmd_verify(const std::string& path, std::optional<std::string> mode, Format fmt, Streams io);

/// Writes the example corpus and its certificates into `dir`.
int cmd_demo(const std::string& dir, Streams io);

}  // namespace cutdiag::cli
