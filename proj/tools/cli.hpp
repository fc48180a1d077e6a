#pragma once

// Command-line front end. `run` is the whole program minus process plumbing
// so tests can drive it in-process.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "normvol/body.hpp"

namespace normvol::cli {

struct BodyFile {
    int dim = 0;
    std::optional<std::string> name;
    std::vector<Vector> generators;
};

/// Throws Error(InvalidArgument) on malformed JSON or schema violations.
BodyFile parse_body_file(const std::string& text);
BodyFile read_body_file(const std::string& path);
std::string format_body_file(const BodyFile& f);
/// Reduced generator set of p, named.
BodyFile to_body_file(const SymmetricPolytope& p, std::optional<std::string> name = std::nullopt);
SymmetricPolytope to_polytope(const BodyFile& f);

enum ExitCode : int { kOk = 0, kAssertFailed = 1, kUsage = 2, kDegenerate = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normvol::cli
