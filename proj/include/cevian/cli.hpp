#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cevian {

/// Command dispatcher behind the cevian-lab executable. `args` excludes the
/// program name. Exit codes: 0 success, 1 usage error, 2 mathematical
/// degeneracy, 3 verification disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cevian
