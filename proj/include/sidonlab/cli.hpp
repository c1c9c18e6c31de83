#ifndef SIDONLAB_CLI_HPP
#define SIDONLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sidonlab {

// Dispatches one subcommand. Results go to `out` (a single JSON document,
// or CSV for the grid emitters), diagnostics to `err`. Returns 0 on
// success, 1 on computational failure, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace sidonlab

#endif
