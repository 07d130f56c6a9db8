#ifndef POLYVEC_CLI_HPP
#define POLYVEC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polyvec {

/// Exit codes: 0 success, 2 parse/invalid input, 3 feasibility gate,
/// 4 integer overflow.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace polyvec

#endif
