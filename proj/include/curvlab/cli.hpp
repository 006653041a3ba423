#ifndef CURVLAB_CLI_HPP
#define CURVLAB_CLI_HPP

#include <string>
#include <vector>

namespace curvlab {

// Command-line front end. Returns 0 on success, 1 when an audit fails,
// 2 on usage or parse errors.
int run(const std::vector<std::string>& args);

} // namespace curvlab

#endif
