#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsbo::app {

enum ExitCode : int { kOk = 0, kInvalid = 2, kEmpty = 3, kCheckFailed = 4 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dsbo::app
