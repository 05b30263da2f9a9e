#ifndef FIBBERN_CLI_HPP
#define FIBBERN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fibbern
{

// Exit codes of the command-line front end.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fibbern

#endif
