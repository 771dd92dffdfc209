#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "segcalc_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  const auto outcome = segcalc::app::run(args, std::cerr);
  if (!outcome.payload.empty()) std::cout << outcome.payload << '\n';
  const bool json = std::find(args.begin(), args.end(), "--json") != args.end();
  if (!json)
    for (const auto& d : outcome.diagnostics)
      std::cerr << "error: " << d.message << '\n';
  return outcome.exit_code();
}
