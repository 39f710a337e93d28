#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "cofib/suite.hpp"

int main(int argc, char** argv) {
  cofib::suite_options opts;
  opts.timings = true;
  if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
  cofib::suite_detail::context ctx;
  ctx.options = opts;
  auto results = cofib::run_criteria(ctx);
  cofib::print_criteria(std::cout, results);
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& c) { return c.pass; });
  std::cout << passed << "/" << results.size() << " criteria pass\n";
  return passed == static_cast<long>(results.size()) ? 0 : 1;
}
