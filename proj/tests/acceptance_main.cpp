#include <bezout/acceptance.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

// One line per criterion. BEZOUT_ACCEPTANCE_SCALE=small runs reduced samples.
int main() {
  using namespace bezout::acceptance;
  const char* env = std::getenv("BEZOUT_ACCEPTANCE_SCALE");
  const Scale scale = env && std::string(env) == "small" ? Scale::small : Scale::full;
  int failed = 0;
  for (int id = 1; id <= 9; ++id) {
    const auto r = run_criterion(id, scale);
    std::cout << format_line(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
