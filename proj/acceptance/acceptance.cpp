#include "suite.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  wof::suite::Options opt;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--quick") opt.quick = true;

  const auto t0 = std::chrono::steady_clock::now();
  std::string unexpected, known;
  wof::suite::run_all(opt, [&](const wof::suite::Result& r) {
    std::cout << wof::suite::format_line(r) << std::endl;
    if (r.pass) return;
    (wof::suite::known_failure(r.id) ? known : unexpected) += " " + std::to_string(r.id);
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("total %.1f s; known failures:%s; unexpected failures:%s\n", secs, known.empty() ? " none" : known.c_str(),
              unexpected.empty() ? " none" : unexpected.c_str());
  return unexpected.empty() ? 0 : 1;
}
