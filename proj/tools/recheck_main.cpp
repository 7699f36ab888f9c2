// Standalone certificate checker. Reads a serialized certificate and
// re-validates every witness with plain arithmetic; no LP solver or double
// description code is linked into the validation path.
#include <fstream>
#include <iostream>
#include <string>

#include "ordercone/certcheck.hpp"

int main(int argc, char** argv) {
  std::string type = "auto";
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--type" && i + 1 < argc) {
      type = argv[++i];
    } else if (arg == "--help" || arg == "-h") {
      std::cout << "usage: ordercone-recheck [--type auto|band|lp|disjointness|subset] "
                   "<certificate.json>\n";
      return 0;
    } else if (path.empty()) {
      path = arg;
    } else {
      std::cerr << "unexpected argument '" << arg << "'\n";
      return 2;
    }
  }
  if (path.empty()) {
    std::cerr << "usage: ordercone-recheck [--type T] <certificate.json>\n";
    return 2;
  }

  nlohmann::json j;
  try {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (type == "auto") {
      if (j.contains("checks")) type = "band";
      else if (j.contains("lp")) type = "lp";
      else if (j.contains("cone")) type = "disjointness";
      else if (j.contains("P")) type = "subset";
      else throw std::runtime_error("cannot infer certificate type");
    }
    ordercone::certcheck::RecheckReport rep;
    if (type == "band") rep = ordercone::certcheck::recheck_band_certificate(j);
    else if (type == "lp") rep = ordercone::certcheck::recheck_lp_outcome(j);
    else if (type == "disjointness") rep = ordercone::certcheck::recheck_disjointness(j);
    else if (type == "subset") rep = ordercone::certcheck::recheck_subset(j);
    else throw std::runtime_error("unknown certificate type '" + type + "'");

    std::cout << (rep.ok ? "certificate ok" : "certificate INVALID") << "\n";
    for (const auto& p : rep.problems) std::cout << "  " << p << "\n";
    return rep.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
