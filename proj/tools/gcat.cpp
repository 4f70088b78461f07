// Command-line front end: run verification suites over the built-in
// corpus, describe corpus entries, and round-trip JSON files.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "corpus.hpp"
#include "serialize.hpp"
#include "suites.hpp"

int run(int argc, char** argv);

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"desk-scale verifier for permutative categories and Gamma-categories"};
  app.require_subcommand(1);

  harness::SuiteConfig cfg;
  std::string suites = "all";
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suites, "comma-separated suite names, or 'all'");
  verify->add_option("--n-max", cfg.n_max, "largest based-set degree");
  verify->add_option("--len-max", cfg.len_max, "largest sequence length in bounded fragments");
  verify->add_option("--entry-max", cfg.entry_max, "largest entry in bounded fragments");
  verify->add_option("--budget", cfg.budget, "enumeration budget");
  verify->add_option("--seed", cfg.seed, "seed for the random functor corpus");
  verify->add_option("--monoid", cfg.monoid, "restrict monoid-indexed suites to one corpus monoid");
  verify->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", cfg.out, "write the report to this path");
  verify->add_flag("--serial", serial, "run sweeps on the serial reference path");
  verify->add_flag("--timings", cfg.timings, "include wall times in the report");

  std::string name;
  auto* describe = app.add_subcommand("describe", "describe a corpus entry");
  describe->add_option("name", name, "corpus name")->required();

  std::string path;
  auto* iocheck = app.add_subcommand("io-check", "deserialize, validate and reserialize a file");
  iocheck->add_option("path", path, "JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) {
    cfg.parallel = !serial;
    cfg.suites.clear();
    std::stringstream ss(suites);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) cfg.suites.push_back(item);
    const auto report = harness::run_suite(cfg);
    const std::string text = harness::render(report, cfg);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      out << text;
    }
    return report.all_passed() ? 0 : 1;
  }
  if (describe->parsed()) {
    try {
      std::cout << corpus::describe(name);
      return 0;
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\nknown names:";
      for (const auto& n : corpus::names()) std::cerr << " " << n;
      std::cerr << "\n";
      return 1;
    }
  }
  if (iocheck->parsed()) {
    const auto r = serialize::io_roundtrip_file(path);
    if (r.ok()) {
      std::cout << "ok: " << path << " is schema-valid and byte-stable\n";
      return 0;
    }
    std::cout << r.to_text();
    return 1;
  }
  return 0;
}
