#include <fstream>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace qnil;
  std::optional<cli::RunConfig> cfg;
  try {
    cfg = cli::parse_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "qnil: " << e.what() << '\n';
    return 2;
  }
  if (!cfg) return 0;

  int status = 3;
  Json report;
  try {
    auto r = cli::run(*cfg);
    status = r.status;
    report = std::move(r.report);
  } catch (const cli::UsageError& e) {
    std::cerr << "qnil: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qnil: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    report = Json::object();
    report["schema"] = kSchema;
    report["status"] = "internal-error";
    report["message"] = e.what();
    status = 3;
  }
  const std::string text = cli::render(report, status == 3 ? "json" : cfg->format);
  if (cfg->output.empty() || status == 3) {
    (status == 3 ? std::cerr : std::cout) << text;
  } else {
    std::ofstream out(cfg->output, std::ios::binary);
    if (!out) {
      std::cerr << "qnil: cannot write " << cfg->output << '\n';
      return 2;
    }
    out << text;
  }
  return status;
}
