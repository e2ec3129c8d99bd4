#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tabloids/cli.hpp"

namespace {

// Merge an optional JSON document file with per-field flags; flags win.
tabloids::Json build_document(const std::string& input_path,
                              const std::string& mu, const std::string& l,
                              const std::string& sigma, const std::string& rho,
                              bool have_j, long long j, bool have_k, int k) {
  tabloids::Json doc = tabloids::Json::object();
  if (!input_path.empty()) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (input_path != "-") {
      file.open(input_path);
      if (!file) {
        std::cerr << "ParseError: cannot open " << input_path << "\n";
        std::exit(2);
      }
      in = &file;
    }
    std::stringstream buf;
    buf << in->rdbuf();
    try {
      doc = tabloids::Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "ParseError: " << e.what() << "\n";
      std::exit(2);
    }
    if (!doc.is_object()) {
      std::cerr << "ParseError: document must be a JSON object\n";
      std::exit(2);
    }
  }
  auto overlay = [&doc](const std::string& field, const std::string& text) {
    if (text.empty()) return;
    try {
      doc[field] = tabloids::Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "ParseError: flag --" << field << ": " << e.what() << "\n";
      std::exit(2);
    }
  };
  overlay("mu", mu);
  overlay("l", l);
  overlay("sigma", sigma);
  overlay("rho", rho);
  if (have_j) doc["j"] = j;
  if (have_k) doc["k"] = k;
  if (!doc.contains("mu")) doc["mu"] = tabloids::Json::array();
  if (!doc.contains("l")) doc["l"] = tabloids::Json::array();
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact tabloid combinatorics: counts, characters of the shift "
      "quotient modules, marked cycle tabloids, and the eigen-tabloid "
      "correspondence"};
  app.require_subcommand(1);

  std::string mu, l, sigma, rho, input_path, cache_dir;
  long long j = 0;
  int k = 0;
  tabloids::DispatchOptions opt;
  bool have_j = false, have_k = false;

  const char* env_cache = std::getenv("TABLOIDS_CACHE_DIR");
  if (env_cache) cache_dir = env_cache;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--mu", mu, "components as a JSON array of arrays");
    cmd->add_option("--l", l, "periods as a JSON array");
    cmd->add_option("--sigma", sigma,
                    "permutation as a JSON array of 1-based cycles");
    cmd->add_option("--rho", rho,
                    "cycle type as a JSON array (selects the canonical "
                    "permutation)");
    cmd->add_option("--j", j, "weight")->each([&](const std::string&) {
      have_j = true;
    });
    cmd->add_option("--k", k, "quotient index")->each([&](const std::string&) {
      have_k = true;
    });
    cmd->add_option("--input", input_path,
                    "JSON document file ('-' for stdin); flags override "
                    "fields");
    cmd->add_option("--cache-dir", cache_dir,
                    "cache directory (default: $TABLOIDS_CACHE_DIR)");
    cmd->add_option("--cap", opt.cap, "enumeration cap on the box count");
  };

  CLI::App* c_count = app.add_subcommand("count", "number of tabloids");
  CLI::App* c_char = app.add_subcommand("char", "character value");
  CLI::App* c_wsum = app.add_subcommand("weighted-sum",
                                        "weighted character sum at weight j");
  CLI::App* c_marked =
      app.add_subcommand("marked", "marked cycle tabloids for rho and j");
  CLI::App* c_phi = app.add_subcommand(
      "phi", "eigen-tabloid of a marked object (field 'marked')");
  CLI::App* c_psi = app.add_subcommand(
      "psi", "marked object of an eigen-tabloid (field 'tabloid')");
  CLI::App* c_eigen = app.add_subcommand("eigen", "list eigen-tabloids");
  CLI::App* c_verify =
      app.add_subcommand("verify", "check counts and the correspondence");
  CLI::App* c_render = app.add_subcommand("render", "ASCII diagram");

  for (CLI::App* cmd : {c_count, c_char, c_wsum, c_marked, c_phi, c_psi,
                        c_eigen, c_verify, c_render})
    add_common(cmd);
  c_marked->add_flag("--list", opt.list, "list the objects");
  for (CLI::App* cmd : {c_marked, c_phi, c_psi, c_render})
    cmd->add_flag("--ascii", opt.ascii, "ASCII diagrams instead of JSON");
  c_verify->add_flag("--catalog", opt.catalog,
                     "run the built-in instance catalog");
  c_verify->add_option("--max-m", opt.max_m,
                       "catalog bound on the box count");

  CLI11_PARSE(app, argc, argv);
  opt.cache_dir = cache_dir;

  const tabloids::Json doc =
      build_document(input_path, mu, l, sigma, rho, have_j, j, have_k, k);
  const std::string command = app.get_subcommands().front()->get_name();
  const tabloids::CliResult res = tabloids::dispatch(command, doc, opt);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
