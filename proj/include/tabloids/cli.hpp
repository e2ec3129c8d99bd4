#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tabloids/json_io.hpp"
#include "tabloids/verify.hpp"

namespace tabloids {

// A parsed command document: a validated instance plus the optional
// fields the subcommands consume. Permutations come in as cycle lists;
// rho selects the canonical permutation of that cycle type.
struct InstanceDocument {
  Instance instance;
  std::optional<Permutation> sigma;
  std::optional<Partition> rho;
  std::optional<long long> j;
  std::optional<int> k;
  Json marked;   // raw object, validated by the consuming command
  Json tabloid;  // raw nested rows
};

inline InstanceDocument parse_instance_document(const Json& doc) {
  if (!doc.is_object()) fail(Errc::parse_error, "document must be an object");
  InstanceDocument out{instance_from_json(doc), {}, {}, {}, {}, {}, {}};
  const int m = out.instance.total_boxes();
  if (doc.contains("sigma") && doc.contains("rho"))
    fail(Errc::validation_error, "give either sigma or rho, not both");
  if (doc.contains("sigma"))
    out.sigma = permutation_from_json(doc["sigma"], m, "sigma");
  if (doc.contains("rho")) {
    Partition rho(detail::int_array(doc["rho"], "rho"));
    if (rho.boxes() != m)
      fail(Errc::validation_error, "rho must be a partition of " +
                                       std::to_string(m));
    out.rho = std::move(rho);
  }
  if (doc.contains("j")) {
    if (!doc["j"].is_number_integer())
      fail(Errc::parse_error, "j must be an integer");
    out.j = doc["j"].get<long long>();
  }
  if (doc.contains("k")) {
    if (!doc["k"].is_number_integer())
      fail(Errc::parse_error, "k must be an integer");
    out.k = doc["k"].get<int>();
    if (*out.k < 0 || *out.k >= out.instance.period_lcm())
      fail(Errc::validation_error,
           "k must lie in 0.." +
               std::to_string(out.instance.period_lcm() - 1));
  }
  if (doc.contains("marked")) out.marked = doc["marked"];
  if (doc.contains("tabloid")) out.tabloid = doc["tabloid"];
  return out;
}

inline InstanceDocument parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, e.what());
  }
  return parse_instance_document(doc);
}

struct DispatchOptions {
  bool list = false;
  bool ascii = false;
  bool catalog = false;
  int max_m = 6;
  int cap = kDefaultEnumerationCap;
  std::string cache_dir;  // empty disables the cache
};

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

// Display floats are rounded to 1e-9 so exact values print cleanly and the
// output stays byte-deterministic.
inline double snap(double x) {
  const double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

inline Permutation required_permutation(const InstanceDocument& doc) {
  if (doc.sigma) return *doc.sigma;
  if (doc.rho) return canonical_permutation(*doc.rho);
  fail(Errc::validation_error, "command needs sigma or rho");
}

inline long long required_j(const InstanceDocument& doc) {
  if (!doc.j) fail(Errc::validation_error, "command needs j");
  return *doc.j;
}

// Fixed-point profile with an optional on-disk cache. The cache is a pure
// lookaside keyed by a content hash of the canonical instance/permutation
// serialization; on any read problem the profile is recomputed.
inline std::vector<Count> profile_counts(const Instance& inst,
                                         const Permutation& sigma,
                                         const DispatchOptions& opt) {
  const int l = inst.period_lcm();
  std::filesystem::path file;
  if (!opt.cache_dir.empty()) {
    std::string key = instance_key(inst) + ";sigma=";
    for (int v : sigma.images()) key += std::to_string(v) + ',';
    std::ostringstream name;
    name << std::hex << fnv1a(key) << ".json";
    file = std::filesystem::path(opt.cache_dir) / name.str();
    std::ifstream in(file);
    if (in) {
      try {
        Json cached = Json::parse(in);
        if (cached.contains("counts") && cached["counts"].is_array() &&
            static_cast<int>(cached["counts"].size()) == l)
          return cached["counts"].get<std::vector<Count>>();
      } catch (const nlohmann::json::exception&) {
        // fall through to recompute
      }
    }
  }
  std::vector<Count> counts = fixed_point_profile(inst, sigma, opt.cap).counts;
  if (!file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
      std::ofstream outf(tmp);
      outf << Json{{"counts", counts}}.dump() << '\n';
    }
    std::filesystem::rename(tmp, file, ec);
  }
  return counts;
}

}  // namespace detail

inline CliResult dispatch(const std::string& command, const Json& rawdoc,
                          const DispatchOptions& opt = {}) {
  CliResult res;
  std::ostringstream out;
  try {
    if (command == "verify" && opt.catalog) {
      CatalogOptions copt;
      copt.cap = opt.cap;
      const CatalogSummary summary = verify_catalog(opt.max_m, copt);
      for (const VerificationReport& rep : summary.reports)
        out << to_json(rep).dump() << '\n';
      out << Json{{"checked", summary.checked},
                  {"passed", summary.passed},
                  {"all_pass", summary.all_pass()}}
                 .dump()
          << '\n';
      res.exit_code = summary.all_pass() ? 0 : 1;
      res.out = out.str();
      return res;
    }

    const InstanceDocument doc = parse_instance_document(rawdoc);
    const Instance& inst = doc.instance;
    const int l = inst.period_lcm();

    if (command == "count") {
      out << Json{{"count", tabloid_count(inst)},
                  {"dimension", module_dimension(inst)}}
                 .dump()
          << '\n';
    } else if (command == "char") {
      if (!doc.k) fail(Errc::validation_error, "command needs k");
      const Permutation sigma = detail::required_permutation(doc);
      FixedPointProfile profile{detail::profile_counts(inst, sigma, opt),
                                sigma};
      const RootSum value = character_from_profile(profile, *doc.k);
      const auto z = value.eval();
      out << Json{{"coeffs", value.coeffs()},
                  {"approx", {detail::snap(z.real()), detail::snap(z.imag())}}}
                 .dump()
          << '\n';
    } else if (command == "weighted-sum") {
      const long long j = detail::required_j(doc);
      const Permutation sigma = detail::required_permutation(doc);
      const std::vector<Count> counts =
          detail::profile_counts(inst, sigma, opt);
      const int e = static_cast<int>(((-j) % l + l) % l);
      out << Json{{"value", counts[static_cast<std::size_t>(e)]}}.dump()
          << '\n';
    } else if (command == "marked") {
      if (!doc.rho) fail(Errc::validation_error, "command needs rho");
      const long long j = detail::required_j(doc);
      const std::vector<int> gamma = gamma_for(inst, j);
      if (opt.list) {
        if (opt.ascii) {
          bool first = true;
          for_each_marked(inst, *doc.rho, gamma,
                          [&](const MarkedCycleTabloid& mt) {
                            if (!first) out << "---\n";
                            first = false;
                            out << render(mt);
                          });
        } else {
          Json items = Json::array();
          for_each_marked(inst, *doc.rho, gamma,
                          [&](const MarkedCycleTabloid& mt) {
                            items.push_back(to_json(mt));
                          });
          out << items.dump() << '\n';
        }
      } else {
        out << Json{{"count", count_marked(inst, *doc.rho, gamma)}}.dump()
            << '\n';
      }
    } else if (command == "phi") {
      const long long j = detail::required_j(doc);
      if (doc.marked.is_null())
        fail(Errc::validation_error, "command needs a marked object");
      const MarkedCycleTabloid mt =
          marked_from_json(doc.marked, inst, gamma_for(inst, j));
      const Tabloid t = eigen_from_marked(mt, j);
      if (opt.ascii)
        out << render(t);
      else
        out << to_json(t).dump() << '\n';
    } else if (command == "psi") {
      const long long j = detail::required_j(doc);
      if (!doc.rho) fail(Errc::validation_error, "command needs rho");
      if (doc.tabloid.is_null())
        fail(Errc::validation_error, "command needs a tabloid object");
      const Tabloid t = tabloid_from_json(doc.tabloid, inst);
      const MarkedCycleTabloid mt = marked_from_eigen(t, *doc.rho, j);
      if (opt.ascii)
        out << render(mt);
      else
        out << to_json(mt).dump() << '\n';
    } else if (command == "eigen") {
      const long long j = detail::required_j(doc);
      const Permutation sigma = detail::required_permutation(doc);
      const EigenSet set =
          eigen_tabloids(inst, sigma, j, /*verify=*/true, opt.cap);
      Json items = Json::array();
      for (const Tabloid& t : set.members) items.push_back(to_json(t));
      out << Json{{"count", set.members.size()}, {"tabloids", items}}.dump()
          << '\n';
    } else if (command == "verify") {
      if (!doc.rho) fail(Errc::validation_error, "command needs rho");
      const long long j = detail::required_j(doc);
      const VerificationReport rep =
          verify_bijection(inst, j, *doc.rho, opt.cap);
      out << to_json(rep).dump() << '\n';
      res.exit_code = rep.pass() ? 0 : 1;
    } else if (command == "render") {
      if (!doc.marked.is_null()) {
        const long long j = detail::required_j(doc);
        out << render(marked_from_json(doc.marked, inst, gamma_for(inst, j)));
      } else if (!doc.tabloid.is_null()) {
        out << render(tabloid_from_json(doc.tabloid, inst));
      } else {
        fail(Errc::validation_error,
             "command needs a marked or tabloid object");
      }
    } else {
      fail(Errc::validation_error, "unknown command '" + command + "'");
    }
  } catch (const Error& e) {
    res.exit_code = 2;
    res.err = std::string(e.what()) + "\n";
    return res;
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }
  res.out = out.str();
  return res;
}

}  // namespace tabloids
