// Copyright (C) 2026 The dpz Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through dpz.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dpz/dpz.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct Options {
  std::string format = "json";
  std::string surface;
  std::string beta;
  std::optional<std::string> beta_range;
  std::optional<std::string> k_range;
  std::optional<std::string> cache_dir;
  bool witness = false;
  bool relaxed = false;
  bool low_degree = false;
  int i = 0;
  int k = 0;
  int m = 0;
  int max_k = 12;
  int max_total = 12;
  int degree = 0;
  std::int64_t chi = 1;
  std::int64_t chi_o = 1;
  std::int64_t q = 0;
  std::int64_t k2 = 1;
  std::int64_t n = 2;
};

// One evaluation point of a (possibly swept) query.
struct Point {
  std::string beta;
  int k = 0;
};

struct Outcome {
  json envelope;
  int exit_code = kExitOk;
  std::string error;
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CliError("range must look like lo:hi, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::int64_t lo = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw CliError("bad range '" + text + "'");
    const std::string rest = text.substr(colon + 1);
    const std::int64_t hi = std::stoll(rest, &used);
    if (used != rest.size()) throw CliError("bad range '" + text + "'");
    if (lo > hi) throw CliError("empty range '" + text + "'");
    if (hi - lo > 10000) throw CliError("range '" + text + "' is too long");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw CliError("bad range '" + text + "'");
  }
}

// n * beta on the coordinate string.
std::string scale(const std::string& beta, std::int64_t n) {
  std::stringstream in(beta);
  std::string part, out;
  while (std::getline(in, part, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::logic_error&) {
      throw CliError("bad coordinate '" + part + "' in '" + beta + "'");
    }
    if (used != part.size()) throw CliError("bad coordinate '" + part + "' in '" + beta + "'");
    out += (out.empty() ? "" : ",") + std::to_string(n * v);
  }
  return out;
}

int exit_for(dpz_status status) {
  switch (status) {
    case DPZ_OK: return kExitOk;
    case DPZ_E_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

const char* status_name(dpz_status status) {
  switch (status) {
    case DPZ_OK: return "ok";
    case DPZ_E_INPUT: return "input";
    case DPZ_E_INTERNAL: return "internal";
    case DPZ_E_TRUNCATION: return "truncation";
    case DPZ_E_NOT_CERTIFIED: return "not_certified";
    case DPZ_E_NULL: return "null";
  }
  return "unknown";
}

using Call = std::function<dpz_status(const dpz_surface*, const Point&, dpz_result**)>;

Outcome evaluate(const std::string& command, const Options& opt, const Point& p, bool needs_surface,
                 const Call& call, const json& query) {
  Outcome out;
  dpz_surface* surface = nullptr;
  if (needs_surface) {
    if (const dpz_status st = dpz_surface_open(opt.surface.c_str(), &surface); st != DPZ_OK) {
      out.exit_code = exit_for(st);
      out.error = dpz_last_error();
      return out;
    }
  }
  dpz_result* result = nullptr;
  const dpz_status st = call(surface, p, &result);
  if (st != DPZ_OK) {
    out.exit_code = exit_for(st);
    out.error = std::string(status_name(st)) + " error in " + command + ": " + dpz_last_error();
    dpz_surface_close(surface);
    return out;
  }
  json payload = json::parse(dpz_result_json(result));
  const int certified = dpz_result_certified(result);
  dpz_result_free(result);
  dpz_surface_close(surface);

  json warnings = json::array();
  if (auto it = payload.find("warnings"); it != payload.end()) {
    warnings = *it;
    payload.erase(it);
  }
  out.envelope = json{{"query", query},
                      {"result", payload},
                      {"certified", certified < 0 ? json(nullptr) : json(certified == 1)},
                      {"warnings", warnings}};
  return out;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void render(const std::vector<Outcome>& outcomes, const std::string& format, std::ostream& os) {
  if (format == "json") {
    if (outcomes.size() == 1) {
      os << outcomes.front().envelope.dump(2) << '\n';
    } else {
      json all = json::array();
      for (const auto& o : outcomes) all.push_back(o.envelope);
      os << all.dump(2) << '\n';
    }
    return;
  }
  if (format == "csv") {
    // Betti tables keep their natural k,value layout.
    if (outcomes.size() == 1 && outcomes.front().envelope["result"].contains("betti")) {
      os << "k,value\n";
      std::vector<std::pair<int, json>> rows;
      for (const auto& [k, v] : outcomes.front().envelope["result"]["betti"].items()) rows.emplace_back(std::stoi(k), v);
      std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [k, v] : rows) os << k << ',' << v.dump() << '\n';
      return;
    }
    os << "key,value\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      std::vector<std::pair<std::string, std::string>> rows;
      flatten(outcomes[i].envelope, outcomes.size() == 1 ? "" : std::to_string(i), rows);
      for (const auto& [k, v] : rows) os << csv_field(k) << ',' << csv_field(v) << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i) os << '\n';
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(outcomes[i].envelope, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
}

struct Command {
  std::string name;
  bool needs_surface = true;
  bool uses_beta = false;
  bool uses_k = false;  // the parameter swept by --k-range
  Call call;
};

json make_query(const std::string& name, const Options& opt, const Command& cmd, const Point& p) {
  json q{{"subcommand", name}};
  if (cmd.needs_surface) q["surface"] = opt.surface;
  if (cmd.uses_beta) q["beta"] = p.beta;
  if (name == "check-a" || name == "min-n") q["i"] = p.k;
  if (name == "check-a") q["relaxed"] = opt.relaxed;
  if (name == "codim") q["witness"] = opt.witness;
  if (name == "betti") q["m"] = p.k;
  if (name == "stable-betti") q["max_k"] = p.k;
  if (name == "moduli-betti" || name == "taut-count") q["k"] = p.k;
  if (name == "moduli-betti" || name == "jac-degree") q["chi"] = opt.chi;
  if (name == "bps") {
    q["low_degree"] = opt.low_degree;
    if (opt.low_degree) q["surface"] = opt.surface;
    if (!opt.low_degree) {
      q["max_total"] = p.k;
      q["degree"] = opt.degree > 0 ? json(opt.degree) : json(nullptr);
    }
  }
  if (name == "gap") q.update({{"chi_O", opt.chi_o}, {"q", opt.q}, {"K2", opt.k2}, {"n", opt.n}});
  return q;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Positivity, Betti number and BPS calculator for del Pezzo surfaces", "dpz"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--cache-dir", opt.cache_dir, "Directory for cached series expansions");

  auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--cache-dir", opt.cache_dir, "Directory for cached series expansions");
  };
  auto with_surface = [&](CLI::App* sub) { sub->add_option("--surface", opt.surface, "P2, P1xP1 or S1..S8")->required(); };
  auto with_beta = [&](CLI::App* sub) {
    sub->add_option("--beta", opt.beta, "Class as comma-separated coordinates, e.g. 5,-2")->required();
    sub->add_option("--beta-range", opt.beta_range, "Sweep n*beta for n in lo:hi");
  };
  auto with_k_range = [&](CLI::App* sub) { sub->add_option("--k-range", opt.k_range, "Sweep the integer parameter over lo:hi"); };

  // Swept parameters are required unless --k-range supplies them.
  std::map<std::string, CLI::Option*> swept;
  auto sweepable = [&](CLI::App* sub, const std::string& flag, int& var, const std::string& help) {
    swept[sub->get_name()] = sub->add_option(flag, var, help);
  };

  std::vector<Command> commands;
  auto add = [&](const std::string& name, const std::string& help, Command cmd, const std::function<void(CLI::App*)>& setup) {
    CLI::App* sub = app.add_subcommand(name, help);
    with_format(sub);
    if (cmd.needs_surface) with_surface(sub);
    if (cmd.uses_beta) with_beta(sub);
    if (cmd.uses_k) with_k_range(sub);
    if (setup) setup(sub);
    cmd.name = name;
    commands.push_back(std::move(cmd));
  };

  add("surface", "Picard lattice data", {.call = [](auto s, auto&, auto out) { return dpz_surface_info(s, out); }}, {});
  add("rr", "Riemann-Roch for O(beta)",
      {.uses_beta = true, .call = [](auto s, auto& p, auto out) { return dpz_riemann_roch(s, p.beta.c_str(), out); }}, {});
  add("genus", "Arithmetic genus",
      {.uses_beta = true, .call = [](auto s, auto& p, auto out) { return dpz_genus(s, p.beta.c_str(), out); }}, {});
  add("lines", "(-1)-curves", {.call = [](auto s, auto&, auto out) { return dpz_lines(s, out); }}, {});
  add("codim", "Codimension of the non-integral locus",
      {.uses_beta = true,
       .call = [&opt](auto s, auto& p, auto out) { return dpz_codim(s, p.beta.c_str(), opt.witness ? 1 : 0, out); }},
      [&](CLI::App* sub) { sub->add_flag("--witness", opt.witness, "Include a stratum realising the codimension"); });
  add("check-a", "Positivity condition A(i)",
      {.uses_beta = true,
       .uses_k = true,
       .call = [&opt](auto s, auto& p, auto out) { return dpz_check_a(s, p.beta.c_str(), p.k, opt.relaxed ? 1 : 0, out); }},
      [&](CLI::App* sub) {
        sweepable(sub, "--i", opt.i, "Index i");
        sub->add_flag("--relaxed", opt.relaxed, "Use the relaxed very-ampleness clause");
      });
  add("check-p", "Condition (P)",
      {.uses_beta = true, .call = [](auto s, auto& p, auto out) { return dpz_check_p(s, p.beta.c_str(), out); }}, {});
  add("min-n", "Least n with A(i) for n*beta",
      {.uses_beta = true,
       .uses_k = true,
       .call = [](auto s, auto& p, auto out) { return dpz_min_n(s, p.beta.c_str(), p.k, out); }},
      [&](CLI::App* sub) { sweepable(sub, "--i", opt.i, "Index i"); });
  add("betti", "Betti numbers of the Hilbert scheme of m points",
      {.uses_k = true, .call = [](auto s, auto& p, auto out) { return dpz_betti(s, p.k, out); }},
      [&](CLI::App* sub) { sweepable(sub, "--m", opt.m, "Number of points"); });
  add("stable-betti", "Stable Betti numbers",
      {.uses_k = true, .call = [](auto s, auto& p, auto out) { return dpz_stable_betti(s, p.k, out); }},
      [&](CLI::App* sub) { sub->add_option("--max-k", opt.max_k, "Largest degree"); });
  add("moduli-betti", "Intersection Betti number of M_{beta,chi}",
      {.uses_beta = true,
       .uses_k = true,
       .call = [&opt](auto s, auto& p, auto out) { return dpz_moduli_betti(s, p.beta.c_str(), opt.chi, p.k, out); }},
      [&](CLI::App* sub) {
        sweepable(sub, "--k", opt.k, "Cohomological degree");
        sub->add_option("--chi", opt.chi, "Euler characteristic");
      });
  add("moduli-dim", "Dimension of M_beta",
      {.uses_beta = true, .call = [](auto s, auto& p, auto out) { return dpz_moduli_dim(s, p.beta.c_str(), out); }}, {});
  add("jac-degree", "Degree of the compactified Jacobian",
      {.uses_beta = true,
       .call = [&opt](auto s, auto& p, auto out) { return dpz_jac_degree(s, p.beta.c_str(), opt.chi, out); }},
      [&](CLI::App* sub) { sub->add_option("--chi", opt.chi, "Euler characteristic"); });
  add("picard-bound", "Lower bound for the Picard number of M_beta",
      {.uses_beta = true, .call = [](auto s, auto& p, auto out) { return dpz_picard_bound(s, p.beta.c_str(), out); }},
      {});
  add("bps", "Refined BPS numbers",
      {.needs_surface = false,
       .uses_k = true,
       .call = [&opt](auto, auto& p, auto out) {
         if (opt.low_degree) {
           dpz_surface* s = nullptr;
           if (dpz_status st = dpz_surface_open(opt.surface.c_str(), &s); st != DPZ_OK) return st;
           const dpz_status st = dpz_bps_low_degree(s, out);
           dpz_surface_close(s);
           return st;
         }
         return dpz_bps_series(p.k, opt.degree, out);
       }},
      [&](CLI::App* sub) {
        sub->add_option("--max-total", opt.max_total, "Largest total degree i+j");
        sub->add_option("--degree", opt.degree, "Curve degree d; marks entries beyond 2d-4");
        sub->add_flag("--low-degree", opt.low_degree, "Proved low-degree values for --surface");
        sub->add_option("--surface", opt.surface, "Surface for --low-degree");
      });
  add("taut-count", "Monomials in the tautological generators",
      {.uses_k = true, .call = [](auto s, auto& p, auto out) { return dpz_taut_count(s, p.k, out); }},
      [&](CLI::App* sub) { sweepable(sub, "--k", opt.k, "Degree"); });
  add("gap", "Dimension gap for surfaces of general type",
      {.needs_surface = false, .call = [&opt](auto, auto&, auto out) { return dpz_gap(opt.chi_o, opt.q, opt.k2, opt.n, out); }},
      [&](CLI::App* sub) {
        sub->add_option("--chi-o", opt.chi_o, "chi(O_S)")->required();
        sub->add_option("--q", opt.q, "Irregularity")->required();
        sub->add_option("--k2", opt.k2, "K_S^2")->required();
        sub->add_option("--n", opt.n, "Multiple of K_S")->required();
      });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const Command* cmd = nullptr;
  for (const auto& c : commands) {
    if (app.got_subcommand(c.name)) cmd = &c;
  }
  if (!cmd) return kExitInput;

  try {
    if (opt.low_degree && opt.surface.empty()) throw CliError("--low-degree needs --surface");
    if (opt.cache_dir) {
      if (dpz_set_cache_dir(opt.cache_dir->c_str()) != DPZ_OK) throw CliError(dpz_last_error());
    }

    if (const auto it = swept.find(cmd->name); it != swept.end() && it->second->count() == 0 && !opt.k_range)
      throw CliError(it->second->get_name() + " is required");

    int base_k = 0;
    if (cmd->name == "check-a" || cmd->name == "min-n") base_k = opt.i;
    else if (cmd->name == "betti") base_k = opt.m;
    else if (cmd->name == "stable-betti") base_k = opt.max_k;
    else if (cmd->name == "moduli-betti" || cmd->name == "taut-count") base_k = opt.k;
    else if (cmd->name == "bps") base_k = opt.max_total;

    std::vector<std::string> betas{opt.beta};
    if (cmd->uses_beta && opt.beta_range) {
      betas.clear();
      const auto [lo, hi] = parse_range(*opt.beta_range);
      for (std::int64_t n = lo; n <= hi; ++n) betas.push_back(scale(opt.beta, n));
    }
    std::vector<int> ks{base_k};
    if (cmd->uses_k && opt.k_range) {
      ks.clear();
      const auto [lo, hi] = parse_range(*opt.k_range);
      for (std::int64_t k = lo; k <= hi; ++k) ks.push_back(static_cast<int>(k));
    }

    std::vector<Point> points;
    for (const auto& b : betas)
      for (int k : ks) points.push_back({b, k});

    std::vector<std::future<Outcome>> futures;
    futures.reserve(points.size());
    for (const auto& p : points) {
      futures.push_back(std::async(std::launch::async, [&, p] {
        return evaluate(cmd->name, opt, p, cmd->needs_surface, cmd->call, make_query(cmd->name, opt, *cmd, p));
      }));
    }
    std::vector<Outcome> outcomes;
    for (auto& f : futures) outcomes.push_back(f.get());

    for (const auto& o : outcomes) {
      if (o.exit_code != kExitOk) {
        std::cerr << "dpz: " << o.error << '\n';
        return o.exit_code;
      }
    }
    render(outcomes, opt.format, std::cout);
  } catch (const CliError& e) {
    std::cerr << "dpz: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "dpz: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
