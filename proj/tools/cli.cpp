#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "masseyx/access.hpp"
#include "masseyx/catalog.hpp"
#include "masseyx/enumerator.hpp"
#include "masseyx/matrix_io.hpp"
#include "masseyx/reproduce.hpp"
#include "masseyx/scheme.hpp"

namespace masseyx::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string code;
  bool use_dual = false;
  std::size_t l = 0;
  std::uint64_t cap = kDefaultCap;
  unsigned threads = 1;
  std::string format = "json";
};

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError(std::string("malformed ") + what + " list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Elem> parse_elems(const std::string& text) {
  std::vector<Elem> out;
  for (auto v : parse_list(text, "element")) out.push_back(static_cast<Elem>(v));
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto v : parse_list(text, "index")) out.push_back(static_cast<std::size_t>(v));
  return out;
}

LinearCode resolve_code(std::string spec, bool use_dual) {
  if (spec.rfind("dual:", 0) == 0) {
    spec = spec.substr(5);
    use_dual = !use_dual;
  }
  if (spec.empty()) throw UsageError("--code is required");
  LinearCode c = is_catalog_name(spec) ? load(spec).code : load_code_file(spec);
  return use_dual ? dual(c) : c;
}

SchemeInstance resolve_scheme(const Common& o) {
  if (o.l == 0) throw UsageError("--l is required");
  return SchemeInstance(resolve_code(o.code, o.use_dual), o.l, o.cap);
}

json histogram_json(const std::map<std::size_t, std::uint64_t>& h) {
  json j = json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

json optional_json(const auto& v) { return v ? json(*v) : json(nullptr); }

json bounds_json(const BoundsRecord& b) {
  return {{"dual_distance", b.dual_distance},   {"dual_ghw", optional_json(b.dual_ghw)},
          {"ghw_bound", optional_json(b.ghw_bound)}, {"simple_bound", optional_json(b.simple_bound)},
          {"noinfo_bound", b.noinfo_bound},     {"recover_threshold", b.recover_threshold},
          {"max_excluded_size", b.max_excluded_size()}};
}

json polynomial_result(const SparseEnumerator& p) {
  return {{"polynomial", to_json(p)}, {"pretty", pretty(p)}, {"terms", p.size()}};
}

JweArgument parse_jwe_arg(const std::string& text, bool use_dual) {
  // ind:N:i,j,...   vec:a,b,...   otherwise a code (catalog name or file, optional dual: prefix)
  if (text.rfind("ind:", 0) == 0) {
    const auto colon = text.find(':', 4);
    if (colon == std::string::npos) throw UsageError("indicator argument must read ind:N:i,j,...");
    const auto n = parse_indices(text.substr(4, colon - 4));
    if (n.size() != 1) throw UsageError("indicator argument must read ind:N:i,j,...");
    const auto pos = parse_indices(text.substr(colon + 1));
    return JweArgument::indicator(n[0], pos);
  }
  if (text.rfind("vec:", 0) == 0) return JweArgument::fixed(parse_elems(text.substr(4)));
  return JweArgument::code(resolve_code(text, use_dual));
}

void render_pretty(const json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (key == "polynomial" && j.contains("pretty")) continue;
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_pretty(value, out, indent + "  ");
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << indent << key << ": " << value.dump() << '\n';
    }
  }
}

void add_common(CLI::App* sub, Common& o, bool needs_l) {
  sub->add_option("--code", o.code, "catalog name or code file; prefix with dual: for the dual code");
  sub->add_flag("--dual", o.use_dual, "use the dual of --code");
  if (needs_l) sub->add_option("--l", o.l, "secret length")->check(CLI::PositiveNumber);
  sub->add_option("--cap", o.cap, "enumeration budget")->capture_default_str();
  sub->add_option("--threads", o.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "pretty"}))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secret sharing from linear codes: access structures and joint weight enumerators", "masseyx"};
  app.require_subcommand(1);

  Common o;
  std::string secret, group, shares, backend = "auto", target, catalog_action = "list", name;
  std::vector<std::string> jwe_args;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  bool no_ghw = false;
  std::function<json()> action;

  auto* cat = app.add_subcommand("catalog", "list or show built-in codes");
  cat->add_option("action", catalog_action, "list | show")->check(CLI::IsMember({"list", "show"}));
  cat->add_option("name", name, "catalog name for show");
  cat->add_option("--format", o.format)->check(CLI::IsMember({"json", "pretty"}));
  cat->callback([&] {
    action = [&] {
      json j;
      if (catalog_action == "list") {
        json entries = json::array();
        for (const auto& n : catalog_names()) {
          const CatalogEntry e = load(n);
          entries.push_back({{"name", e.name},
                             {"length", e.code.length()},
                             {"dimension", e.code.dimension()},
                             {"field", field_header(e.code.gf())},
                             {"self_dual", e.asserted.self_dual},
                             {"self_orthogonal", e.asserted.self_orthogonal},
                             {"two_transitive_asserted", e.asserted.two_transitive},
                             {"provenance", e.provenance}});
        }
        j["codes"] = entries;
        j["data_dir"] = data_directory().string();
        return j;
      }
      if (name.empty()) throw UsageError("catalog show needs a name");
      const CatalogEntry e = load(name);
      j["name"] = e.name;
      j["provenance"] = e.provenance;
      j["matrix"] = to_string(e.code);
      j["min_distance"] = min_distance(e.code);
      return j;
    };
  });

  auto* deal_cmd = app.add_subcommand("deal", "deal shares of a secret");
  add_common(deal_cmd, o, true);
  deal_cmd->add_option("--secret", secret, "comma-separated field elements")->required();
  deal_cmd->add_option("--seed", seed)->capture_default_str();
  deal_cmd->callback([&] {
    action = [&] {
      const SchemeInstance s = resolve_scheme(o);
      const ShareVector v = deal(s, parse_elems(secret), seed);
      json sh = json::object();
      for (std::size_t i = 0; i < v.shares.size(); ++i) sh[std::to_string(i + 1)] = v.shares[i];
      return json{{"shares", sh}, {"seed", seed}};
    };
  });

  auto* rec = app.add_subcommand("reconstruct", "recover the secret from a share subset");
  add_common(rec, o, true);
  rec->add_option("--shares", shares, "JSON object {participant: element}, or @file")->required();
  rec->add_option("--group", group, "comma-separated participants (default: the keys of --shares)");
  rec->callback([&] {
    action = [&] {
      const SchemeInstance s = resolve_scheme(o);
      std::string text = shares;
      if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw UsageError("cannot read " + text.substr(1));
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      json parsed;
      try {
        parsed = json::parse(text);
      } catch (const json::exception& e) {
        throw UsageError(std::string("--shares is not valid JSON: ") + e.what());
      }
      if (!parsed.is_object()) throw UsageError("--shares must be a JSON object");
      ShareMap map;
      for (const auto& [k, v] : parsed.items()) {
        const auto idx = parse_indices(k);
        if (idx.size() != 1 || !v.is_number_unsigned()) throw UsageError("malformed share entry '" + k + "'");
        map[idx[0]] = v.get<Elem>();
      }
      std::vector<std::size_t> g = parse_indices(group);
      if (g.empty())
        for (const auto& [k, v] : map) g.push_back(k);
      const auto result = reconstruct(s, g, map);
      json j{{"group", g}, {"authorized", result.has_value()}};
      j["secret"] = result ? json(*result) : json(nullptr);
      return j;
    };
  });

  auto* cls = app.add_subcommand("classify", "classify one participant group");
  add_common(cls, o, true);
  cls->add_option("--group", group, "comma-separated participants")->required();
  cls->callback([&] {
    action = [&] {
      const SchemeInstance s = resolve_scheme(o);
      const auto g = parse_indices(group);
      const GroupClassification c = classify_span(s, g);
      return json{{"group", g},
                  {"kind", std::string(to_string(c.kind))},
                  {"leaked_dim", c.leaked_dim},
                  {"dual_authorized", classify_dual(s, g)}};
    };
  });

  auto* acc = app.add_subcommand("access", "enumerate the access structure");
  add_common(acc, o, true);
  acc->add_option("--backend", backend)->check(CLI::IsMember({"auto", "tuples", "lattice"}))->capture_default_str();
  acc->add_flag("--no-ghw", no_ghw, "skip the generalized Hamming weight bound");
  acc->callback([&] {
    action = [&] {
      const SchemeInstance s = resolve_scheme(o);
      AccessOptions opts;
      opts.cap = o.cap;
      opts.threads = o.threads;
      opts.with_ghw = !no_ghw;
      opts.backend = backend == "tuples"    ? AccessBackend::DualTuples
                     : backend == "lattice" ? AccessBackend::SubsetLattice
                                            : AccessBackend::Automatic;
      const AccessReport r = enumerate_access_structure(s, opts);
      return json{{"minimal_groups", r.minimal_groups},
                  {"histogram", histogram_json(r.histogram)},
                  {"tuple_histogram", histogram_json(r.tuple_histogram)},
                  {"bounds", bounds_json(r.bounds)}};
    };
  });

  auto* bnd = app.add_subcommand("bounds", "group-size bounds of a scheme");
  add_common(bnd, o, true);
  bnd->add_flag("--no-ghw", no_ghw, "skip the generalized Hamming weight bound");
  bnd->callback([&] {
    action = [&] {
      const SchemeInstance s = resolve_scheme(o);
      json j = bounds_json(bounds(s, o.cap, !no_ghw));
      j["cheater_capacity"] = cheater_capacity(s);
      j["information_rate"] = information_rate(s);
      return j;
    };
  });

  auto* jwe = app.add_subcommand("jwe", "joint weight enumerator of g arguments");
  add_common(jwe, o, false);
  jwe->add_option("--arg", jwe_args, "code (name, file, dual:...), ind:N:i,j,... or vec:a,b,...");
  jwe->add_option("--g", m, "use g copies of --code instead of --arg");
  jwe->callback([&] {
    action = [&] {
      std::vector<JweArgument> list;
      for (const auto& a : jwe_args) list.push_back(parse_jwe_arg(a, false));
      if (!o.code.empty()) {
        const LinearCode c = resolve_code(o.code, o.use_dual);
        for (std::size_t i = 0; i < std::max<std::size_t>(m, 1); ++i) list.push_back(JweArgument::code(c));
      }
      if (list.empty()) throw UsageError("jwe needs --arg or --code");
      return polynomial_result(joint_weight_enumerator(list, o.cap, o.threads));
    };
  });

  auto* z = app.add_subcommand("z", "secret coefficient of a scheme");
  add_common(z, o, true);
  z->callback([&] {
    action = [&] { return polynomial_result(secret_coefficient(resolve_scheme(o), o.cap, o.threads)); };
  });

  auto* cnt = app.add_subcommand("count", "access-group count bound read off the secret coefficient");
  add_common(cnt, o, true);
  cnt->add_option("--m", m, "group size")->required();
  cnt->callback([&] {
    action = [&] {
      const SchemeInstance s = resolve_scheme(o);
      const SparseEnumerator p = secret_coefficient(s, o.cap, o.threads);
      const std::size_t d_perp = min_distance(LinearCode(s.code().field(), s.dual_generator()), o.cap);
      const CountBound b = count_bound(p, m, d_perp);
      return json{{"m", m}, {"bound", b.bound.str()}, {"exact", b.exact}, {"dual_distance", d_perp}};
    };
  });

  auto* ext = app.add_subcommand("extenum", "extension enumerator of a self-orthogonal code");
  add_common(ext, o, false);
  ext->callback([&] {
    action = [&] {
      const ExtensionEnumerator e = extension_enumerator(resolve_code(o.code, o.use_dual), o.cap);
      json terms = json::object();
      for (const auto& [d, c] : e.terms) terms[std::to_string(d)] = c;
      return json{{"terms", terms},
                  {"zero_coset_degree", e.zero_coset_degree},
                  {"max_nonzero_degree", e.max_nonzero_degree},
                  {"cosets", e.total()}};
    };
  });

  auto* ver = app.add_subcommand("verify-count", "count access groups of size m and certify the count");
  add_common(ver, o, true);
  ver->add_option("--m", m, "group size")->required();
  ver->callback([&] {
    action = [&] {
      const ExactCount c = verify_exact_count(resolve_scheme(o), m, o.cap, o.threads);
      return json{{"m", m}, {"count", c.count}, {"certified", c.certified}, {"tuples", c.tuples}};
    };
  });

  auto* dz = app.add_subcommand("derive-z", "secret coefficient from the biweight enumerator (2-transitive codes)");
  add_common(dz, o, false);
  dz->callback([&] {
    action = [&] {
      const LinearCode c = resolve_code(o.code, o.use_dual);
      const std::vector<JweArgument> list{JweArgument::code(c), JweArgument::code(c)};
      const SparseEnumerator bw = joint_weight_enumerator(list, o.cap, o.threads);
      return polynomial_result(derivative_z(bw, c.length()));
    };
  });

  auto* rep = app.add_subcommand("reproduce", "run a pinned reproduction check");
  rep->add_option("target", target, "target name or all")->required();
  rep->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  rep->add_option("--format", o.format)->check(CLI::IsMember({"json", "pretty"}));
  bool reproduction_failed = false;
  rep->callback([&] {
    action = [&] {
      std::vector<std::string> targets;
      if (target == "all")
        targets = reproduction_targets();
      else
        targets.push_back(target);
      json j = json::object();
      for (const auto& t : targets) {
        const auto start = std::chrono::steady_clock::now();
        const ReproductionResult r = run_reproduction(t, o.threads);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        err << (r.pass ? "PASS " : "FAIL ") << t << " (" << secs << " s)\n";
        reproduction_failed = reproduction_failed || !r.pass;
        json d = r.details;
        d["pass"] = r.pass;
        j[t] = d;
      }
      return j;
    };
  });

  std::vector<const char*> argv{"masseyx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const json result = action();
    if (o.format == "pretty")
      render_pretty(result, out);
    else
      out << result.dump(2) << '\n';
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return reproduction_failed ? 1 : 0;
}

}  // namespace masseyx::cli
