#include "cli.hpp"

#include "verify.hpp"

#include "affblocks/characters.hpp"
#include "affblocks/drinfeld.hpp"
#include "affblocks/error.hpp"
#include "affblocks/hecke.hpp"
#include "affblocks/json_io.hpp"
#include "affblocks/lattice.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace affblocks::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Option values gathered from the command line, then from --file.
class Inputs {
 public:
  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& require(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw UsageError("missing required option --" + key);
    return it->second;
  }

  std::int64_t integer(const std::string& key) const { return to_integer(key, require(key)); }

  std::optional<std::int64_t> optional_integer(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return to_integer(key, *v);
  }

  void merge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open --file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    Json j = parse_json(buffer.str());
    if (!j.is_object()) throw ParseError("--file must contain a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (has(key)) continue;
      set(key, value.is_string() ? value.get<std::string>() : value.dump());
    }
  }

 private:
  static std::int64_t to_integer(const std::string& key, const std::string& text) {
    try {
      std::size_t used = 0;
      std::int64_t v = std::stoll(text, &used);
      if (used == text.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError("--" + key + " expects an integer, got '" + text + "'");
  }

  std::map<std::string, std::string> values_;
};

bool looks_like_json(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  return it != text.end() && (*it == '[' || *it == '{');
}

int n_from(const Inputs& in) {
  std::int64_t n = in.integer("n");
  if (n < 2 || n > 1'000'000) throw DomainError("n must be at least 2, got " + std::to_string(n));
  return static_cast<int>(n);
}

DominantTuple tuple_input(const Inputs& in, const std::string& key) {
  const std::string& text = in.require(key);
  std::optional<int> n;
  if (in.has("n")) n = n_from(in);
  if (looks_like_json(text)) return tuple_from_json(parse_json(text), n);
  DominantTuple q = parse_tuple(text);
  if (n && q.n() != *n) {
    throw DomainError("tuple has " + std::to_string(q.n()) + " components, n=" + std::to_string(*n));
  }
  return q;
}

Multisegment multisegment_input(const Inputs& in, const std::string& key) {
  return multisegment_from_json(parse_json(in.require(key)));
}

std::vector<int> index_list(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("malformed index list '" + text + "'");
    }
  }
  return out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

using Handler = std::function<int(const Inputs&, bool json, std::ostream& out)>;

int cmd_dominant_check(const Inputs& in, bool json, std::ostream& out) {
  bool dominant = true;
  try {
    tuple_input(in, "q");
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    if (std::string(e.what()).rfind("tuple is not dominant", 0) != 0) throw;
    dominant = false;
  }
  if (json) {
    out << Json{{"dominant", dominant}}.dump() << '\n';
  } else {
    out << boolean(dominant) << '\n';
  }
  return kOk;
}

int cmd_kappa(const Inputs& in, bool json, std::ostream& out) {
  DominantTuple q = tuple_input(in, "q");
  auto slots = kappa_tuple(q);
  if (json) {
    Json p = Json::array();
    for (const Poly& s : slots) p.push_back(to_json(s));
    out << Json{{"n", q.n()}, {"P", p}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      out << "P[" << i + 1 << "]: " << to_string(slots[i]) << '\n';
    }
  }
  return kOk;
}

int cmd_fundamental(const Inputs& in, bool json, std::ostream& out) {
  DominantTuple q = fundamental(static_cast<int>(in.integer("i")), parse_root(in.require("a")), n_from(in));
  out << (json ? to_json(q).dump() : to_string(q)) << '\n';
  return kOk;
}

int cmd_decompose(const Inputs& in, bool json, std::ostream& out) {
  DominantTuple q = tuple_input(in, "q");
  auto factors = decompose_fundamentals(q);
  if (json) {
    Json list = Json::array();
    for (const auto& f : factors) list.push_back({{"i", f.i}, {"a", to_json(f.a)}});
    out << Json{{"n", q.n()}, {"factors", list}}.dump() << '\n';
  } else {
    std::string text;
    for (const auto& f : factors) {
      if (!text.empty()) text += ',';
      text += "Q[" + std::to_string(f.i) + ';' + to_string(f.a) + ']';
    }
    out << (text.empty() ? "1" : text) << '\n';
  }
  return kOk;
}

int cmd_elliptic(const Inputs& in, bool json, std::ostream& out) {
  EllipticCharacter chi = elliptic_character(tuple_input(in, "q"));
  out << (json ? to_json(chi).dump() : to_string(chi)) << '\n';
  return kOk;
}

int cmd_same_block(const Inputs& in, bool json, std::ostream& out) {
  DominantTuple x = tuple_input(in, "a");
  DominantTuple y = tuple_input(in, "b");
  bool same = same_block(x, y);
  if (json) {
    out << Json{{"same_block", same},
                {"a", to_json(elliptic_character(x))},
                {"b", to_json(elliptic_character(y))}}
               .dump()
        << '\n';
  } else {
    out << boolean(same) << '\n';
  }
  return kOk;
}

int cmd_character(const Inputs& in, bool json, std::ostream& out) {
  CharacterSum ch = ch_fundamental(static_cast<int>(in.integer("i")), parse_root(in.require("a")), n_from(in));
  out << (json ? to_json(ch).dump() : to_string(ch)) << '\n';
  return kOk;
}

int cmd_factorize_lweight(const Inputs& in, bool json, std::ostream& out) {
  const int n = n_from(in);
  SubsetWeight sw{index_list(in.require("j")), parse_root(in.require("a"))};
  XnElement weight = subset_weight(sw, n);
  auto chain = factorize_lweight(sw, n);
  if (json) {
    Json steps = Json::array();
    for (const auto& f : chain) steps.push_back({{"k", f.k}, {"b", to_json(f.root)}});
    out << Json{{"n", n}, {"i", sw.i()}, {"a", to_json(sw.a)}, {"weight", to_string(weight)},
                {"chain", steps}}
               .dump()
        << '\n';
  } else {
    out << "weight " << to_string(weight) << '\n';
    for (const auto& f : chain) out << "step " << f.k << ' ' << to_string(f.root) << '\n';
  }
  return kOk;
}

int cmd_beta_coords(const Inputs& in, bool json, std::ostream& out) {
  XnElement x = parse_xn(in.require("x"), n_from(in));
  auto coords = beta_coordinates(x);
  bool plus = in_rn_plus(x);
  bool minus = in_rn_minus(x);
  if (json) {
    out << Json{{"in_rn", coords.has_value()},
                {"coords", coords ? Json(to_string(*coords)) : Json(nullptr)},
                {"plus", plus},
                {"minus", minus}}
               .dump()
        << '\n';
  } else {
    out << "in_rn=" << boolean(coords.has_value()) << " coords=" << (coords ? to_string(*coords) : "-")
        << " plus=" << boolean(plus) << " minus=" << boolean(minus) << '\n';
  }
  return kOk;
}

int cmd_segments_to_drinfeld(const Inputs& in, bool json, std::ostream& out) {
  DominantTuple q = segments_to_drinfeld(multisegment_input(in, "segments"), n_from(in));
  out << (json ? to_json(q).dump() : to_string(q)) << '\n';
  return kOk;
}

int cmd_hecke_same_block(const Inputs& in, bool json, std::ostream& out) {
  Multisegment x = multisegment_input(in, "a");
  Multisegment y = multisegment_input(in, "b");
  bool same = hecke_same_block(x, y);
  if (json) {
    out << Json{{"same_block", same}, {"a", to_json(juxtapose(x))}, {"b", to_json(juxtapose(y))}}.dump()
        << '\n';
  } else {
    out << boolean(same) << '\n';
  }
  return kOk;
}

int cmd_verify(const Inputs& in, bool json, std::ostream& out) {
  VerifyOptions o;
  if (auto s = in.get("suite")) o.suite = *s;
  if (auto v = in.optional_integer("seed")) o.seed = static_cast<std::uint64_t>(*v);
  if (auto v = in.optional_integer("iters")) o.iters = static_cast<int>(*v);
  if (auto v = in.optional_integer("max-n")) o.max_n = static_cast<int>(*v);
  if (auto v = in.optional_integer("max-r")) o.max_r = static_cast<int>(*v);
  std::vector<PropertyResult> results;
  try {
    results = run_verify(o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (json) {
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back({{"suite", r.suite}, {"property", r.property}, {"passed", r.passed},
                      {"checks", r.checks}, {"detail", r.detail}});
    }
    out << Json{{"passed", all}, {"seed", o.seed}, {"iters", o.iters}, {"results", list}}.dump() << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.property << " (" << r.checks
          << " checks)";
      if (!r.passed) out << " -- " << r.detail;
      out << '\n';
    }
    out << (all ? "all properties passed" : "some properties FAILED") << '\n';
  }
  return all ? kOk : kDomainError;
}

struct Subcommand {
  const char* name;
  const char* description;
  std::vector<std::pair<const char*, const char*>> options;
  Handler handler;
};

const std::vector<Subcommand>& subcommands() {
  static const char* kN = "n (rank, >= 2)";
  static const char* kTuple = "dominant tuple: JSON {\"n\":N,\"components\":[[root,...],...]}, "
                              "a bare components array, or `f1 ; f2 ; ...` text";
  static const std::vector<Subcommand> table = {
      {"dominant-check", "Test the dominance condition", {{"n", kN}, {"q", kTuple}}, cmd_dominant_check},
      {"kappa", "P_i(u) = Q_i(v^{i-1}u) / Q_{i+1}(v^{i+1}u)", {{"n", kN}, {"q", kTuple}}, cmd_kappa},
      {"fundamental", "Fundamental tuple Q_{i,a}",
       {{"n", kN}, {"i", "index 1..n"}, {"a", "root literal"}}, cmd_fundamental},
      {"decompose", "Factor a dominant tuple into fundamental tuples", {{"n", kN}, {"q", kTuple}},
       cmd_decompose},
      {"elliptic", "Elliptic character (r, prod Q_i)", {{"n", kN}, {"q", kTuple}}, cmd_elliptic},
      {"same-block", "Do two dominant tuples lie in the same block?",
       {{"n", kN}, {"a", kTuple}, {"b", kTuple}}, cmd_same_block},
      {"character", "v-character of the fundamental module L(Q_{i,a})",
       {{"n", kN}, {"i", "index 1..n"}, {"a", "root literal"}}, cmd_character},
      {"factorize-lweight", "Write an l-weight as Q_{i,a} times inverse l-simple roots",
       {{"n", kN}, {"j", "strictly increasing indices, e.g. 1,3"}, {"a", "root literal"}},
       cmd_factorize_lweight},
      {"beta-coords", "Solve for l-root lattice coordinates",
       {{"n", kN}, {"x", "X_n element, e.g. L[1;a*v^0]^1,L[2;a*v^0]^-1"}}, cmd_beta_coords},
      {"segments-to-drinfeld", "Dominant tuple of a multisegment (needs n > r)",
       {{"n", kN}, {"segments", "JSON {\"segments\":[{\"center\":root,\"length\":k},...]}"}},
       cmd_segments_to_drinfeld},
      {"hecke-same-block", "Do two multisegments lie in the same Hecke block?",
       {{"a", "multisegment JSON"}, {"b", "multisegment JSON"}}, cmd_hecke_same_block},
      {"verify", "Run the randomized invariant sweeps",
       {{"suite", "all|scalar|polyring|lattice|drinfeld|characters|hecke (default all)"},
        {"seed", "RNG seed (default 0)"},
        {"iters", "iterations per property (default 500)"},
        {"max-n", "largest n (default 6)"},
        {"max-r", "largest r (default 10)"}},
       cmd_verify},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"affblocks: block classification for affine quantum Schur and Hecke algebras", "affblocks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string file;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--file", file, "JSON object supplying any option not given inline");

  std::map<std::string, std::map<std::string, std::string>> raw;
  std::map<std::string, std::vector<CLI::Option*>> bound;
  for (const Subcommand& sc : subcommands()) {
    CLI::App* sub = app.add_subcommand(sc.name, sc.description);
    for (const auto& [opt, help] : sc.options) {
      bound[sc.name].push_back(sub->add_option(std::string("--") + opt, raw[sc.name][opt], help));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (e.get_name() == "CallForAllHelp" ? app.help("", CLI::AppFormatMode::All)
                                               : app.help());
      if (!app.get_subcommands().empty()) out << app.get_subcommands().front()->help();
      return kOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  const Subcommand* chosen = nullptr;
  for (const Subcommand& sc : subcommands()) {
    if (app.got_subcommand(sc.name)) chosen = &sc;
  }

  try {
    Inputs inputs;
    for (CLI::Option* opt : bound[chosen->name]) {
      if (opt->count() > 0) {
        std::string key = opt->get_name().substr(2);
        inputs.set(key, raw[chosen->name][key]);
      }
    }
    if (!file.empty()) inputs.merge_file(file);
    return chosen->handler(inputs, json, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace affblocks::cli
