#include "holoform/specparse.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace holoform {

namespace {

std::string located(const std::string& source, int line, int column, const std::string& what) {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what;
}

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    if (lead) *lead = s.size();
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  if (lead) *lead = b;
  return s.substr(b, e - b + 1);
}

bool to_real(const std::string& s, double& out) {
  std::string t = trim(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool to_int(const std::string& s, int& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

struct Item {
  std::string key;
  std::string value;
  int column;  // of the value, 1-based within the full string
};

// "k=v,k=v" starting at `base` (0-based offset of text within the full spec)
std::vector<Item> split_items(const std::string& text, std::size_t base, const std::string& source) {
  std::vector<Item> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string piece = text.substr(pos, end - pos);
    const auto eq = piece.find('=');
    if (eq == std::string::npos) {
      throw ParseError(source, 1, static_cast<int>(base + pos + 1), "expected key=value, got '" + piece + "'");
    }
    out.push_back({trim(piece.substr(0, eq)), piece.substr(eq + 1), static_cast<int>(base + pos + eq + 2)});
    pos = end + 1;
  }
  return out;
}

double item_real(const Item& it, const std::string& source) {
  double v = 0.0;
  if (!to_real(it.value, v)) throw ParseError(source, 1, it.column, "'" + it.key + "' expects a number, got '" + it.value + "'");
  return v;
}

int item_int(const Item& it, const std::string& source) {
  int v = 0;
  if (!to_int(it.value, v)) throw ParseError(source, 1, it.column, "'" + it.key + "' expects an integer, got '" + it.value + "'");
  return v;
}

std::pair<std::string, std::string> split_kind(const std::string& spec, const std::string& source) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError(source, 1, 1, "expected <kind>:<parameters> in '" + spec + "'");
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

template <class Fn>
auto rethrow_invalid(const std::string& source, int column, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 1, column, e.what());
  }
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, int column, const std::string& what)
    : std::runtime_error(located(source, line, column, what)), line_(line), column_(column) {}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<double, double>> parse_weight_table(const std::string& text, const std::string& source) {
  std::vector<std::pair<double, double>> knots;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t lead = 0;
    const std::string t = trim(line, &lead);
    if (t.empty() || t[0] == '#') continue;
    const auto comma = t.find(',');
    if (comma == std::string::npos) throw ParseError(source, lineno, static_cast<int>(lead + 1), "expected t,K");
    double a = 0.0, b = 0.0;
    const bool ok_a = to_real(t.substr(0, comma), a);
    const bool ok_b = to_real(t.substr(comma + 1), b);
    if (!ok_a || !ok_b) {
      if (knots.empty() && !ok_a && !ok_b) continue;  // header row
      throw ParseError(source, lineno, static_cast<int>(lead + 1 + (ok_a ? comma + 1 : 0)), "expected a number");
    }
    knots.emplace_back(a, b);
  }
  return knots;
}

WeightFun parse_weight(const std::string& spec) {
  const std::string source = "weight spec";
  auto [kind, rest] = split_kind(spec, source);
  const std::size_t base = kind.size() + 1;
  if (kind == "table") {
    const std::string path = trim(rest);
    const auto knots = parse_weight_table(read_text_file(path), path);
    return rethrow_invalid(path, 1, [&] { return WeightFun::tabulated(knots); });
  }
  if (kind != "power" && kind != "powerlog") {
    throw ParseError(source, 1, 1, "unknown weight kind '" + kind + "' (power, powerlog, table)");
  }
  std::optional<double> q, beta;
  for (const Item& it : split_items(rest, base, source)) {
    if (it.key == "q") {
      q = item_real(it, source);
    } else if (it.key == "beta" && kind == "powerlog") {
      beta = item_real(it, source);
    } else {
      throw ParseError(source, 1, it.column - static_cast<int>(it.key.size()) - 1, "unknown key '" + it.key + "'");
    }
  }
  if (!q) throw ParseError(source, 1, static_cast<int>(base + 1), "missing q");
  if (kind == "power") return rethrow_invalid(source, 1, [&] { return WeightFun::power(*q); });
  if (!beta) throw ParseError(source, 1, static_cast<int>(base + 1), "missing beta");
  return rethrow_invalid(source, 1, [&] { return WeightFun::power_log(*q, *beta); });
}

std::vector<double> parse_real_list(const std::string& text, const std::string& source, int line, int column) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    double v = 0.0;
    if (!to_real(text.substr(pos, end - pos), v)) {
      throw ParseError(source, line, column + static_cast<int>(pos), "expected a number, got '" + text.substr(pos, end - pos) + "'");
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

TestFunctionSpec parse_function(const std::string& spec) {
  const std::string source = "function spec";
  auto [kind, rest] = split_kind(spec, source);
  const std::size_t base = kind.size() + 1;
  if (kind == "poly") {
    PolynomialSpec p;
    for (double c : parse_real_list(rest, source, 1, static_cast<int>(base + 1))) p.coeffs.emplace_back(c, 0.0);
    return p;
  }
  const auto items = split_items(rest, base, source);
  auto unknown = [&](const Item& it) {
    return ParseError(source, 1, it.column - static_cast<int>(it.key.size()) - 1,
                      "unknown key '" + it.key + "' for " + kind);
  };
  if (kind == "gap") {
    GapSpec g;
    for (const Item& it : items) {
      if (it.key == "beta") g.beta = item_real(it, source);
      else if (it.key == "ratio") g.ratio = item_int(it, source);
      else if (it.key == "kmax") g.k_max = item_int(it, source);
      else throw unknown(it);
    }
    if (g.ratio < 2) throw ParseError(source, 1, static_cast<int>(base + 1), "gap ratio must be >= 2");
    if (g.k_max < 0) throw ParseError(source, 1, static_cast<int>(base + 1), "gap kmax must be >= 0");
    return g;
  }
  if (kind == "powsing") {
    PowerSingularSpec p;
    bool seen = false;
    for (const Item& it : items) {
      if (it.key != "gamma") throw unknown(it);
      p.gamma = item_real(it, source);
      seen = true;
      if (!(p.gamma > 0.0)) throw ParseError(source, 1, it.column, "gamma must be positive");
    }
    if (!seen) throw ParseError(source, 1, static_cast<int>(base + 1), "missing gamma");
    return p;
  }
  if (kind == "mono") {
    MonomialSpec m;
    bool seen = false;
    for (const Item& it : items) {
      if (it.key != "n") throw unknown(it);
      m.n = item_int(it, source);
      seen = true;
      if (m.n < 0) throw ParseError(source, 1, it.column, "n must be >= 0");
    }
    if (!seen) throw ParseError(source, 1, static_cast<int>(base + 1), "missing n");
    return m;
  }
  throw ParseError(source, 1, 1, "unknown function kind '" + kind + "' (gap, powsing, mono, poly)");
}

SpaceParams parse_space(const std::string& spec) {
  const std::string source = "space spec";
  SpaceParams sp;
  std::string head = spec;
  std::size_t kpos = std::string::npos;
  if (spec.rfind("K=", 0) == 0) {
    kpos = 0;
  } else {
    const auto at = spec.find(",K=");
    if (at != std::string::npos) kpos = at + 1;
  }
  if (kpos != std::string::npos) {
    head = kpos == 0 ? std::string{} : spec.substr(0, kpos - 1);
    try {
      sp.W = parse_weight(spec.substr(kpos + 2));
    } catch (const ParseError& e) {
      const int col = e.column() > 0 ? static_cast<int>(kpos + 2) + e.column() : static_cast<int>(kpos + 3);
      throw ParseError(source, 1, col, std::string("in K: ") + e.what());
    }
  }
  if (!head.empty()) {
    for (const Item& it : split_items(head, 0, source)) {
      if (it.key == "p") sp.p = item_real(it, source);
      else if (it.key == "s") sp.s = item_real(it, source);
      else if (it.key == "sigma") sp.sigma = item_real(it, source);
      else throw ParseError(source, 1, it.column - static_cast<int>(it.key.size()) - 1, "unknown key '" + it.key + "'");
    }
  }
  if (!(sp.p >= 1.0)) throw ParseError(source, 1, 1, "p must be >= 1");
  return sp;
}

const KeyValueConfig::Entry* KeyValueConfig::find(const std::string& key) const {
  for (const auto& e : entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  if (const Entry* e = find(key)) return e->value;
  return std::nullopt;
}

double KeyValueConfig::get_real(const std::string& key, double fallback) const {
  const Entry* e = find(key);
  if (!e) return fallback;
  double v = 0.0;
  if (!to_real(e->value, v)) fail(*e, "'" + key + "' expects a number");
  return v;
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
  const Entry* e = find(key);
  if (!e) return fallback;
  int v = 0;
  if (!to_int(e->value, v)) fail(*e, "'" + key + "' expects an integer");
  return v;
}

std::vector<const KeyValueConfig::Entry*> KeyValueConfig::unknown(const std::vector<std::string>& allowed) const {
  std::vector<const Entry*> out;
  for (const auto& e : entries) {
    if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end()) out.push_back(&e);
  }
  return out;
}

void KeyValueConfig::fail(const Entry& e, const std::string& what) const {
  throw ParseError(source, e.line, e.value_column, what);
}

KeyValueConfig parse_config_text(const std::string& text, const std::string& source) {
  KeyValueConfig cfg;
  cfg.source = source;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t lead = 0;
    if (trim(line, &lead).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, lineno, static_cast<int>(lead + 1), "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(source, lineno, static_cast<int>(lead + 1), "empty key");
    if (cfg.find(key)) throw ParseError(source, lineno, static_cast<int>(lead + 1), "duplicate key '" + key + "'");
    std::size_t vlead = 0;
    const std::string value = trim(line.substr(eq + 1), &vlead);
    cfg.entries.push_back({key, value, lineno, static_cast<int>(eq + 2 + vlead)});
  }
  return cfg;
}

KeyValueConfig load_config(const std::string& path) {
  return parse_config_text(read_text_file(path), path);
}

ODESystem parse_system(const KeyValueConfig& cfg, int N) {
  const KeyValueConfig::Entry* ne = cfg.find("n");
  if (!ne) throw ParseError(cfg.source, 1, 1, "missing key 'n'");
  const int n = cfg.get_int("n", 1);
  if (n < 1) cfg.fail(*ne, "n must be >= 1");

  std::vector<std::string> allowed{"n", "rhs", "init"};
  for (int j = 0; j < n; ++j) allowed.push_back("A" + std::to_string(j));
  for (const auto* e : cfg.unknown(allowed)) {
    throw ParseError(cfg.source, e->line, 1, "unknown key '" + e->key + "'");
  }

  auto series = [&](const std::string& key) {
    const KeyValueConfig::Entry* e = cfg.find(key);
    if (!e) return TruncSeries::zero(N);
    try {
      return make_test_function(parse_function(e->value), N).truncated(N);
    } catch (const ParseError& pe) {
      throw ParseError(cfg.source, e->line, e->value_column + std::max(0, pe.column() - 1), e->key + ": " + pe.what());
    } catch (const std::invalid_argument& ie) {
      cfg.fail(*e, ie.what());
    }
  };

  ODESystem sys;
  sys.n = n;
  for (int j = 0; j < n; ++j) sys.A.push_back(series("A" + std::to_string(j)));
  sys.rhs = series("rhs");
  if (const KeyValueConfig::Entry* ie = cfg.find("init")) {
    for (double v : parse_real_list(ie->value, cfg.source, ie->line, ie->value_column)) sys.init.emplace_back(v, 0.0);
    if (static_cast<int>(sys.init.size()) != n) cfg.fail(*ie, "init needs exactly n values");
  } else {
    sys.init.assign(n, cplx{0.0, 0.0});
    sys.init[0] = 1.0;
  }
  return sys;
}

}  // namespace holoform
