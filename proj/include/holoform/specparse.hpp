#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holoform/measures.hpp"
#include "holoform/odesolve.hpp"
#include "holoform/series.hpp"
#include "holoform/weights.hpp"

namespace holoform {

/// Config or spec-string error with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// `power:q=0.3`, `powerlog:q=0.3,beta=1`, `table:<path>` (CSV t,K).
WeightFun parse_weight(const std::string& spec);

/// Knots from CSV text with rows `t,K`; an optional non-numeric header row is skipped.
std::vector<std::pair<double, double>> parse_weight_table(const std::string& text, const std::string& source);

/// `gap:beta=0.5,ratio=2,kmax=8`, `powsing:gamma=0.8`, `mono:n=5`, `poly:1,0,0.5`.
TestFunctionSpec parse_function(const std::string& spec);

/// `p=2,s=0.5,sigma=0.4,K=power:q=0.3`; everything after `K=` is the weight spec.
/// Missing keys keep the SpaceParams defaults.
SpaceParams parse_space(const std::string& spec);

/// Comma separated reals.
std::vector<double> parse_real_list(const std::string& text, const std::string& source = "list", int line = 1,
                                    int column = 1);

/// Flat `key=value` file; `#` starts a comment, blank lines ignored, repeated keys rejected.
struct KeyValueConfig {
  struct Entry {
    std::string key;
    std::string value;
    int line = 0;
    int value_column = 0;
  };
  std::string source;
  std::vector<Entry> entries;

  const Entry* find(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  double get_real(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  /// Keys present in the file but not listed; reported as errors by callers.
  std::vector<const Entry*> unknown(const std::vector<std::string>& allowed) const;
  /// Throws a ParseError located at the entry's value.
  [[noreturn]] void fail(const Entry& e, const std::string& what) const;
};

KeyValueConfig parse_config_text(const std::string& text, const std::string& source);
KeyValueConfig load_config(const std::string& path);

/// System file keys: n, A0 .. A{n-1}, rhs, init. Coefficients use the test
/// function grammar; missing A_j and rhs are zero. All series are cut or padded
/// to degree N.
ODESystem parse_system(const KeyValueConfig& cfg, int N);

std::string read_text_file(const std::string& path);

}  // namespace holoform
