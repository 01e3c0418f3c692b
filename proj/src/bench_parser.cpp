#include "mzsim/bench_parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>

#include "mzsim/io_util.hpp"

namespace mzsim {

namespace {

// Unit scales as long doubles: converting value * scale through extended
// precision keeps "800nm" bit-identical to the 800e-9 literal.
struct UnitScale {
  const char* suffix;
  long double scale;
};
constexpr UnitScale kLengthUnits[] = {
    {"nm", 1e-9L}, {"um", 1e-6L}, {"mm", 1e-3L}, {"cm", 1e-2L}, {"m", 1.0L}};

double apply_unit(double value, long double scale) {
  return static_cast<double>(static_cast<long double>(value) * scale);
}

enum class TokKind { Ident, Number, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  char punct = 0;
  double number = 0.0;
  std::size_t line = 0;
  std::size_t col = 0;
};

// Lexes one line into tokens. Bad characters become diagnostics; the
// caller skips the line.
class LineLexer {
 public:
  LineLexer(const std::string& line, std::size_t line_no) : line_(line), line_no_(line_no) {
    lex();
  }

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::optional<Diagnostic>& error() const { return error_; }

 private:
  void lex() {
    std::size_t i = 0;
    while (i < line_.size()) {
      const char c = line_[i];
      if (c == '#') break;  // comment to end of line
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      const std::size_t col = i + 1;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < line_.size() &&
               (std::isalnum(static_cast<unsigned char>(line_[j])) || line_[j] == '_')) {
          ++j;
        }
        tokens_.push_back({TokKind::Ident, line_.substr(i, j - i), 0, 0.0, line_no_, col});
        i = j;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && i + 1 < line_.size() &&
           std::isdigit(static_cast<unsigned char>(line_[i + 1])))) {
        std::size_t j = i;
        while (j < line_.size() && (std::isdigit(static_cast<unsigned char>(line_[j])) ||
                                    line_[j] == '.')) {
          ++j;
        }
        if (j < line_.size() && (line_[j] == 'e' || line_[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < line_.size() && (line_[k] == '+' || line_[k] == '-')) ++k;
          if (k < line_.size() && std::isdigit(static_cast<unsigned char>(line_[k]))) {
            ++k;
            while (k < line_.size() && std::isdigit(static_cast<unsigned char>(line_[k]))) ++k;
            j = k;
          }
        }
        const std::string text = line_.substr(i, j - i);
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (end == nullptr || *end != '\0' || !std::isfinite(value)) {
          error_ = Diagnostic{line_no_, col, "malformed number '" + text + "'"};
          return;
        }
        tokens_.push_back({TokKind::Number, text, 0, value, line_no_, col});
        i = j;
        continue;
      }
      if (c == '=' || c == '(' || c == ')' || c == '[' || c == ']' || c == ',' ||
          c == ':' || c == '-' || c == '/') {
        tokens_.push_back({TokKind::Punct, std::string(1, c), c, 0.0, line_no_, col});
        ++i;
        continue;
      }
      error_ = Diagnostic{line_no_, col, std::string("unexpected character '") +
                                             (std::isprint(static_cast<unsigned char>(c))
                                                  ? std::string(1, c)
                                                  : "\\x" + std::to_string(static_cast<unsigned char>(c))) +
                                             "'"};
      return;
    }
    tokens_.push_back({TokKind::End, "", 0, 0.0, line_no_, line_.size() + 1});
  }

  const std::string& line_;
  std::size_t line_no_;
  std::vector<Token> tokens_;
  std::optional<Diagnostic> error_;
};

// Cursor over one line's tokens.
class Cursor {
 public:
  explicit Cursor(const std::vector<Token>& tokens) : tokens_(tokens) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return peek().kind == TokKind::End; }

  bool accept_punct(char c) {
    if (peek().kind == TokKind::Punct && peek().punct == c) {
      next();
      return true;
    }
    return false;
  }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

// Parsed argument values.
struct Value {
  enum class Kind { Length, Angle, Number, Interval, Call };

  explicit Value(Kind k) : kind(k) {}

  Kind kind;
  double scalar = 0.0;
  double lo = 0.0, hi = 0.0;  // interval bounds
  std::string call_name;
  std::map<std::string, Value> call_args;
};

constexpr std::size_t kMaxDiagnostics = 200;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ParseResult run() {
    parse_lines();
    finalize();
    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    if (result.diagnostics.empty()) {
      result.document = std::move(doc_);
    }
    return result;
  }

 private:
  struct SurfaceElement {
    std::string name;
    std::map<std::string, Value> args;
    std::size_t line = 0;
    std::size_t col = 0;
  };
  struct Arm {
    std::string name;
    std::vector<SurfaceElement> elements;
    std::size_t line = 0;
    std::size_t col = 0;
  };

  void error(std::size_t line, std::size_t col, const std::string& message) {
    if (diagnostics_.size() < kMaxDiagnostics) {
      diagnostics_.push_back({line, col, message});
    } else if (diagnostics_.size() == kMaxDiagnostics) {
      diagnostics_.push_back({line, col, "too many errors, giving up"});
    }
  }

  void parse_lines() {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string::npos) end = text_.size();
      const std::string line = text_.substr(start, end - start);
      ++line_no;
      parse_line(line, line_no);
      if (end == text_.size()) break;
      start = end + 1;
    }
  }

  void parse_line(const std::string& line, std::size_t line_no) {
    LineLexer lexer(line, line_no);
    if (lexer.error()) {
      error(lexer.error()->line, lexer.error()->col, lexer.error()->message);
      return;
    }
    Cursor cur(lexer.tokens());
    if (cur.at_end()) return;  // blank or comment-only

    const Token& first = cur.peek();
    if (first.kind != TokKind::Ident) {
      error(first.line, first.col, "expected a key, 'arm', or an element call");
      return;
    }

    if (first.text == "arm") {
      cur.next();
      parse_arm_header(cur);
      return;
    }

    // Lookahead distinguishes `key = value` from `element(args)`.
    Token name = cur.next();
    if (cur.peek().kind == TokKind::Punct && cur.peek().punct == '(') {
      if (current_arm_ == nullptr) {
        error(name.line, name.col,
              "element call '" + name.text + "' outside an arm block");
        return;
      }
      auto call = parse_call(cur, name);
      if (!call) return;
      if (!expect_line_end(cur)) return;
      current_arm_->elements.push_back(
          SurfaceElement{call->call_name, std::move(call->call_args), name.line, name.col});
      return;
    }

    if (!cur.accept_punct('=')) {
      error(cur.peek().line, cur.peek().col, "expected '=' after key '" + name.text + "'");
      return;
    }
    current_arm_ = nullptr;  // a top-level key ends any open arm block
    parse_key_value(name, cur);
  }

  void parse_arm_header(Cursor& cur) {
    if (cur.peek().kind != TokKind::Ident) {
      error(cur.peek().line, cur.peek().col, "expected arm name after 'arm'");
      return;
    }
    Token name = cur.next();
    if (!cur.accept_punct(':')) {
      error(cur.peek().line, cur.peek().col, "expected ':' after arm name");
      return;
    }
    if (!expect_line_end(cur)) return;
    for (const Arm& arm : arms_) {
      if (arm.name == name.text) {
        error(name.line, name.col, "duplicate arm '" + name.text + "'");
        return;
      }
    }
    arms_.push_back(Arm{name.text, {}, name.line, name.col});
    current_arm_ = &arms_.back();
  }

  bool expect_line_end(Cursor& cur) {
    if (!cur.at_end()) {
      error(cur.peek().line, cur.peek().col,
            "unexpected trailing input '" + cur.peek().text + "'");
      return false;
    }
    return true;
  }

  // number with mandatory unit suffix
  std::optional<double> parse_length(Cursor& cur, bool allow_negative) {
    bool negative = false;
    if (cur.peek().kind == TokKind::Punct && cur.peek().punct == '-') {
      if (!allow_negative) {
        error(cur.peek().line, cur.peek().col, "length must be non-negative here");
        return std::nullopt;
      }
      cur.next();
      negative = true;
    }
    if (cur.peek().kind != TokKind::Number) {
      error(cur.peek().line, cur.peek().col, "expected a length value");
      return std::nullopt;
    }
    Token num = cur.next();
    if (cur.peek().kind != TokKind::Ident) {
      error(num.line, num.col,
            "length '" + num.text + "' is missing a unit suffix (nm|um|mm|cm|m)");
      return std::nullopt;
    }
    Token unit = cur.next();
    for (const UnitScale& u : kLengthUnits) {
      if (unit.text == u.suffix) {
        const double v = apply_unit(num.number, u.scale);
        return negative ? -v : v;
      }
    }
    error(unit.line, unit.col, "unknown length unit '" + unit.text + "'");
    return std::nullopt;
  }

  // [-] (pi [/ number] | number)
  std::optional<double> parse_angle(Cursor& cur) {
    bool negative = false;
    if (cur.peek().kind == TokKind::Punct && cur.peek().punct == '-') {
      cur.next();
      negative = true;
    }
    double value = 0.0;
    if (cur.peek().kind == TokKind::Ident && cur.peek().text == "pi") {
      cur.next();
      value = std::numbers::pi;
      if (cur.peek().kind == TokKind::Punct && cur.peek().punct == '/') {
        cur.next();
        if (cur.peek().kind != TokKind::Number) {
          error(cur.peek().line, cur.peek().col, "expected a divisor after 'pi/'");
          return std::nullopt;
        }
        Token div = cur.next();
        if (div.number == 0.0) {
          error(div.line, div.col, "division of pi by zero");
          return std::nullopt;
        }
        value /= div.number;
      }
    } else if (cur.peek().kind == TokKind::Number) {
      value = cur.next().number;
    } else {
      error(cur.peek().line, cur.peek().col, "expected an angle (radians or pi literal)");
      return std::nullopt;
    }
    return negative ? -value : value;
  }

  std::optional<Value> parse_interval(Cursor& cur) {
    if (!cur.accept_punct('[')) {
      error(cur.peek().line, cur.peek().col, "expected '[' to open an interval");
      return std::nullopt;
    }
    auto lo = parse_length(cur, true);
    if (!lo) return std::nullopt;
    if (!cur.accept_punct(',')) {
      error(cur.peek().line, cur.peek().col, "expected ',' between interval bounds");
      return std::nullopt;
    }
    auto hi = parse_length(cur, true);
    if (!hi) return std::nullopt;
    if (!cur.accept_punct(']')) {
      error(cur.peek().line, cur.peek().col, "expected ']' to close the interval");
      return std::nullopt;
    }
    Value v{Value::Kind::Interval};
    v.lo = *lo;
    v.hi = *hi;
    return v;
  }

  // name(arg = value, ...) with the '(' still pending in the cursor.
  std::optional<Value> parse_call(Cursor& cur, const Token& name) {
    cur.accept_punct('(');
    Value call{Value::Kind::Call};
    call.call_name = name.text;
    if (cur.accept_punct(')')) return call;
    while (true) {
      if (cur.peek().kind != TokKind::Ident) {
        error(cur.peek().line, cur.peek().col, "expected an argument name");
        return std::nullopt;
      }
      Token arg = cur.next();
      if (!cur.accept_punct('=')) {
        error(cur.peek().line, cur.peek().col,
              "expected '=' after argument '" + arg.text + "'");
        return std::nullopt;
      }
      std::optional<Value> value;
      if (arg.text == "region") {
        value = parse_interval(cur);
      } else if (arg.text == "shift") {
        auto angle = parse_angle(cur);
        if (angle) {
          value = Value{Value::Kind::Angle};
          value->scalar = *angle;
        }
      } else {
        auto length = parse_length(cur, false);
        if (length) {
          value = Value{Value::Kind::Length};
          value->scalar = *length;
        }
      }
      if (!value) return std::nullopt;
      if (!call.call_args.emplace(arg.text, *value).second) {
        error(arg.line, arg.col, "duplicate argument '" + arg.text + "'");
        return std::nullopt;
      }
      if (cur.accept_punct(',')) continue;
      if (cur.accept_punct(')')) break;
      error(cur.peek().line, cur.peek().col, "expected ',' or ')' in argument list");
      return std::nullopt;
    }
    return call;
  }

  void set_once(const Token& key, bool& seen) {
    if (seen) error(key.line, key.col, "duplicate key '" + key.text + "'");
    seen = true;
  }

  void parse_key_value(const Token& key, Cursor& cur) {
    if (key.text == "lambda" || key.text == "f" || key.text == "l" || key.text == "w" ||
        key.text == "grid_half_extent") {
      auto v = parse_length(cur, false);
      if (!v || !expect_line_end(cur)) return;
      if (key.text == "lambda") {
        set_once(key, seen_lambda_);
        doc_.params.lambda = *v;
      } else if (key.text == "f") {
        set_once(key, seen_f_);
        doc_.params.f = *v;
      } else if (key.text == "l") {
        set_once(key, seen_l_);
        doc_.params.l = *v;
      } else if (key.text == "w") {
        set_once(key, seen_w_);
        doc_.params.w = *v;
      } else {
        set_once(key, seen_extent_);
        doc_.grid.half_extent = *v;
      }
      return;
    }
    if (key.text == "phi") {
      auto v = parse_angle(cur);
      if (!v || !expect_line_end(cur)) return;
      set_once(key, seen_phi_);
      doc_.phase = *v;
      return;
    }
    if (key.text == "hbar") {
      if (cur.peek().kind != TokKind::Number) {
        error(cur.peek().line, cur.peek().col, "expected a number for hbar [J s]");
        return;
      }
      const Token num = cur.next();
      if (!expect_line_end(cur)) return;
      set_once(key, seen_hbar_);
      doc_.params.hbar = num.number;
      return;
    }
    if (key.text == "grid_n") {
      if (cur.peek().kind != TokKind::Number) {
        error(cur.peek().line, cur.peek().col, "expected an integer for grid_n");
        return;
      }
      const Token num = cur.next();
      if (!expect_line_end(cur)) return;
      if (num.number != std::floor(num.number) || num.number <= 0.0 ||
          num.number > 1e9) {
        error(num.line, num.col, "grid_n must be a positive integer");
        return;
      }
      set_once(key, seen_grid_n_);
      doc_.grid.n_points = static_cast<std::size_t>(num.number);
      grid_n_pos_ = {num.line, num.col};
      return;
    }
    if (key.text == "input") {
      if (cur.peek().kind != TokKind::Ident) {
        error(cur.peek().line, cur.peek().col, "expected an input kind, e.g. gaussian(w = 0.5mm)");
        return;
      }
      Token kind = cur.next();
      if (kind.text != "gaussian") {
        error(kind.line, kind.col, "unknown input kind '" + kind.text + "' (expected gaussian)");
        return;
      }
      if (!(cur.peek().kind == TokKind::Punct && cur.peek().punct == '(')) {
        error(cur.peek().line, cur.peek().col, "expected '(' after 'gaussian'");
        return;
      }
      auto call = parse_call(cur, kind);
      if (!call || !expect_line_end(cur)) return;
      set_once(key, seen_input_);
      auto it = call->call_args.find("w");
      if (it == call->call_args.end() || call->call_args.size() != 1) {
        error(kind.line, kind.col, "gaussian input takes exactly the argument w");
        return;
      }
      input_w_ = it->second.scalar;
      input_pos_ = {kind.line, kind.col};
      return;
    }
    error(key.line, key.col, "unknown key '" + key.text + "'");
  }

  std::optional<OpticalElement> lower_element(const SurfaceElement& e) {
    auto need = [&](std::initializer_list<const char*> names) -> bool {
      for (const char* n : names) {
        if (e.args.find(n) == e.args.end()) {
          error(e.line, e.col,
                "element '" + e.name + "' is missing argument '" + std::string(n) + "'");
          return false;
        }
      }
      if (e.args.size() != names.size()) {
        for (const auto& [k, v] : e.args) {
          bool known = false;
          for (const char* n : names) {
            if (k == n) known = true;
          }
          if (!known) {
            error(e.line, e.col, "element '" + e.name + "' got unknown argument '" + k + "'");
          }
        }
        return false;
      }
      return true;
    };

    if (e.name == "xbench") {
      if (!need({"l"})) return std::nullopt;
      return PositionBench{e.args.at("l").scalar};
    }
    if (e.name == "pbench") {
      if (!need({"f", "l"})) return std::nullopt;
      return MomentumBench{doc_.params.lambda, e.args.at("f").scalar, e.args.at("l").scalar};
    }
    if (e.name == "phase") {
      if (!need({"region", "shift"})) return std::nullopt;
      const Value& region = e.args.at("region");
      return PhaseShifter{region.lo, region.hi, e.args.at("shift").scalar};
    }
    if (e.name == "atten") {
      if (!need({"l"})) return std::nullopt;
      return LinearAttenuator{e.args.at("l").scalar};
    }
    if (e.name == "flip") {
      if (!need({})) return std::nullopt;
      return AxisFlip{};
    }
    error(e.line, e.col, "unknown element '" + e.name + "'");
    return std::nullopt;
  }

  void finalize() {
    // Effective waist: top-level w and the gaussian input argument must
    // agree when both are present.
    if (input_w_) {
      if (seen_w_ && *input_w_ != doc_.params.w) {
        error(input_pos_.first, input_pos_.second,
              "input gaussian waist conflicts with the top-level w key");
      }
      doc_.params.w = *input_w_;
    }

    if (!(doc_.params.lambda > 0.0) || !(doc_.params.f > 0.0) || !(doc_.params.l > 0.0) ||
        !(doc_.params.w > 0.0) || !(doc_.params.hbar > 0.0)) {
      error(1, 1, "physical constants must be strictly positive");
    }
    if (doc_.grid.n_points < 16 || !is_power_of_two(doc_.grid.n_points)) {
      error(grid_n_pos_.first, grid_n_pos_.second,
            "grid_n must be a power of two >= 16");
    }
    if (!(doc_.grid.half_extent > 0.0)) {
      error(1, 1, "grid_half_extent must be positive");
    } else if (doc_.params.l > doc_.grid.half_extent) {
      error(1, 1, "operator half-width l exceeds the grid half-extent");
    }

    // Lower every declared arm first so element-level diagnostics are
    // reported even when the arm set itself is wrong.
    const Arm* upper = nullptr;
    const Arm* lower = nullptr;
    for (const Arm& arm : arms_) {
      ElementPipeline pipeline;
      std::size_t momentum_benches = 0;
      for (const SurfaceElement& e : arm.elements) {
        auto lowered = lower_element(e);
        if (!lowered) continue;
        if (std::holds_alternative<MomentumBench>(*lowered)) ++momentum_benches;
        if (std::holds_alternative<PhaseShifter>(*lowered)) {
          const auto& ps = std::get<PhaseShifter>(*lowered);
          if (ps.lo > ps.hi || ps.lo < -doc_.grid.half_extent ||
              ps.hi > doc_.grid.half_extent) {
            error(e.line, e.col, "phase region not contained in the grid extent");
          }
        }
        pipeline.elements.push_back(std::move(*lowered));
      }
      if (momentum_benches != 1) {
        error(arm.line, arm.col,
              "arm '" + arm.name + "' must contain exactly one momentum bench (pbench), got " +
                  std::to_string(momentum_benches));
      }
      if (arm.name == "upper" && upper == nullptr) {
        upper = &arm;
        doc_.upper_arm = std::move(pipeline);
      } else if (arm.name == "lower" && lower == nullptr) {
        lower = &arm;
        doc_.lower_arm = std::move(pipeline);
      } else {
        error(arm.line, arm.col, "unexpected arm '" + arm.name + "' (want upper and lower)");
      }
    }
    if (upper == nullptr || lower == nullptr) {
      error(1, 1, "interferometer requires two arms ('upper' and 'lower')");
    }
  }

  const std::string& text_;
  BenchDocument doc_ = default_skeleton();
  std::vector<Diagnostic> diagnostics_;
  std::vector<Arm> arms_;
  Arm* current_arm_ = nullptr;

  std::optional<double> input_w_;
  std::pair<std::size_t, std::size_t> input_pos_{1, 1};
  std::pair<std::size_t, std::size_t> grid_n_pos_{1, 1};
  bool seen_lambda_ = false, seen_f_ = false, seen_l_ = false, seen_w_ = false;
  bool seen_phi_ = false, seen_hbar_ = false, seen_grid_n_ = false, seen_extent_ = false;
  bool seen_input_ = false;

  static BenchDocument default_skeleton() {
    BenchDocument doc;
    doc.phase = std::numbers::pi;
    doc.grid = GridSpec{4096, 6e-3};
    return doc;  // arms filled from the file; params default to BenchParams{}
  }
};

void render_element(std::ostringstream& os, const OpticalElement& element) {
  struct Visitor {
    std::ostringstream& os;
    void operator()(const PositionBench& e) const {
      os << "    xbench(l = " << format_g17(e.l) << "m)\n";
    }
    void operator()(const MomentumBench& e) const {
      os << "    pbench(f = " << format_g17(e.f) << "m, l = " << format_g17(e.l) << "m)\n";
    }
    void operator()(const PhaseShifter& e) const {
      os << "    phase(region = [" << format_g17(e.lo) << "m, " << format_g17(e.hi)
         << "m], shift = " << format_g17(e.shift) << ")\n";
    }
    void operator()(const LinearAttenuator& e) const {
      os << "    atten(l = " << format_g17(e.l) << "m)\n";
    }
    void operator()(const AxisFlip&) const { os << "    flip()\n"; }
    void operator()(const HardAperture&) const {
      throw InvalidArgumentError("render_bench: hard apertures have no surface syntax");
    }
    void operator()(const LensFT&) const {
      throw InvalidArgumentError("render_bench: raw lens transforms have no surface syntax");
    }
  };
  std::visit(Visitor{os}, element);
}

}  // namespace

ParseResult parse_bench(const std::string& text) { return Parser(text).run(); }

std::string render_bench(const BenchDocument& doc) {
  std::ostringstream os;
  os << "lambda = " << format_g17(doc.params.lambda) << "m\n";
  os << "f = " << format_g17(doc.params.f) << "m\n";
  os << "l = " << format_g17(doc.params.l) << "m\n";
  os << "w = " << format_g17(doc.params.w) << "m\n";
  os << "hbar = " << format_g17(doc.params.hbar) << "\n";
  os << "phi = " << format_g17(doc.phase) << "\n";
  os << "grid_n = " << doc.grid.n_points << "\n";
  os << "grid_half_extent = " << format_g17(doc.grid.half_extent) << "m\n";
  os << "input = gaussian(w = " << format_g17(doc.params.w) << "m)\n";
  os << "\narm upper:\n";
  for (const OpticalElement& e : doc.upper_arm.elements) render_element(os, e);
  os << "\narm lower:\n";
  for (const OpticalElement& e : doc.lower_arm.elements) render_element(os, e);
  return os.str();
}

BenchDocument default_bench_document() {
  BenchDocument doc;
  doc.phase = std::numbers::pi;
  doc.grid = GridSpec{4096, 6e-3};
  const BenchParams& p = doc.params;
  doc.upper_arm.elements = {PositionBench{p.l}, MomentumBench{p.lambda, p.f, p.l}};
  doc.lower_arm.elements = {MomentumBench{p.lambda, p.f, p.l}, PositionBench{p.l}};
  return doc;
}

double parse_length_literal(const std::string& text) {
  LineLexer lexer(text, 1);
  if (lexer.error()) {
    throw InvalidArgumentError("bad length '" + text + "': " + lexer.error()->message);
  }
  Cursor cur(lexer.tokens());
  if (cur.peek().kind != TokKind::Number) {
    throw InvalidArgumentError("bad length '" + text + "': expected a number");
  }
  const Token num = cur.next();
  if (cur.peek().kind != TokKind::Ident) {
    throw InvalidArgumentError("length '" + text + "' is missing a unit suffix (nm|um|mm|cm|m)");
  }
  const Token unit = cur.next();
  if (!cur.at_end()) {
    throw InvalidArgumentError("trailing input in length '" + text + "'");
  }
  for (const UnitScale& u : kLengthUnits) {
    if (unit.text == u.suffix) return apply_unit(num.number, u.scale);
  }
  throw InvalidArgumentError("unknown length unit '" + unit.text + "'");
}

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream os;
  for (const Diagnostic& d : diagnostics) {
    os << "error: line " << d.line << ", col " << d.col << ": " << d.message << "\n";
  }
  return os.str();
}

}  // namespace mzsim
