// sqfree — construct, verify, encode and enumerate square-free circular
// ternary words, and explore the closed walks of the weighted K3,3 jump
// graph that spell their codewords.
//
// Exit codes: 0 affirmative/success, 1 negative/domain failure, 2 usage or
// parse error.

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqf/construct.hpp"
#include "sqf/enumerate.hpp"
#include "sqf/k33.hpp"
#include "sqf/pansiot.hpp"
#include "sqf/words.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Output {
  std::string command;
  std::string status = "ok";  // ok | not-representable | error
  json payload = json::object();
  int exit_code = 0;
};

struct Options {
  bool json_format = false;
  std::string out_path;
};

std::string render_text(const Output& out) {
  std::ostringstream os;
  if (out.status != "ok") os << "status: " << out.status << "\n";
  for (const auto& [key, value] : out.payload.items()) {
    os << key << ": ";
    if (value.is_string()) {
      os << value.get<std::string>();
    } else {
      os << value.dump();
    }
    os << "\n";
  }
  return os.str();
}

int emit(const Output& out, const Options& opts) {
  json doc;
  doc["command"] = out.command;
  doc["status"] = out.status;
  for (const auto& [key, value] : out.payload.items()) doc[key] = value;
  const std::string text = opts.json_format ? doc.dump(2) + "\n" : render_text(out);
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    if (!file) {
      std::cerr << "error: cannot write " << opts.out_path << "\n";
      return 2;
    }
    file << text;
    std::cerr << "output written to " << opts.out_path << "\n";
  } else {
    std::cout << text;
  }
  return out.exit_code;
}

enum class InputKind { TernaryLinear, TernaryCircular, BinaryLinear, BinaryCircular };

struct ParsedInput {
  InputKind kind;
  std::string body;  // without parentheses
};

std::optional<ParsedInput> parse_input(std::string_view s) {
  bool circular = false;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    circular = true;
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty()) return std::nullopt;
  bool ternary = true;
  bool binary = true;
  for (char c : s) {
    ternary = ternary && sqf::is_ternary_letter(c);
    binary = binary && (c == '0' || c == '1');
  }
  if (ternary) {
    return ParsedInput{circular ? InputKind::TernaryCircular : InputKind::TernaryLinear,
                       std::string(s)};
  }
  if (binary) {
    return ParsedInput{circular ? InputKind::BinaryCircular : InputKind::BinaryLinear,
                       std::string(s)};
  }
  return std::nullopt;
}

std::string strip_parens(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    return std::string(s.substr(1, s.size() - 2));
  }
  return std::string(s);
}

// ---------------------------------------------------------------------------

int run_construct(std::size_t length, bool with_codeword, const Options& opts) {
  Output out{"construct"};
  out.payload["length"] = length;
  if (length == 0) {
    out.status = "error";
    out.payload["message"] = "length must be positive";
    out.exit_code = 2;
    return emit(out, opts);
  }
  const std::optional<sqf::CircularWord> word = sqf::construct_word(length);
  if (!word) {
    out.status = "not-representable";
    out.payload["message"] =
        "no square-free circular ternary word of length " + std::to_string(length) + " exists";
    out.exit_code = 1;
    return emit(out, opts);
  }
  out.payload["word"] = word->str();
  if (with_codeword) {
    if (length >= 3) {
      out.payload["codeword"] = sqf::construct_codeword(length)->str();
    } else {
      out.payload["codeword"] = nullptr;  // codewords exist only for length >= 3
    }
  }
  return emit(out, opts);
}

int run_verify(const std::string& input, const Options& opts) {
  Output out{"verify"};
  out.payload["input"] = input;
  const std::optional<ParsedInput> parsed = parse_input(input);
  if (!parsed) {
    out.status = "error";
    out.payload["message"] = "input is neither a ternary word nor a binary codeword";
    out.exit_code = 2;
    return emit(out, opts);
  }
  switch (parsed->kind) {
    case InputKind::TernaryLinear: {
      out.payload["kind"] = "linear word";
      const auto square = sqf::find_square(parsed->body);
      out.payload["square_free"] = !square.has_value();
      if (square) {
        out.payload["witness_start"] = square->start;
        out.payload["witness_period"] = square->period;
        out.exit_code = 1;
      }
      break;
    }
    case InputKind::TernaryCircular: {
      out.payload["kind"] = "circular word";
      const sqf::CircularWord cw(parsed->body);
      out.payload["word"] = cw.str();
      const auto square = sqf::find_circular_square(cw);
      out.payload["square_free"] = !square.has_value();
      if (square) {
        out.payload["witness_start"] = square->start;  // position in the canonical rotation
        out.payload["witness_period"] = square->period;
        out.exit_code = 1;
      }
      break;
    }
    case InputKind::BinaryLinear: {
      out.payload["kind"] = "linear codeword";
      const std::string word =
          sqf::decode_linear(sqf::BinaryCodeword::linear(parsed->body), 'a', 'b');
      out.payload["decoded"] = word;
      const auto square = sqf::find_square(word);
      out.payload["square_free"] = !square.has_value();
      if (square) {
        out.payload["witness_start"] = square->start;
        out.payload["witness_period"] = square->period;
        out.exit_code = 1;
      }
      break;
    }
    case InputKind::BinaryCircular: {
      out.payload["kind"] = "circular codeword";
      const auto codeword = sqf::BinaryCodeword::circular(parsed->body);
      const auto word = sqf::decode_circular(codeword);
      if (!word) {
        out.payload["square_free"] = false;
        out.payload["message"] = "not a valid circular codeword";
        out.exit_code = 1;
        break;
      }
      out.payload["decoded"] = word->str();
      const auto square = sqf::find_circular_square(*word);
      out.payload["square_free"] = !square.has_value();
      if (square) {
        out.payload["witness_start"] = square->start;
        out.payload["witness_period"] = square->period;
        out.exit_code = 1;
      }
      break;
    }
  }
  return emit(out, opts);
}

int run_encode(const std::string& input, const Options& opts) {
  Output out{"encode"};
  out.payload["input"] = input;
  const std::optional<ParsedInput> parsed = parse_input(input);
  if (!parsed || (parsed->kind != InputKind::TernaryLinear &&
                  parsed->kind != InputKind::TernaryCircular)) {
    out.status = "error";
    out.payload["message"] = "encode expects a ternary word";
    out.exit_code = 2;
    return emit(out, opts);
  }
  if (parsed->kind == InputKind::TernaryLinear) {
    out.payload["codeword"] = sqf::encode_linear(parsed->body).str();
  } else {
    out.payload["codeword"] = sqf::encode_circular(sqf::CircularWord(parsed->body)).str();
  }
  return emit(out, opts);
}

int run_decode(const std::string& input, const std::string& seed, const Options& opts) {
  Output out{"decode"};
  out.payload["input"] = input;
  const std::optional<ParsedInput> parsed = parse_input(input);
  if (!parsed || (parsed->kind != InputKind::BinaryLinear &&
                  parsed->kind != InputKind::BinaryCircular)) {
    out.status = "error";
    out.payload["message"] = "decode expects a binary codeword";
    out.exit_code = 2;
    return emit(out, opts);
  }
  if (parsed->kind == InputKind::BinaryCircular) {
    const auto word = sqf::decode_circular(sqf::BinaryCodeword::circular(parsed->body));
    if (!word) {
      out.status = "error";
      out.payload["message"] = "not a valid circular codeword";
      out.exit_code = 1;
      return emit(out, opts);
    }
    out.payload["word"] = word->str();
  } else {
    if (seed.size() != 2) {
      out.status = "error";
      out.payload["message"] = "seed must be two distinct letters";
      out.exit_code = 2;
      return emit(out, opts);
    }
    out.payload["seed"] = seed;
    out.payload["word"] =
        sqf::decode_linear(sqf::BinaryCodeword::linear(parsed->body), seed[0], seed[1]);
  }
  return emit(out, opts);
}

int run_enumerate(std::size_t length, bool iso, bool count_only, std::size_t max_list,
                  const Options& opts) {
  Output out{"enumerate"};
  out.payload["length"] = length;
  out.payload["dedup"] = iso ? "isomorphism" : "rotation";
  const sqf::EnumerationReport report = sqf::count_circular(length);
  out.payload["count"] = iso ? report.iso_count : report.raw_count;
  out.payload["raw_count"] = report.raw_count;
  out.payload["iso_count"] = report.iso_count;
  if (!count_only) {
    const auto words = sqf::enumerate_circular(
        length, iso ? sqf::Dedup::Isomorphism : sqf::Dedup::Rotation);
    json list = json::array();
    std::size_t shown = 0;
    for (const sqf::CircularWord& w : words) {
      if (max_list != 0 && shown >= max_list) break;
      list.push_back(w.str());
      ++shown;
    }
    out.payload["words"] = list;
    if (max_list != 0 && words.size() > max_list) {
      out.payload["truncated"] = true;
    }
  }
  return emit(out, opts);
}

int run_walks_check(const std::string& label, const Options& opts) {
  Output out{"walks check"};
  const std::string bare = strip_parens(label);
  out.payload["label"] = bare;
  const bool closed = sqf::is_closed(bare);
  out.payload["closed"] = closed;
  if (closed) {
    out.payload["weight"] = sqf::total_weight(bare);
  } else {
    out.exit_code = 1;
  }
  return emit(out, opts);
}

int run_walks_to_codeword(const std::string& label, const Options& opts) {
  Output out{"walks to-codeword"};
  const std::string bare = strip_parens(label);
  out.payload["label"] = bare;
  if (!sqf::is_closed(bare)) {
    out.status = "error";
    out.payload["message"] = "label is not a closed walk";
    out.exit_code = 1;
    return emit(out, opts);
  }
  const sqf::ClosedWalk walk(bare);
  out.payload["weight"] = walk.weight();
  out.payload["codeword"] = sqf::walk_to_codeword(walk).str();
  return emit(out, opts);
}

int run_walks_from_codeword(const std::string& input, const Options& opts) {
  Output out{"walks from-codeword"};
  const std::string bare = strip_parens(input);
  out.payload["codeword"] = "(" + bare + ")";
  const auto label = sqf::codeword_to_walk(sqf::BinaryCodeword::circular(bare));
  if (!label) {
    out.status = "error";
    out.payload["message"] = "codeword is not spelled by a walk";
    out.exit_code = 1;
    return emit(out, opts);
  }
  out.payload["label"] = *label;
  if (sqf::is_closed(*label)) out.payload["weight"] = sqf::total_weight(*label);
  out.payload["closed"] = sqf::is_closed(*label);
  return emit(out, opts);
}

// --------------------------------------------------------------------------
// selftest: re-derives the headline facts from scratch and cross-checks the
// construction against the brute-force enumeration oracle.

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

Check check_exception_set(std::size_t max_construct) {
  for (std::size_t l = 1; l <= max_construct; ++l) {
    const auto word = sqf::construct_word(l);
    const bool expected = !sqf::is_exceptional_length(l);
    if (word.has_value() != expected) {
      return {"construction-exception-set", false, "mismatch at length " + std::to_string(l)};
    }
    if (word && (word->size() != l || !sqf::is_circular_square_free(*word))) {
      return {"construction-exception-set", false, "bad word at length " + std::to_string(l)};
    }
  }
  return {"construction-exception-set", true,
          "lengths 1.." + std::to_string(max_construct) + ", exceptions exactly {5,7,9,10,14,17}"};
}

Check check_oracle_agreement(std::size_t max_len) {
  const auto reports = sqf::count_circular_range(1, max_len);
  for (const auto& r : reports) {
    const bool constructed = sqf::construct_word(r.length).has_value();
    if ((r.raw_count > 0) != constructed) {
      return {"construction-vs-enumeration", false,
              "disagreement at length " + std::to_string(r.length)};
    }
  }
  return {"construction-vs-enumeration", true,
          "brute force agrees on lengths 1.." + std::to_string(max_len)};
}

Check check_codeword_sets() {
  const std::vector<std::vector<std::string>> expected{
      {"0101"}, {}, {"011011"}, {}, {"01110111"}};
  for (std::size_t l = 4; l <= 8; ++l) {
    std::set<std::string> got;
    for (const auto& cw : sqf::enumerate_circular(l, sqf::Dedup::Rotation)) {
      got.insert(sqf::encode_circular(cw).bits());
    }
    const auto& want = expected[l - 4];
    if (got != std::set<std::string>(want.begin(), want.end())) {
      return {"codeword-sets-4-to-8", false, "wrong set at length " + std::to_string(l)};
    }
  }
  return {"codeword-sets-4-to-8", true, "{0101}, {}, {011011}, {}, {01110111}"};
}

Check check_simple_cycles() {
  for (const sqf::SimpleCycle& row : sqf::simple_cycles()) {
    if (!sqf::is_closed(row.label)) {
      return {"simple-cycle-table", false, std::string("not closed: ") + std::string(row.label)};
    }
    const sqf::ClosedWalk walk{std::string(row.label)};
    const auto codeword = sqf::walk_to_codeword(walk);
    if (codeword.bits() != row.codeword || walk.weight() != row.length ||
        codeword.size() != static_cast<std::size_t>(row.length) ||
        !sqf::is_square_free_codeword(codeword)) {
      return {"simple-cycle-table", false, std::string("row failed: ") + std::string(row.label)};
    }
  }
  return {"simple-cycle-table", true, "all 11 rows closed, spelled and square-free"};
}

Check check_short_witnesses() {
  for (const char* label : {"122122", "123313", "133133"}) {
    if (!sqf::is_square_free_codeword(sqf::walk_to_codeword(sqf::ClosedWalk(label)))) {
      return {"short-length-witnesses", false, std::string("witness failed: ") + label};
    }
  }
  for (std::size_t l : {std::size_t{14}, std::size_t{17}}) {
    if (sqf::count_circular(l).raw_count != 0) {
      return {"short-length-witnesses", false, "unexpected word at length " + std::to_string(l)};
    }
  }
  return {"short-length-witnesses", true,
          "witnesses verify at 16, 19, 20; brute force empty at 14, 17"};
}

Check check_minimal_square_equivalence(std::size_t max_len) {
  std::string u;
  bool ok = true;
  std::string detail;
  auto rec = [&](auto&& self) -> void {
    if (!ok) return;
    if (!u.empty()) {
      const bool minimal = sqf::is_minimal_square(u + u);
      const bool circular = sqf::is_circular_square_free(sqf::CircularWord(u));
      if (minimal != circular) {
        ok = false;
        detail = "mismatch at root " + u;
        return;
      }
    }
    if (u.size() == max_len) return;
    for (char c : sqf::kAlphabet) {
      u.push_back(c);
      self(self);
      u.pop_back();
    }
  };
  rec(rec);
  return {"minimal-squares-vs-circular", ok,
          ok ? "uu minimal iff (u) square-free, all roots to length " + std::to_string(max_len)
             : detail};
}

Check check_minimal_square_codewords() {
  const bool ok = sqf::minimal_square_codewords(2) == std::set<std::string>{"00"} &&
                  sqf::minimal_square_codewords(3) == std::set<std::string>{"1111"} &&
                  sqf::minimal_square_codewords(4) ==
                      std::set<std::string>{"010101", "101010"} &&
                  sqf::minimal_square_codewords(6) ==
                      std::set<std::string>{"0110110110", "1101101101", "1011011011"} &&
                  sqf::minimal_square_codewords(5).empty() &&
                  sqf::minimal_square_codewords(7).empty() &&
                  sqf::minimal_square_codewords(9).empty() &&
                  sqf::minimal_square_codewords(10).empty();
  return {"minimal-square-codewords", ok,
          ok ? "periods 2,3,4,6 match; periods 5,7,9,10 empty" : "set mismatch"};
}

Check check_uniqueness(std::size_t max_len) {
  static const std::vector<std::size_t> kKnown{1, 2, 3, 4, 6, 8, 11, 12, 13, 15, 16, 21};
  std::vector<std::size_t> expected;
  for (std::size_t l : kKnown) {
    if (l <= max_len) expected.push_back(l);
  }
  const auto got = sqf::uniqueness_lengths(max_len);
  std::ostringstream os;
  for (std::size_t i = 0; i < got.size(); ++i) os << (i ? "," : "") << got[i];
  return {"uniqueness-lengths", got == expected, "uniqueness list = " + os.str()};
}

Check check_growth() {
  // ratio per length l in [18,28]: raw(l+1)/raw(l), so counts run to 29
  const auto counts = sqf::count_circular_range(18, 29);
  double log_sum = 0.0;
  for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
    if (counts[i].raw_count == 0 || counts[i + 1].raw_count == 0) {
      return {"growth-ratio", false, "zero count at length " + std::to_string(counts[i].length)};
    }
    log_sum += std::log(static_cast<double>(counts[i + 1].raw_count) /
                        static_cast<double>(counts[i].raw_count));
  }
  const double mean = std::exp(log_sum / static_cast<double>(counts.size() - 1));
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << "geometric mean " << mean << " over l in [18,28]";
  return {"growth-ratio", mean >= 1.15 && mean <= 1.45, os.str()};
}

int run_selftest(std::size_t max_len, std::size_t max_construct, const Options& opts) {
  Output out{"selftest"};
  std::vector<Check> checks;
  checks.push_back(check_exception_set(max_construct));
  checks.push_back(check_oracle_agreement(max_len));
  checks.push_back(check_codeword_sets());
  checks.push_back(check_simple_cycles());
  checks.push_back(check_short_witnesses());
  checks.push_back(check_minimal_square_equivalence(10));
  checks.push_back(check_minimal_square_codewords());
  checks.push_back(check_uniqueness(std::min<std::size_t>(max_len, 30)));
  if (max_len >= 29) checks.push_back(check_growth());

  const bool color = !opts.json_format && opts.out_path.empty() &&
                     std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
  json rows = json::array();
  std::size_t failed = 0;
  std::ostringstream table;
  for (const Check& c : checks) {
    if (!c.pass) ++failed;
    rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    const char* tag = c.pass ? "PASS" : "FAIL";
    if (color) {
      table << (c.pass ? "\033[32m" : "\033[31m") << tag << "\033[0m";
    } else {
      table << tag;
    }
    table << "  " << c.name << "  (" << c.detail << ")\n";
  }
  out.payload["checks"] = rows;
  out.payload["passed"] = checks.size() - failed;
  out.payload["failed"] = failed;
  if (failed > 0) {
    out.status = "error";
    out.exit_code = 1;
  }
  if (opts.json_format) return emit(out, opts);
  std::ostringstream text;
  text << table.str() << (failed == 0 ? "all checks passed" : "checks failed") << " ("
       << checks.size() - failed << "/" << checks.size() << ")\n";
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path);
    file << text.str();
    std::cerr << "output written to " << opts.out_path << "\n";
  } else {
    std::cout << text.str();
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square-free circular ternary words: construction, verification, enumeration"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out may follow the subcommand

  Options opts;
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opts.out_path, "write the output document to this file");

  // construct
  std::size_t construct_length = 0;
  bool with_codeword = false;
  CLI::App* construct = app.add_subcommand("construct", "build a square-free circular word");
  construct->add_option("length", construct_length, "target length")->required();
  construct->add_flag("--codeword", with_codeword, "also print the binary codeword");

  // verify
  std::string verify_input;
  CLI::App* verify = app.add_subcommand("verify", "check square-freeness of a word or codeword");
  verify->add_option("input", verify_input, "word, (word), codeword or (codeword)")->required();

  // encode / decode
  std::string encode_input;
  CLI::App* encode = app.add_subcommand("encode", "binary codeword of a ternary word");
  encode->add_option("input", encode_input, "word or (word)")->required();

  std::string decode_input;
  std::string seed = "ab";
  CLI::App* decode = app.add_subcommand("decode", "ternary word of a binary codeword");
  decode->add_option("input", decode_input, "codeword or (codeword)")->required();
  decode->add_option("--seed", seed, "two distinct letters fixing the linear decoding");

  // enumerate
  std::size_t enum_length = 0;
  bool iso = false;
  bool count_only = false;
  std::size_t max_list = 100;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list circular square-free words");
  enumerate->add_option("length", enum_length, "word length")->required();
  enumerate->add_flag("--iso", iso, "deduplicate up to letter bijection");
  enumerate->add_flag("--count-only", count_only, "print counts without the word list");
  enumerate->add_option("--max", max_list, "cap the listed words (0 = unlimited)");

  // walks
  CLI::App* walks = app.add_subcommand("walks", "closed walks in the weighted jump graph");
  walks->require_subcommand(1);
  std::string walk_label;
  CLI::App* walks_check = walks->add_subcommand("check", "closure verdict and weight");
  walks_check->add_option("label", walk_label, "weight sequence over 1,2,3")->required();
  std::string walk_to_label;
  CLI::App* walks_to = walks->add_subcommand("to-codeword", "codeword spelled by a closed walk");
  walks_to->add_option("label", walk_to_label, "weight sequence over 1,2,3")->required();
  std::string walk_from_input;
  CLI::App* walks_from = walks->add_subcommand("from-codeword", "recover the walk label");
  walks_from->add_option("codeword", walk_from_input, "circular codeword")->required();

  // selftest
  std::size_t max_len = 30;
  std::size_t max_construct = 500;
  CLI::App* selftest = app.add_subcommand("selftest", "re-derive the headline results");
  selftest->add_option("--max-length", max_len, "enumeration bound (default 30)")
      ->check(CLI::Range(std::size_t{1}, sqf::kMaxEnumerationLength));
  selftest->add_option("--max-construct", max_construct,
                       "construction sweep bound (default 500)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opts.json_format = (format == "json");

  try {
    if (construct->parsed()) return run_construct(construct_length, with_codeword, opts);
    if (verify->parsed()) return run_verify(verify_input, opts);
    if (encode->parsed()) return run_encode(encode_input, opts);
    if (decode->parsed()) return run_decode(decode_input, seed, opts);
    if (enumerate->parsed()) return run_enumerate(enum_length, iso, count_only, max_list, opts);
    if (walks->parsed()) {
      if (walks_check->parsed()) return run_walks_check(walk_label, opts);
      if (walks_to->parsed()) return run_walks_to_codeword(walk_to_label, opts);
      if (walks_from->parsed()) return run_walks_from_codeword(walk_from_input, opts);
    }
    if (selftest->parsed()) return run_selftest(max_len, max_construct, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
