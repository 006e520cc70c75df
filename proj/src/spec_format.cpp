#include "tsa/spec_format.hpp"

#include <cctype>
#include <charconv>

namespace tsa {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("spec '" + std::string(text) + "': " + what + " at position " +
                     std::to_string(pos));
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  int integer() {
    int value = 0;
    auto r = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (r.ec != std::errc{} || value < 0) fail("expected a non-negative integer");
    pos = static_cast<std::size_t>(r.ptr - text.data());
    return value;
  }
  std::string word() {
    std::size_t b = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == b) fail("expected a coefficient name");
    return std::string(text.substr(b, pos - b));
  }
  bool done() const { return pos == text.size(); }
};

}  // namespace

SarimaSpec parse_spec(std::string_view text) {
  Cursor c{text};
  SarimaSpec spec;
  c.expect('(');
  spec.p = c.integer();
  c.expect(',');
  spec.d = c.integer();
  c.expect(',');
  spec.q = c.integer();
  c.expect(')');
  c.expect('x');
  c.expect('(');
  spec.P = c.integer();
  c.expect(',');
  spec.D = c.integer();
  c.expect(',');
  spec.Q = c.integer();
  c.expect(')');
  spec.s = c.integer();
  if (c.peek() == '[') {
    ++c.pos;
    while (true) {
      const std::string name = c.word();
      CoefKind kind;
      if (name == "ar") kind = CoefKind::Ar;
      else if (name == "ma") kind = CoefKind::Ma;
      else if (name == "sar") kind = CoefKind::Sar;
      else if (name == "sma") kind = CoefKind::Sma;
      else c.fail("unknown coefficient family '" + name + "'");
      const int index = c.integer();
      c.expect('=');
      if (c.integer() != 0) c.fail("pins must be '= 0'");
      spec.mask.push_back(CoefId{kind, index});
      if (c.peek() == ',') {
        ++c.pos;
        continue;
      }
      break;
    }
    c.expect(']');
  }
  if (!c.done()) c.fail("trailing characters");
  spec.validate();
  return spec;
}

std::string render_spec(const SarimaSpec& spec) {
  std::string out = "(" + std::to_string(spec.p) + "," + std::to_string(spec.d) + "," +
                    std::to_string(spec.q) + ")x(" + std::to_string(spec.P) + "," +
                    std::to_string(spec.D) + "," + std::to_string(spec.Q) + ")" +
                    std::to_string(spec.s);
  if (!spec.mask.empty()) {
    out += "[";
    for (std::size_t i = 0; i < spec.mask.size(); ++i) {
      if (i) out += ",";
      out += coef_name(spec.mask[i].kind, spec.mask[i].index) + "=0";
    }
    out += "]";
  }
  return out;
}

}  // namespace tsa
