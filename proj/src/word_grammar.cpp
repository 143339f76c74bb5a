#include <framedhom/word_grammar.hpp>

#include <cctype>
#include <sstream>

namespace framedhom {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view context) {
  s = trim(s);
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  Integer v;
  if (digits.empty() || v.set_str(digits, 10) != 0)
    throw ValidationError("word: expected an integer in \"" + std::string(context) + "\"");
  return v;
}

int parse_index(std::string_view s, std::string_view context) {
  const Integer v = parse_integer(s, context);
  if (!v.fits_sint_p()) throw ValidationError("word: index out of range in \"" + std::string(context) + "\"");
  return static_cast<int>(v.get_si());
}

// Coordinates of a vector of length rel_dim (or abs_dim when allow_d is false).
IntVector parse_coords(const SurfaceSpec& spec, std::string_view text, bool allow_d) {
  text = trim(text);
  const Eigen::Index dim = allow_d ? spec.rel_dim() : spec.abs_dim();
  IntVector v = IntVector::Zero(dim);
  const bool symbolic = text.find_first_of("xyd") != std::string_view::npos;
  if (!symbolic && text != "0") {
    Eigen::Index k = 0;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = text.find(',', start);
      if (k >= dim) throw ValidationError("word: too many coordinates in \"" + std::string(text) + "\"");
      v(k++) = parse_integer(text.substr(start, comma - start), text);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (k != dim) throw ValidationError("word: expected " + std::to_string(dim) + " coordinates in \"" + std::string(text) + "\"");
    return v;
  }
  if (text == "0") return v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ValidationError("word: expected + or - in \"" + std::string(text) + "\"");
    }
    std::size_t sym = pos;
    while (sym < text.size() && std::isdigit(static_cast<unsigned char>(text[sym]))) ++sym;
    const Integer coef = sym == pos ? Integer(1) : parse_integer(text.substr(pos, sym - pos), text);
    if (sym >= text.size()) throw ValidationError("word: dangling coefficient in \"" + std::string(text) + "\"");
    const char name = text[sym];
    std::size_t end = sym + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == sym + 1) throw ValidationError("word: symbol without index in \"" + std::string(text) + "\"");
    const int index = parse_index(text.substr(sym + 1, end - sym - 1), text);
    const Integer c = sign * coef;
    if (name == 'x' || name == 'y') {
      if (index < 1 || index > spec.genus()) throw ValidationError("word: handle index out of range in \"" + std::string(text) + "\"");
      v(name == 'x' ? spec.x_index(index) : spec.y_index(index)) += c;
    } else if (name == 'd' && allow_d) {
      v += c * puncture_class(spec, index).coords;
    } else {
      throw ValidationError("word: unexpected symbol in \"" + std::string(text) + "\"");
    }
    pos = end;
  }
  return v;
}

// Splits "<body>)^<k>" style suffixes: returns the power, default 1.
Integer parse_power(std::string_view rest, std::string_view token) {
  if (rest.empty()) return 1;
  if (rest.front() != '^') throw ValidationError("word: unexpected text after letter \"" + std::string(token) + "\"");
  return parse_integer(rest.substr(1), token);
}

Generator parse_letter(const Framing& f, std::string_view token) {
  const SurfaceSpec& spec = f.spec();
  if (token.size() >= 3 && token[0] == 'T' && (token[1] == 'x' || token[1] == 'y' || token[1] == 'd')) {
    std::size_t end = 2;
    while (end < token.size() && std::isdigit(static_cast<unsigned char>(token[end]))) ++end;
    if (end == 2) throw ValidationError("word: missing index in \"" + std::string(token) + "\"");
    const int index = parse_index(token.substr(2, end - 2), token);
    const Integer power = parse_power(token.substr(end), token);
    if (token[1] == 'd') {
      if (index < 1 || index > spec.points()) throw ValidationError("word: puncture index out of range in \"" + std::string(token) + "\"");
      return puncture_twist(spec, index, power);
    }
    if (index < 1 || index > spec.genus()) throw ValidationError("word: handle index out of range in \"" + std::string(token) + "\"");
    return curve_twist(f, token[1] == 'x' ? spec.x_index(index) : spec.y_index(index), power);
  }
  if (token.size() >= 2 && (token[0] == 'T' || token[0] == 'P') && token[1] == '(') {
    const std::size_t close = token.find(')');
    const std::size_t semi = token.find(';');
    if (close == std::string_view::npos || semi == std::string_view::npos || semi > close)
      throw ValidationError("word: malformed letter \"" + std::string(token) + "\"");
    const std::string_view first = token.substr(2, semi - 2);
    const std::string_view second = token.substr(semi + 1, close - semi - 1);
    if (token[0] == 'P') {
      if (close + 1 != token.size()) throw ValidationError("word: point-pushes take no power in \"" + std::string(token) + "\"");
      return PointPush{parse_index(first, token), AbsVec(parse_coords(spec, second, false))};
    }
    if (second.substr(0, 2) != "w=") throw ValidationError("word: expected w=<int> in \"" + std::string(token) + "\"");
    return Twist{PunctVec(parse_coords(spec, first, true)), parse_power(token.substr(close + 1), token),
                 parse_integer(second.substr(2), token)};
  }
  throw ValidationError("word: unknown letter \"" + std::string(token) + "\"");
}

}  // namespace

Word parse_word(const Framing& f, std::string_view text) {
  std::vector<Generator> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    if (end > pos) letters.push_back(parse_letter(f, text.substr(pos, end - pos)));
    pos = end;
  }
  return Word(f.spec(), std::move(letters));
}

AbsVec parse_abs_vector(const SurfaceSpec& spec, std::string_view text) { return AbsVec(parse_coords(spec, text, false)); }

PunctVec parse_punct_vector(const SurfaceSpec& spec, std::string_view text) {
  return PunctVec(parse_coords(spec, text, true));
}

std::string format_vector(const SurfaceSpec& spec, const IntVector& coords, char tail_symbol) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Integer& c, char symbol, int index) {
    if (c == 0) return;
    if (c < 0) os << '-';
    else if (!first) os << '+';
    if (abs(c) != 1) os << abs(c);
    os << symbol << index;
    first = false;
  };
  for (int i = 1; i <= spec.genus(); ++i) {
    term(coords(spec.x_index(i)), 'x', i);
    term(coords(spec.y_index(i)), 'y', i);
  }
  for (Eigen::Index k = spec.abs_dim(); k < coords.size(); ++k)
    term(coords(k), tail_symbol, static_cast<int>(k - spec.abs_dim()) + 2);
  return first ? "0" : os.str();
}

std::string format_word(const Word& word) {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : word.letters()) {
    if (!first) os << ' ';
    first = false;
    if (const auto* t = std::get_if<Twist>(&l)) {
      os << "T(" << format_vector(word.spec(), t->c.coords, 'd') << ";w=" << t->w << ')';
      if (t->power != 1) os << '^' << t->power;
    } else {
      const auto& p = std::get<PointPush>(l);
      os << "P(" << p.point << ';' << format_vector(word.spec(), p.u.coords, 'd') << ')';
    }
  }
  return os.str();
}

}  // namespace framedhom
