#include "bomega/text.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bomega/errors.hpp"

namespace bomega {

namespace {

constexpr std::int64_t kMaxLiteral = 1000000000000000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t at() const { return at_; }

  void skip_ws() {
    while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_]))) ++at_;
  }

  bool done() {
    skip_ws();
    return at_ >= text_.size();
  }

  /// Settles past whitespace and reports the next character without
  /// consuming it; NUL at the end of input.
  char peek() {
    skip_ws();
    return at_ < text_.size() ? text_[at_] : '\0';
  }

  bool try_consume(char c) {
    if (peek() != c || c == '\0') return false;
    ++at_;
    return true;
  }

  void expect(char c, const std::string& expected) {
    if (!try_consume(c)) fail("unexpected input", expected);
  }

  std::int64_t parse_int() {
    skip_ws();
    const std::size_t start = at_;
    std::int64_t value = 0;
    while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_]))) {
      value = value * 10 + (text_[at_] - '0');
      if (value > kMaxLiteral)
        throw ParseError("integer literal too large", start, "an integer at most 1000000000000000");
      ++at_;
    }
    if (at_ == start) fail("expected an integer", "a digit");
    return value;
  }

  std::string parse_name() {
    skip_ws();
    const std::size_t start = at_;
    while (at_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[at_]))) ++at_;
    return std::string(text_.substr(start, at_ - start));
  }

  void require_done() {
    if (!done()) fail("trailing input", "end of input");
  }

  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    throw ParseError(msg, at_, expected);
  }

 private:
  std::string_view text_;
  std::size_t at_ = 0;
};

OmegaSet parse_tail(Cursor& cur) {
  cur.expect('[', "a set of the form [n)");
  const std::int64_t n = cur.parse_int();
  cur.expect(')', "the closing ) of [n)");
  return OmegaSet::tail(n);
}

OmegaSet parse_set_member(Cursor& cur) {
  if (cur.try_consume('0')) return OmegaSet::empty();
  return parse_tail(cur);
}

}  // namespace

std::string to_string(const OmegaSet& s) {
  return s.is_empty() ? std::string("0") : "[" + std::to_string(s.tail_index()) + ")";
}

std::string to_string(const Family& family) {
  std::string out = "{";
  bool first = true;
  for (const OmegaSet& s : family.members()) {
    if (!first) out += ",";
    out += to_string(s);
    first = false;
  }
  return out + "}";
}

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  return "(" + std::to_string(x.i()) + "," + std::to_string(x.j()) + "," + to_string(x.f()) + ")";
}

std::string to_string(const MonoidEndo& e) {
  switch (e.tag()) {
    case EndoTag::Alpha:
      return "alpha:" + std::to_string(e.k()) + "," + std::to_string(e.p());
    case EndoTag::Beta:
      return "beta:" + std::to_string(e.k()) + "," + std::to_string(e.p());
    case EndoTag::Gamma:
      return "gamma:" + std::to_string(e.k());
    case EndoTag::Delta:
      return "delta:" + std::to_string(e.k());
    case EndoTag::Zero:
      return "zero";
  }
  throw std::logic_error("unreachable endomorphism tag");
}

std::string to_string(const BicyclicPair& x) {
  return "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")";
}

std::string to_string(const BicyclicWord& w) { return w.empty() ? "1" : w.letters(); }

std::string to_string(const Lz2N& x) {
  return std::string("(") + static_cast<char>(x.tag) + "," + std::to_string(x.k) + ")";
}

std::string to_string(GreenRelation rel) {
  switch (rel) {
    case GreenRelation::R:
      return "R";
    case GreenRelation::L:
      return "L";
    case GreenRelation::H:
      return "H";
    case GreenRelation::D:
      return "D";
    case GreenRelation::J:
      return "J";
  }
  throw std::logic_error("unreachable Green relation");
}

Element parse_element(std::string_view text, const Family& family) {
  Cursor cur(text);
  if (cur.try_consume('0')) {
    cur.require_done();
    if (!family.contains_empty())
      throw ParseError("the zero element exists only over families containing the empty set", 0,
                       "an element of the form (i,j,[n))");
    return Element::zero(family);
  }
  cur.expect('(', "( or 0");
  const std::int64_t i = cur.parse_int();
  cur.expect(',', "a comma");
  const std::int64_t j = cur.parse_int();
  cur.expect(',', "a comma");
  cur.peek();
  const std::size_t set_at = cur.at();
  const OmegaSet f = parse_tail(cur);
  cur.expect(')', "the closing ) of the triple");
  cur.require_done();
  if (!family.contains(f))
    throw ParseError("the set " + to_string(f) + " is not a member of the family", set_at,
                     "a member of the family");
  return Element(i, j, f, family);
}

Family parse_family(std::string_view text) {
  Cursor cur(text);
  cur.expect('{', "{");
  std::vector<OmegaSet> members;
  if (!cur.try_consume('}')) {
    members.push_back(parse_set_member(cur));
    while (cur.try_consume(',')) members.push_back(parse_set_member(cur));
    cur.expect('}', "} or a comma");
  }
  cur.require_done();
  try {
    return Family(std::move(members));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), 0,
                     "a nonempty family of inductive sets, containing [0) and closed under "
                     "shifted intersections");
  }
}

BicyclicWord parse_word(std::string_view text) {
  Cursor cur(text);
  if (cur.try_consume('1')) {
    cur.require_done();
    return BicyclicWord();
  }
  std::string letters;
  while (!cur.done()) {
    const char c = cur.peek();
    if (c != 'p' && c != 'q') cur.fail("invalid word letter", "letter p or q");
    letters.push_back(c);
    cur.try_consume(c);
  }
  if (letters.empty()) cur.fail("empty input", "a word over p and q, or 1");
  return BicyclicWord(std::move(letters));
}

MonoidEndo parse_endo(std::string_view text) {
  Cursor cur(text);
  cur.peek();
  const std::size_t name_at = cur.at();
  const std::string name = cur.parse_name();
  if (name != "alpha" && name != "beta" && name != "gamma" && name != "delta" && name != "zero")
    throw ParseError("unknown endomorphism name", name_at, "alpha, beta, gamma, delta or zero");
  if (name == "zero") {
    cur.require_done();
    return MonoidEndo::zero();
  }
  cur.expect(':', "a colon and the multiplier k");
  cur.peek();
  const std::size_t params_at = cur.at();
  const std::int64_t k = cur.parse_int();
  std::int64_t p = 0;
  const bool takes_offset = name == "alpha" || name == "beta";
  if (takes_offset) {
    cur.expect(',', "a comma and the offset p");
    p = cur.parse_int();
  }
  cur.require_done();
  try {
    if (name == "alpha") return MonoidEndo::alpha(k, p);
    if (name == "beta") return MonoidEndo::beta(k, p);
    if (name == "gamma") return MonoidEndo::gamma(k);
    return MonoidEndo::delta(k);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), params_at, "parameters in the valid range");
  }
}

GreenRelation parse_green_relation(std::string_view text, bool allow_j) {
  Cursor cur(text);
  const char c = cur.peek();
  const std::size_t at = cur.at();
  GreenRelation rel;
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'R':
      rel = GreenRelation::R;
      break;
    case 'L':
      rel = GreenRelation::L;
      break;
    case 'H':
      rel = GreenRelation::H;
      break;
    case 'D':
      rel = GreenRelation::D;
      break;
    case 'J':
      rel = GreenRelation::J;
      break;
    default:
      throw ParseError("unknown Green relation", at, allow_j ? "one of R, L, H, D, J" : "one of R, L, H, D");
  }
  cur.try_consume(c);
  cur.require_done();
  if (rel == GreenRelation::J && !allow_j)
    throw ParseError("the relation J is provided on the endomorphism semigroup only", at,
                     "one of R, L, H, D");
  return rel;
}

}  // namespace bomega
