#include <cctype>
#include <limits>

#include "monoalg/error.hpp"
#include "monoalg/symbolic.hpp"

namespace monoalg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SymbolicAlgebra sum() {
    std::vector<Term> terms;
    std::vector<CycleFamily> families;
    do {
      term(terms, families);
    } while (accept('+'));
    skip_space();
    if (pos_ != text_.size()) fail("expected '+' or end of input");
    return SymbolicAlgebra(std::move(terms), std::move(families));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("symbolic syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  bool accept(char c) { return accept(std::string_view(&c, 1)); }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_cardinal() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == 'w' || text_.substr(pos_, 2) == "ω";
  }

  std::uint64_t natural() {
    skip_space();
    const std::size_t begin = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    if (pos_ == begin) fail("expected a number");
    return v;
  }

  Cardinal cardinal() {
    if (accept('w') || accept("ω")) return Cardinal::omega();
    return Cardinal(natural());
  }

  // A cardinal that must be at least 1; reports the offset of the zero.
  Cardinal positive(const char* what) {
    skip_space();
    const std::size_t at = pos_;
    const Cardinal c = cardinal();
    if (c.is_zero()) {
      pos_ = at;
      fail(std::string("zero cardinal where forbidden (") + what + ")");
    }
    return c;
  }

  std::uint64_t cycle_size() {
    skip_space();
    const std::size_t at = pos_;
    const std::uint64_t n = natural();
    if (n == 0) {
      pos_ = at;
      fail("cycle size must be at least 1");
    }
    return n;
  }

  // Everything after the cycle size inside A[...]: [";" cardlist] [";" card] "]".
  void levels(std::vector<Cardinal>& prefix, std::optional<Cardinal>& tail) {
    if (accept(';')) {
      if (at_cardinal()) {
        prefix.push_back(positive("profile level"));
        while (accept(',')) prefix.push_back(positive("profile level"));
      }
      if (accept(';')) tail = positive("profile tail");
    }
    expect(']');
  }

  void term(std::vector<Term>& terms, std::vector<CycleFamily>& families) {
    if (accept("sum_n")) {
      const Cardinal m = at_cardinal() ? multiplicity() : Cardinal(1);
      CycleFamily f{m, {}, std::nullopt};
      if (accept("Z_n")) {
        families.push_back(std::move(f));
        return;
      }
      if (!accept("A[")) fail("expected 'Z_n' or 'A[n'");
      if (!accept('n')) fail("expected 'n'");
      levels(f.prefix, f.tail);
      families.push_back(std::move(f));
      return;
    }

    const Cardinal m = at_cardinal() ? multiplicity() : Cardinal(1);
    if (accept("F_")) {
      skip_space();
      const std::size_t at = pos_;
      const std::uint64_t k = natural();
      if (k == 0) {
        pos_ = at;
        fail("F_k needs k >= 1");
      }
      add_limit(fraisse_limit(LimitKind::kBounded, k), m, families);
      return;
    }
    if (accept('F')) {
      add_limit(fraisse_limit(LimitKind::kAll), m, families);
      return;
    }
    if (accept('Z')) {
      terms.push_back(Term{m, Profile{cycle_size(), {}, std::nullopt}});
      return;
    }
    if (accept('N')) {
      terms.push_back(Term{m, NSucc{}});
      return;
    }
    if (accept("B[")) {
      const Cardinal degree = positive("B[.] degree");
      expect(']');
      terms.push_back(Term{m, Bee{degree}});
      return;
    }
    if (accept("A[")) {
      Profile p{cycle_size(), {}, std::nullopt};
      levels(p.prefix, p.tail);
      terms.push_back(Term{m, std::move(p)});
      return;
    }
    fail("expected a component (Z, N, B[, A[, F or sum_n)");
  }

  static void add_limit(const SymbolicAlgebra& limit, Cardinal m, std::vector<CycleFamily>& families) {
    for (CycleFamily f : limit.families()) {
      f.multiplicity = f.multiplicity * m;
      families.push_back(std::move(f));
    }
  }

  Cardinal multiplicity() {
    const Cardinal m = positive("multiplicity");
    expect('*');
    return m;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicAlgebra parse_symbolic(std::string_view text) { return Parser(text).sum(); }

}  // namespace monoalg
