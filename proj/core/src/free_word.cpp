#include "dessinkit/free_word.hpp"

#include <cctype>
#include <charconv>

#include "dessinkit/errors.hpp"

namespace dessinkit {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == inverse(l))
    out.pop_back();
  else
    out.push_back(l);
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  FreeWord parse() {
    FreeWord w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  FreeWord word() {
    FreeWord w;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == ')') return w;
      w = w * factor();
    }
  }

  FreeWord factor() {
    FreeWord base = atom();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '^') return base;
      ++pos_;
      skip_space();
      if (pos_ < text_.size() &&
          (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        base = power(base, integer());
      } else {
        base = conjugate(base, atom());
      }
    }
  }

  FreeWord atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a generator");
    char c = text_[pos_++];
    switch (c) {
      case 'x': return FreeWord({Letter::X});
      case 'X': return FreeWord({Letter::XInv});
      case 'y': return FreeWord({Letter::Y});
      case 'Y': return FreeWord({Letter::YInv});
      case '1': return FreeWord();
      case '(': {
        FreeWord inner = word();
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
        ++pos_;
        return inner;
      }
      default:
        --pos_;
        fail("unexpected character");
    }
  }

  long long integer() {
    long long value = 0;
    const char* begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == begin) fail("expected an exponent");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) +
                     " in word \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeWord::FreeWord(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

FreeWord FreeWord::parse(std::string_view text) {
  return WordParser(text).parse();
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    switch (l) {
      case Letter::X: out += 'x'; break;
      case Letter::XInv: out += 'X'; break;
      case Letter::Y: out += 'y'; break;
      case Letter::YInv: out += 'Y'; break;
    }
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return FreeWord(letters);
}

FreeWord inverse(const FreeWord& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : letters) l = inverse(l);
  return FreeWord(letters);
}

FreeWord power(const FreeWord& w, long long k) {
  FreeWord base = k < 0 ? inverse(w) : w;
  FreeWord result;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) result = result * base;
  return result;
}

FreeWord conjugate(const FreeWord& w, const FreeWord& by) {
  return inverse(by) * w * by;
}

Permutation evaluate_word(const FreeWord& w, const Permutation& px,
                          const Permutation& py) {
  if (px.degree() != py.degree()) {
    throw DegreeMismatch("word evaluation needs permutations of equal degree");
  }
  Permutation px_inv = inverse(px);
  Permutation py_inv = inverse(py);
  Permutation result = Permutation::identity(px.degree());
  for (Letter l : w.letters()) {
    switch (l) {
      case Letter::X: result = compose(result, px); break;
      case Letter::XInv: result = compose(result, px_inv); break;
      case Letter::Y: result = compose(result, py); break;
      case Letter::YInv: result = compose(result, py_inv); break;
    }
  }
  return result;
}

long long exponent_sum(const FreeWord& w, Generator g) {
  long long sum = 0;
  const auto target = static_cast<std::int8_t>(g);
  for (Letter l : w.letters()) {
    auto v = static_cast<std::int8_t>(l);
    if (v == target) ++sum;
    if (v == -target) --sum;
  }
  return sum;
}

FreeWord substitute(const FreeWord& w, const FreeWord& image_x,
                    const FreeWord& image_y) {
  const FreeWord image_x_inv = inverse(image_x);
  const FreeWord image_y_inv = inverse(image_y);
  std::vector<Letter> letters;
  for (Letter l : w.letters()) {
    const FreeWord* img = nullptr;
    switch (l) {
      case Letter::X: img = &image_x; break;
      case Letter::XInv: img = &image_x_inv; break;
      case Letter::Y: img = &image_y; break;
      case Letter::YInv: img = &image_y_inv; break;
    }
    letters.insert(letters.end(), img->letters().begin(), img->letters().end());
  }
  return FreeWord(letters);
}

}  // namespace dessinkit
