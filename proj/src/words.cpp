#include "epichain/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace epichain {

  std::optional<char> display_name(Letter x) {
    if (x.id < kNamedLetters) {
      return static_cast<char>('a' + x.id);
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw std::invalid_argument("a word must contain at least one letter");
    }
  }

  Word::Word(std::initializer_list<std::uint32_t> ids) : letters_() {
    letters_.reserve(ids.size());
    for (auto id : ids) {
      letters_.push_back(Letter{id});
    }
    if (letters_.empty()) {
      throw std::invalid_argument("a word must contain at least one letter");
    }
  }

  Word Word::parse(std::string_view text) {
    if (text.empty()) {
      throw ParseError("empty word");
    }
    std::vector<Letter> out;
    bool const raw = text.find(',') != std::string_view::npos
                     || std::all_of(text.begin(), text.end(), [](char c) {
                          return c >= '0' && c <= '9';
                        });
    if (raw) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto const comma = text.find(',', pos);
        auto const item  = text.substr(
            pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        std::uint32_t id = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
          throw ParseError("bad letter id '" + std::string(item) + "' in word '"
                           + std::string(text) + "'");
        }
        out.push_back(Letter{id});
        if (comma == std::string_view::npos) {
          break;
        }
        pos = comma + 1;
      }
    } else {
      for (char c : text) {
        if (c < 'a' || c > 'z') {
          throw ParseError(std::string("bad letter '") + c + "' in word '"
                           + std::string(text) + "'");
        }
        out.push_back(Letter{static_cast<std::uint32_t>(c - 'a')});
      }
    }
    return Word(std::move(out));
  }

  std::string Word::to_string() const {
    bool const named = std::all_of(
        letters_.begin(), letters_.end(), [](Letter x) { return x.id < kNamedLetters; });
    std::string out;
    if (named) {
      for (auto x : letters_) {
        out.push_back(*display_name(x));
      }
      return out;
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i != 0) {
        out.push_back(',');
      }
      out += std::to_string(letters_[i].id);
    }
    return out;
  }

  std::vector<Letter> Word::content() const {
    std::vector<Letter> out;
    for (auto x : letters_) {
      if (std::find(out.begin(), out.end(), x) == out.end()) {
        out.push_back(x);
      }
    }
    return out;
  }

  Word Word::factor(std::size_t start, std::size_t end) const {
    if (start >= end || end > letters_.size()) {
      throw std::out_of_range("invalid factor range");
    }
    return Word(std::vector<Letter>(letters_.begin() + start, letters_.begin() + end));
  }

  Word operator+(Word const& lhs, Word const& rhs) {
    std::vector<Letter> out(lhs.letters_);
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return Word(std::move(out));
  }

  Word power(Letter x, std::size_t k) {
    return Word(std::vector<Letter>(k, x));
  }

  Word power(Word const& w, std::size_t k) {
    if (k == 0) {
      throw std::invalid_argument("a word power needs a positive exponent");
    }
    std::vector<Letter> out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return Word(std::move(out));
  }

  bool length_lex_less(Word const& lhs, Word const& rhs) {
    if (lhs.size() != rhs.size()) {
      return lhs.size() < rhs.size();
    }
    return lhs < rhs;
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitution
  ////////////////////////////////////////////////////////////////////////

  MissingLetterError::MissingLetterError(Letter x)
      : Error("substitution has no image for letter " + std::to_string(x.id)),
        letter_(x) {}

  void Substitution::set(Letter x, Word image) {
    images_.insert_or_assign(x, std::move(image));
  }

  Word const* Substitution::find(Letter x) const {
    auto it = images_.find(x);
    return it == images_.end() ? nullptr : &it->second;
  }

  Substitution Substitution::identity_on(Word const& w) {
    Substitution s;
    for (auto x : w.content()) {
      s.set(x, Word(std::vector<Letter>{x}));
    }
    return s;
  }

  Word apply_substitution(Substitution const& s, Word const& u) {
    std::vector<Letter> out;
    for (auto x : u) {
      auto const* image = s.find(x);
      if (image == nullptr) {
        throw MissingLetterError(x);
      }
      out.insert(out.end(), image->begin(), image->end());
    }
    return Word(std::move(out));
  }

  bool is_factor(Word const& u, Word const& v) {
    return std::search(v.begin(), v.end(), u.begin(), u.end()) != v.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Applicability
  ////////////////////////////////////////////////////////////////////////

  BudgetExceeded::BudgetExceeded(std::uint64_t budget)
      : Error("applicability search exceeded its budget of " + std::to_string(budget)
              + " nodes") {}

  namespace {

    // Backtracking over (pattern position, target offset). Images are kept as
    // (start, length) ranges into the target, so a bound image is compared in
    // place and never copied.
    class ApplicabilitySearch {
     public:
      ApplicabilitySearch(Word const& pattern, Word const& target, ApplicabilityOptions const& opts)
          : pattern_(pattern), target_(target.letters()), budget_(opts.node_budget) {
        letters_ = pattern.content();
        dense_.reserve(pattern.size());
        for (auto x : pattern) {
          dense_.push_back(static_cast<std::size_t>(
              std::find(letters_.begin(), letters_.end(), x) - letters_.begin()));
        }
        std::size_t const d = letters_.size();
        suffix_count_.assign((pattern.size() + 1) * d, 0);
        for (std::size_t i = pattern.size(); i-- > 0;) {
          for (std::size_t k = 0; k < d; ++k) {
            suffix_count_[i * d + k] = suffix_count_[(i + 1) * d + k];
          }
          ++suffix_count_[i * d + dense_[i]];
        }
        image_start_.assign(d, 0);
        image_len_.assign(d, 0);
      }

      std::optional<ApplicabilityWitness> run() {
        if (pattern_.size() > target_.size()) {
          return std::nullopt;
        }
        for (std::size_t start = 0; start + pattern_.size() <= target_.size(); ++start) {
          if (match(0, start)) {
            ApplicabilityWitness w;
            for (std::size_t k = 0; k < letters_.size(); ++k) {
              w.substitution.set(letters_[k],
                                 Word(std::vector<Letter>(
                                     target_.begin() + image_start_[k],
                                     target_.begin() + image_start_[k] + image_len_[k])));
            }
            w.start = start;
            w.end   = end_;
            return w;
          }
        }
        return std::nullopt;
      }

     private:
      // Least number of target letters still needed by positions i.. under the
      // current bindings (an unbound letter needs at least one per occurrence).
      std::size_t min_rest(std::size_t i) const {
        std::size_t const d     = letters_.size();
        std::size_t       total = 0;
        for (std::size_t k = 0; k < d; ++k) {
          total += suffix_count_[i * d + k] * std::max<std::size_t>(image_len_[k], 1);
        }
        return total;
      }

      bool match(std::size_t i, std::size_t cur) {
        if (i == pattern_.size()) {
          end_ = cur;
          return true;
        }
        if (budget_ && ++nodes_ > *budget_) {
          throw BudgetExceeded(*budget_);
        }
        std::size_t const k = dense_[i];
        std::size_t const n = target_.size();
        if (image_len_[k] != 0) {
          std::size_t const len = image_len_[k];
          if (cur + len + min_rest(i + 1) > n) {
            return false;
          }
          auto const first = target_.begin() + image_start_[k];
          if (!std::equal(first, first + len, target_.begin() + cur)) {
            return false;
          }
          return match(i + 1, cur + len);
        }
        std::size_t const d      = letters_.size();
        std::size_t const later  = suffix_count_[(i + 1) * d + k];
        std::size_t const others = min_rest(i + 1) - later;
        for (std::size_t len = 1; cur + len * (later + 1) + others <= n; ++len) {
          image_start_[k] = cur;
          image_len_[k]   = len;
          if (match(i + 1, cur + len)) {
            return true;
          }
        }
        image_len_[k] = 0;
        return false;
      }

      Word const&                   pattern_;
      std::span<const Letter>       target_;
      std::optional<std::uint64_t>  budget_;
      std::uint64_t                 nodes_ = 0;
      std::vector<Letter>           letters_;
      std::vector<std::size_t>      dense_;
      std::vector<std::size_t>      suffix_count_;
      std::vector<std::size_t>      image_start_;
      std::vector<std::size_t>      image_len_;
      std::size_t                   end_ = 0;
    };

  }  // namespace

  std::optional<ApplicabilityWitness>
  is_applicable(Word const& u, Word const& v, ApplicabilityOptions const& opts) {
    return ApplicabilitySearch(u, v, opts).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Squares
  ////////////////////////////////////////////////////////////////////////

  std::optional<SquareOccurrence> contains_square(Word const& w) {
    auto const x = w.letters();
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t p = 1; i + 2 * p <= x.size(); ++p) {
        if (std::equal(x.begin() + i, x.begin() + i + p, x.begin() + i + p)) {
          return SquareOccurrence{i, w.factor(i, i + p)};
        }
      }
    }
    return std::nullopt;
  }

  bool has_square_suffix(std::span<const Letter> w) {
    std::size_t const n = w.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
      if (std::equal(w.end() - 2 * p, w.end() - p, w.end() - p)) {
        return true;
      }
    }
    return false;
  }

  std::vector<Word> extend_square_free(std::span<const Word> level, std::size_t k) {
    std::vector<Word>   out;
    std::vector<Letter> buf;
    for (auto const& w : level) {
      buf.assign(w.begin(), w.end());
      buf.push_back(Letter{});
      for (std::uint32_t a = 0; a < k; ++a) {
        buf.back() = Letter{a};
        if (!has_square_suffix(buf)) {
          out.emplace_back(buf);
        }
      }
    }
    return out;
  }

  void for_each_square_free(std::size_t                              k,
                            std::size_t                              max_length,
                            std::function<bool(Word const&)> const& visit) {
    if (k == 0 || max_length == 0) {
      return;
    }
    std::vector<Word> level;
    for (std::uint32_t a = 0; a < k; ++a) {
      level.push_back(Word{a});
    }
    for (std::size_t len = 1;; ++len) {
      for (auto const& w : level) {
        if (!visit(w)) {
          return;
        }
      }
      if (len == max_length || level.empty()) {
        return;
      }
      level = extend_square_free(level, k);
    }
  }

  std::vector<Word> enumerate_square_free(std::size_t k, std::size_t max_length) {
    std::vector<Word> out;
    for_each_square_free(k, max_length, [&out](Word const& w) {
      out.push_back(w);
      return true;
    });
    return out;
  }

  void for_each_word(std::size_t                              k,
                     std::size_t                              max_length,
                     std::function<bool(Word const&)> const& visit) {
    if (k == 0) {
      return;
    }
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<Letter> digits(len, Letter{0});
      while (true) {
        if (!visit(Word(digits))) {
          return;
        }
        std::size_t i = len;
        while (i > 0 && digits[i - 1].id + 1 == k) {
          digits[--i] = Letter{0};
        }
        if (i == 0) {
          break;
        }
        ++digits[i - 1].id;
      }
    }
  }

}  // namespace epichain
