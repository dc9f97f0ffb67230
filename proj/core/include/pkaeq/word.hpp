#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace pkaeq {

/// Index into an automaton's alphabet.
using Letter = std::uint8_t;

/// A finite string over the alphabet; the empty vector is the null string.
using Word = std::vector<Letter>;

/// Length first, then lexicographic by letter index. This is breadth-first
/// order on the tree of all strings.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using WordSet = std::set<Word, ShortLex>;

Word concat(const Word& x, const Word& y);
bool is_prefix(const Word& prefix, const Word& w);

/// Pairwise prefix-incomparable.
bool is_antichain(std::span<const Word> words);

/// Letter names joined without separators ("" for the null string).
std::string word_to_string(const Word& w, std::span<const std::string> alphabet);

/// A finite prefix-closed set of words.
class FiniteTree {
 public:
  FiniteTree() = default;

  /// Throws InputError("not a tree") unless the set is prefix-closed.
  static FiniteTree from_words(const std::vector<Word>& words);

  /// All words shorter than `depth` over an alphabet of the given size.
  static FiniteTree full(std::size_t alphabet_size, std::size_t depth);

  const WordSet& words() const { return words_; }
  bool contains(const Word& w) const { return words_.count(w) > 0; }
  bool empty() const { return words_.empty(); }
  std::size_t size() const { return words_.size(); }

  /// {w : a w in this tree}.
  FiniteTree subtree(Letter a) const;

  /// This tree united with x.B. Throws InputError if the result is not
  /// prefix-closed (x must lie in this tree or on its boundary).
  FiniteTree graft(const Word& x, const FiniteTree& b) const;

  friend bool operator==(const FiniteTree&, const FiniteTree&) = default;
  friend bool operator<(const FiniteTree& a, const FiniteTree& b) {
    return std::lexicographical_compare(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                        b.words_.end(), ShortLex{});
  }

 private:
  WordSet words_;
};

/// Prefix-minimal words outside the tree: {eps} for the empty tree,
/// otherwise {w a : w in A, a in Sigma, w a not in A}.
WordSet boundary(const FiniteTree& tree, std::size_t alphabet_size);

}  // namespace pkaeq
