#include "pkaeq/word.hpp"

#include <algorithm>

#include "pkaeq/errors.hpp"

namespace pkaeq {

Word concat(const Word& x, const Word& y) {
  Word w;
  w.reserve(x.size() + y.size());
  w.insert(w.end(), x.begin(), x.end());
  w.insert(w.end(), y.begin(), y.end());
  return w;
}

bool is_prefix(const Word& prefix, const Word& w) {
  return prefix.size() <= w.size() && std::equal(prefix.begin(), prefix.end(), w.begin());
}

bool is_antichain(std::span<const Word> words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i != j && is_prefix(words[i], words[j])) return false;
    }
  }
  return true;
}

std::string word_to_string(const Word& w, std::span<const std::string> alphabet) {
  std::string out;
  for (Letter a : w) out += alphabet[a];
  return out;
}

FiniteTree FiniteTree::from_words(const std::vector<Word>& words) {
  FiniteTree t;
  t.words_.insert(words.begin(), words.end());
  for (const Word& w : t.words_) {
    if (!w.empty() && !t.contains(Word(w.begin(), w.end() - 1))) {
      throw InputError("not a tree");
    }
  }
  return t;
}

FiniteTree FiniteTree::full(std::size_t alphabet_size, std::size_t depth) {
  FiniteTree t;
  if (depth == 0) return t;
  std::vector<Word> level{Word{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Word> next;
    for (const Word& w : level) {
      t.words_.insert(w);
      if (d + 1 == depth) continue;
      for (std::size_t a = 0; a < alphabet_size; ++a) {
        Word child = w;
        child.push_back(static_cast<Letter>(a));
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return t;
}

FiniteTree FiniteTree::subtree(Letter a) const {
  FiniteTree t;
  for (const Word& w : words_) {
    if (!w.empty() && w.front() == a) t.words_.emplace(w.begin() + 1, w.end());
  }
  return t;
}

FiniteTree FiniteTree::graft(const Word& x, const FiniteTree& b) const {
  std::vector<Word> all(words_.begin(), words_.end());
  for (const Word& w : b.words_) all.push_back(concat(x, w));
  return from_words(all);
}

WordSet boundary(const FiniteTree& tree, std::size_t alphabet_size) {
  WordSet out;
  if (tree.empty()) {
    out.insert(Word{});
    return out;
  }
  for (const Word& w : tree.words()) {
    if (std::any_of(w.begin(), w.end(), [&](Letter a) { return a >= alphabet_size; })) {
      throw InputError("tree uses a letter outside the alphabet");
    }
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      Word child = w;
      child.push_back(static_cast<Letter>(a));
      if (!tree.contains(child)) out.insert(std::move(child));
    }
  }
  return out;
}

}  // namespace pkaeq
