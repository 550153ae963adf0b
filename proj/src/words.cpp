#include "wron/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace wron {

Word parse_word(const std::string& digits, int rank) {
  Word w;
  w.rank = rank;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < '1' || *it > '9')
      throw std::invalid_argument("word: invalid letter '" + std::string(1, *it) + "'");
    int letter = *it - '0';
    if (letter > rank)
      throw std::invalid_argument("word: letter " + std::to_string(letter) +
                                  " exceeds rank " + std::to_string(rank));
    w.letters.push_back(letter);
  }
  return w;
}

std::string display_word(const Word& w) {
  std::string s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    s += static_cast<char>('0' + *it);
  return s;
}

Permutation identity_perm(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i + 1;
  return p;
}

Permutation longest_perm(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = n - i;
  return p;
}

int inversions(const Permutation& p) {
  int inv = 0;
  int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.images[i] > p.images[j]) ++inv;
  return inv;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  Permutation r;
  r.images.resize(a.size());
  for (int i = 0; i < a.size(); ++i) r.images[i] = a.images[b.images[i] - 1];
  return r;
}

Permutation adjacent_transposition(int i, int n) {
  Permutation p = identity_perm(n);
  std::swap(p.images[i - 1], p.images[i]);
  return p;
}

Permutation word_to_perm(const Word& w) {
  Permutation p = identity_perm(w.rank + 1);
  for (int letter : w.letters) p = compose(adjacent_transposition(letter, w.rank + 1), p);
  return p;
}

bool is_reduced(const Word& w) {
  return static_cast<int>(w.length()) == inversions(word_to_perm(w));
}

namespace {

void collect_reduced_words(const Permutation& w, int rank, Word& current,
                           std::vector<Word>& out) {
  if (w == identity_perm(rank + 1)) {
    out.push_back(current);
    return;
  }
  // Left descents i (l(s_i w) < l(w)) supply the last letter i_m.
  for (int i = 1; i <= rank; ++i) {
    Permutation shorter = compose(adjacent_transposition(i, rank + 1), w);
    if (inversions(shorter) < inversions(w)) {
      current.letters.push_back(i);
      collect_reduced_words(shorter, rank, current, out);
      current.letters.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> reduced_words_of_longest(int rank, int max_rank) {
  if (rank < 1) throw std::invalid_argument("reduced_words_of_longest: rank < 1");
  if (rank > max_rank)
    throw std::invalid_argument("reduced_words_of_longest: rank exceeds cap");
  std::vector<Word> raw;
  Word current;
  current.rank = rank;
  collect_reduced_words(longest_perm(rank + 1), rank, current, raw);
  // The recursion builds letters from i_m down to i_1; flip to
  // application order.
  for (auto& w : raw) std::reverse(w.letters.begin(), w.letters.end());
  std::sort(raw.begin(), raw.end());
  return raw;
}

DegreeVector shifted_degree_action(const Word& w) {
  DegreeVector k(w.rank, 0);
  auto at = [&](int i) -> int {
    if (i < 1 || i > w.rank) return 0;
    return k[i - 1];
  };
  for (int letter : w.letters)
    k[letter - 1] = at(letter - 1) + at(letter + 1) - at(letter) + 1;
  return k;
}

PoleError::PoleError(int pos, const ParamPoint& t)
    : std::runtime_error("transition map pole at parameter position " +
                         std::to_string(pos)),
      position(pos),
      triple(t) {}

ParamPoint braid_move_R(const ParamPoint& params, int j) {
  if (j < 1 || j + 1 >= static_cast<int>(params.size()))
    throw std::invalid_argument("braid_move_R: position out of range");
  const Rational& a = params[j - 1];
  const Rational& b = params[j];
  const Rational& c = params[j + 1];
  Rational denom = a + c;
  if (denom == 0) throw PoleError(j, {a, b, c});
  ParamPoint out = params;
  out[j - 1] = b * c / denom;
  out[j] = denom;
  out[j + 1] = a * b / denom;
  return out;
}

ParamPoint commute_move_L(const ParamPoint& params, int i) {
  if (i < 1 || i >= static_cast<int>(params.size()))
    throw std::invalid_argument("commute_move_L: position out of range");
  ParamPoint out = params;
  std::swap(out[i - 1], out[i]);
  return out;
}

bool braid_applies(const Word& w, int j) {
  if (j < 1 || j + 1 >= static_cast<int>(w.length())) return false;
  int a = w.letters[j - 1], b = w.letters[j], c = w.letters[j + 1];
  return a == c && std::abs(a - b) == 1;
}

bool commute_applies(const Word& w, int i) {
  if (i < 1 || i >= static_cast<int>(w.length())) return false;
  return std::abs(w.letters[i - 1] - w.letters[i]) > 1;
}

Word apply_braid(const Word& w, int j) {
  if (!braid_applies(w, j)) throw std::invalid_argument("apply_braid: pattern mismatch");
  Word out = w;
  std::swap(out.letters[j - 1], out.letters[j]);
  out.letters[j + 1] = out.letters[j - 1];
  return out;
}

Word apply_commute(const Word& w, int i) {
  if (!commute_applies(w, i))
    throw std::invalid_argument("apply_commute: pattern mismatch");
  Word out = w;
  std::swap(out.letters[i - 1], out.letters[i]);
  return out;
}

std::vector<Move> move_path(const Word& from, const Word& to) {
  if (from.rank != to.rank || from.length() != to.length())
    throw NoPathError("move_path: words not comparable");
  if (!is_reduced(from) || !is_reduced(to) ||
      !(word_to_perm(from) == word_to_perm(to)))
    throw NoPathError("move_path: not reduced words of the same element");
  if (from == to) return {};

  std::map<Word, std::pair<Word, Move>> parent;
  std::deque<Word> queue{from};
  parent.emplace(from, std::make_pair(from, Move{Move::Braid, 0}));
  int len = static_cast<int>(from.length());
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    // Braid moves first, positions ascending: BFS plus this fixed
    // expansion order makes the chosen path reproducible.
    for (int j = 1; j + 1 < len + 1; ++j) {
      std::vector<std::pair<Word, Move>> nexts;
      if (braid_applies(cur, j)) nexts.push_back({apply_braid(cur, j), {Move::Braid, j}});
      if (commute_applies(cur, j))
        nexts.push_back({apply_commute(cur, j), {Move::Commute, j}});
      for (auto& [nw, mv] : nexts) {
        if (parent.count(nw)) continue;
        parent.emplace(nw, std::make_pair(cur, mv));
        if (nw == to) {
          std::vector<Move> path;
          Word walk = to;
          while (!(walk == from)) {
            auto& [prev, m] = parent.at(walk);
            path.push_back(m);
            walk = prev;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        queue.push_back(nw);
      }
    }
  }
  throw NoPathError("move_path: no path found");
}

ParamPoint apply_moves(const ParamPoint& params, const std::vector<Move>& moves) {
  ParamPoint p = params;
  for (const Move& m : moves)
    p = (m.kind == Move::Braid) ? braid_move_R(p, m.position)
                                : commute_move_L(p, m.position);
  return p;
}

ParamPoint transition_map(const Word& h, const Word& hp, const ParamPoint& params) {
  if (params.size() != h.length())
    throw std::invalid_argument("transition_map: params length mismatch");
  return apply_moves(params, move_path(h, hp));
}

size_t PermutohedronS4::class_of(const Word& w) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].count(w)) return i;
  throw std::invalid_argument("class_of: not a reduced word of w0 in S4");
}

PermutohedronS4 permutohedron_S4() {
  PermutohedronS4 p;
  // All of S4.
  Permutation id = identity_perm(4);
  std::vector<int> perm{1, 2, 3, 4};
  do {
    p.vertices.push_back(Permutation{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));

  p.words = reduced_words_of_longest(3);

  // Commutation classes: closure under commutation moves only.
  std::set<Word> seen;
  for (const Word& w : p.words) {
    if (seen.count(w)) continue;
    std::set<Word> cls;
    std::deque<Word> queue{w};
    cls.insert(w);
    while (!queue.empty()) {
      Word cur = queue.front();
      queue.pop_front();
      for (int i = 1; i < static_cast<int>(cur.length()); ++i) {
        if (!commute_applies(cur, i)) continue;
        Word nw = apply_commute(cur, i);
        if (cls.insert(nw).second) queue.push_back(nw);
      }
    }
    seen.insert(cls.begin(), cls.end());
    p.classes.push_back(std::move(cls));
  }

  // Hexagon moves between classes, one representative per unordered
  // class pair and direction.
  std::set<std::pair<size_t, size_t>> linked;
  for (size_t ci = 0; ci < p.classes.size(); ++ci) {
    for (const Word& w : p.classes[ci]) {
      for (int j = 1; j + 1 < static_cast<int>(w.length() + 1); ++j) {
        if (!braid_applies(w, j)) continue;
        Word nw = apply_braid(w, j);
        size_t cj = p.class_of(nw);
        if (cj == ci) continue;
        if (!linked.insert({std::min(ci, cj), std::max(ci, cj)}).second) continue;
        p.hexagons.push_back({ci, cj, w, nw, j});
      }
    }
  }

  // The class graph is an octagon; walk it once around.
  std::map<size_t, std::set<size_t>> adj;
  for (const auto& h : p.hexagons) {
    adj[h.from_class].insert(h.to_class);
    adj[h.to_class].insert(h.from_class);
  }
  size_t start = 0;
  p.octagon_order.push_back(start);
  size_t prev = start, cur = *adj[start].begin();
  while (cur != start) {
    p.octagon_order.push_back(cur);
    for (size_t next : adj[cur]) {
      if (next != prev) {
        prev = cur;
        cur = next;
        break;
      }
    }
  }
  return p;
}

namespace {
ParamPoint R(int j, const ParamPoint& x) { return braid_move_R(x, j); }
ParamPoint L(int i, const ParamPoint& x) { return commute_move_L(x, i); }
}  // namespace

ParamPoint tetra_R1(int j, const ParamPoint& x) {
  switch (j) {
    case 1: return R(1, x);
    case 2: return L(4, R(2, x));
    case 3: return L(5, R(3, x));
    case 4: return R(4, L(3, x));
    default: throw std::invalid_argument("tetra_R1: index out of range");
  }
}

ParamPoint tetra_R2(int j, const ParamPoint& x) {
  switch (j) {
    case 1: return L(3, R(1, x));
    case 2: return R(2, L(1, x));
    case 3: return R(3, L(2, x));
    case 4: return R(4, x);
    default: throw std::invalid_argument("tetra_R2: index out of range");
  }
}

bool tetrahedron_check(const ParamPoint& params) {
  if (params.size() != 6)
    throw std::invalid_argument("tetrahedron_check: need 6 parameters");
  ParamPoint lhs = tetra_R2(1, tetra_R2(3, tetra_R1(3, tetra_R1(1, params))));
  ParamPoint rhs = tetra_R2(4, tetra_R2(2, tetra_R1(2, tetra_R1(4, params))));
  return lhs == rhs;
}

bool octagon_commutativity_check(const ParamPoint& params) {
  if (params.size() != 6)
    throw std::invalid_argument("octagon_commutativity_check: need 6 parameters");
  ParamPoint lhs = L(3, R(1, R(3, L(2, L(5, R(3, R(1, params)))))));
  ParamPoint rhs = R(4, R(2, L(1, L(4, R(2, R(4, L(3, params)))))));
  return lhs == rhs;
}

}  // namespace wron
