#ifndef WRON_WORDS_HPP
#define WRON_WORDS_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "wron/rational.hpp"

namespace wron {

/// Word in the generators s_1..s_r.
///
/// Letters are stored in application order: letters[0] is applied first.
/// A word h = s_{i_m}...s_{i_1} written as the digit string "i_m...i_1"
/// therefore corresponds to the reversed string; parse_word/display
/// handle the conversion. Parameters attached to a word are indexed in
/// parallel (params[0] with letters[0]).
struct Word {
  std::vector<int> letters;
  int rank = 0;

  size_t length() const { return letters.size(); }
  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const { return letters < o.letters; }
};

/// Parses the display form "121321" (rightmost letter applied first).
Word parse_word(const std::string& digits, int rank);
std::string display_word(const Word& w);

/// One-line notation, images[i] = w(i+1).
struct Permutation {
  std::vector<int> images;
  int size() const { return static_cast<int>(images.size()); }
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }
};

Permutation identity_perm(int n);
Permutation longest_perm(int n);
int inversions(const Permutation& p);
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation adjacent_transposition(int i, int n);

Permutation word_to_perm(const Word& w);
bool is_reduced(const Word& w);

/// All reduced decompositions of the longest element of S_{rank+1}.
/// Guarded at rank <= 4.
std::vector<Word> reduced_words_of_longest(int rank, int max_rank = 4);

using DegreeVector = std::vector<int>;

/// Final vector of the shifted Weyl action s_{i_m}...s_{i_1} * 0 on
/// degree vectors: at each letter i, k_i <- k_{i-1} + k_{i+1} - k_i + 1.
DegreeVector shifted_degree_action(const Word& w);

using ParamPoint = std::vector<Rational>;

/// Transition map hit a pole: a_j + a_{j+2} vanished.
struct PoleError : std::runtime_error {
  PoleError(int position, const ParamPoint& triple);
  int position;
  ParamPoint triple;
};

struct NoPathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Braid substitution on the parameter triple at positions j, j+1, j+2
/// (1-based, application order). Involutive where defined.
ParamPoint braid_move_R(const ParamPoint& params, int j);

/// Swap of parameters i, i+1.
ParamPoint commute_move_L(const ParamPoint& params, int i);

/// Word-level moves.
bool braid_applies(const Word& w, int j);     // (a, a+-1, a) at j..j+2
bool commute_applies(const Word& w, int i);   // |w_i - w_{i+1}| > 1
Word apply_braid(const Word& w, int j);
Word apply_commute(const Word& w, int i);

struct Move {
  enum Kind { Braid, Commute } kind;
  int position;  // 1-based
};

/// Shortest move path between two reduced words of the same element
/// (BFS, deterministic tie-breaking). Throws NoPathError.
std::vector<Move> move_path(const Word& from, const Word& to);

ParamPoint apply_moves(const ParamPoint& params, const std::vector<Move>& moves);

/// Parameters a' with chart(h, a) = chart(h', a').
ParamPoint transition_map(const Word& h, const Word& hp, const ParamPoint& params);

/// The S4 permutohedron data: 16 reduced words of w0, their 8
/// commutation classes, and the octagon of hexagon moves between
/// classes.
struct PermutohedronS4 {
  std::vector<Permutation> vertices;          // all 24 elements of S4
  std::vector<Word> words;                    // 16 reduced words of w0
  std::vector<std::set<Word>> classes;        // 8 commutation classes
  struct Hexagon {
    size_t from_class, to_class;
    Word from_word, to_word;
    int braid_position;                       // the R(j) index
  };
  std::vector<Hexagon> hexagons;              // 8, forming an octagon
  std::vector<size_t> octagon_order;          // cyclic order of classes

  size_t class_of(const Word& w) const;
};

PermutohedronS4 permutohedron_S4();

/// The composite transition operators R1(1..4), R2(1..4) on 6-parameter
/// points, built from R(j) and L(i).
ParamPoint tetra_R1(int j, const ParamPoint& p);
ParamPoint tetra_R2(int j, const ParamPoint& p);

/// R2(1)R2(3)R1(3)R1(1) = R2(4)R2(2)R1(2)R1(4), checked exactly.
bool tetrahedron_check(const ParamPoint& params);

/// L(3)R(1)R(3)L(2)L(5)R(3)R(1) = R(4)R(2)L(1)L(4)R(2)R(4)L(3).
bool octagon_commutativity_check(const ParamPoint& params);

}  // namespace wron

#endif
