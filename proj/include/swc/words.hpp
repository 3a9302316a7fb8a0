// Words in the generators and the elementary moves between them.
//
// Positions in moves are 1-based, like the letters themselves.

#ifndef SWC_WORDS_HPP_
#define SWC_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swc/coxeter.hpp"

namespace swc {

  struct Move {
    enum class Kind { hecke_nil, double_letter, braid };

    Kind        kind = Kind::hecke_nil;
    std::size_t pos  = 1;
    // For braid moves: the run starting at pos reads first, second, first,
    // ... (m letters) and is replaced by second, first, second, ...
    Letter first  = 0;
    Letter second = 0;

    static Move hecke_nil(std::size_t p) {
      return {Kind::hecke_nil, p, 0, 0};
    }
    static Move double_letter(std::size_t p) {
      return {Kind::double_letter, p, 0, 0};
    }
    static Move braid(std::size_t p, Letter i, Letter j) {
      return {Kind::braid, p, i, j};
    }

    bool operator==(Move const&) const = default;
  };

  std::string to_string(Move const& m);

  struct MoveSequence {
    Word              start;
    std::vector<Move> moves;
  };

  // Whether m applies to w; on false, `why` (if given) says why not.
  bool is_applicable(CoxeterSystem const& sys,
                     Word const&          w,
                     Move const&          m,
                     std::string*         why = nullptr);

  // Throws InputError naming the position if m does not apply.
  Word apply_move(CoxeterSystem const& sys, Word const& w, Move const& m);

  // Word reached after every move; throws InputError on the first move that
  // does not apply.
  Word replay(CoxeterSystem const& sys, MoveSequence const& seq);

  // Every braid move applicable to w, ordered by position then pair.
  std::vector<Move> applicable_braids(CoxeterSystem const& sys, Word const& w);

  bool is_reduced(CoxeterSystem const& sys, Word const& w);

  // Greedy fold: acc * s if that is longer, else acc.
  GroupElement demazure_product(CoxeterSystem const& sys, Word const& w);

  // Whether some subword of q is a reduced word for rho.
  bool contains_reduced_expression(CoxeterSystem const& sys,
                                   Word const&          q,
                                   GroupElement const&  rho);

  using Positions = std::vector<std::size_t>;

  // All increasing position sets (1-based) whose letters form a reduced word
  // for rho, in lexicographic order.
  std::vector<Positions> enumerate_embeddings(CoxeterSystem const& sys,
                                              Word const&          q,
                                              GroupElement const&  rho);

  struct HeckeReduceOptions {
    // Upper bound on the number of words visited by all braid searches.
    std::size_t budget = 1'000'000;
    // 0 explores braid moves in their natural order; any other value
    // shuffles each neighbour list with a generator seeded by it.
    std::uint64_t seed = 0;
  };

  // A sequence of Hecke nil-moves and braid moves taking q to a reduced word
  // for its Demazure product. Throws ResourceError if the budget runs out.
  MoveSequence hecke_reduce(CoxeterSystem const&      sys,
                            Word const&               q,
                            HeckeReduceOptions const& opts = {});

  // The moves undoing seq, in order, starting from its terminal word: nil
  // moves become doublings, braids are swapped back.
  MoveSequence invert_sequence(CoxeterSystem const& sys,
                               MoveSequence const&  seq);

  // Throws InputError unless c uses every generator exactly once.
  void check_coxeter_element_word(CoxeterSystem const& sys, Word const& c);

  // Lexicographically first reduced subword of c c c ... representing w.
  Word c_sorting_word(CoxeterSystem const& sys,
                      Word const&          c,
                      GroupElement const&  w);

}  // namespace swc

#endif  // SWC_WORDS_HPP_
