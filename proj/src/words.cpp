#include "swc/words.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "swc/errors.hpp"

namespace swc {

  namespace {
    struct WordHash {
      std::size_t operator()(Word const& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (Letter x : w) {
          h ^= static_cast<std::size_t>(x);
          h *= 0x100000001b3ull;
        }
        return h;
      }
    };
  }  // namespace

  std::string to_string(Move const& m) {
    switch (m.kind) {
      case Move::Kind::hecke_nil:
        return "hecke_nil(" + std::to_string(m.pos) + ")";
      case Move::Kind::double_letter:
        return "double(" + std::to_string(m.pos) + ")";
      case Move::Kind::braid:
        return "braid(" + std::to_string(m.pos) + ", " + std::to_string(m.first)
               + "," + std::to_string(m.second) + ")";
    }
    return "?";
  }

  bool is_applicable(CoxeterSystem const& sys,
                     Word const&          w,
                     Move const&          m,
                     std::string*         why) {
    auto fail = [why](std::string msg) {
      if (why != nullptr) {
        *why = std::move(msg);
      }
      return false;
    };
    std::string const where = " at position " + std::to_string(m.pos);
    if (m.pos < 1 || m.pos > w.size()) {
      return fail("no letter" + where);
    }
    std::size_t const k = m.pos - 1;
    switch (m.kind) {
      case Move::Kind::hecke_nil:
        if (k + 1 >= w.size() || w[k] != w[k + 1]) {
          return fail("no adjacent equal pair" + where);
        }
        return true;
      case Move::Kind::double_letter: return true;
      case Move::Kind::braid: {
        if (m.first < 1 || m.second < 1
            || static_cast<std::size_t>(m.first) > sys.rank()
            || static_cast<std::size_t>(m.second) > sys.rank()
            || m.first == m.second) {
          return fail("invalid braid pair" + where);
        }
        auto const len = static_cast<std::size_t>(sys.matrix()(m.first, m.second));
        if (k + len > w.size()) {
          return fail("braid run too short" + where);
        }
        for (std::size_t t = 0; t < len; ++t) {
          if (w[k + t] != (t % 2 == 0 ? m.first : m.second)) {
            return fail("no alternating run " + std::to_string(m.first) + ","
                        + std::to_string(m.second) + "," + " of length "
                        + std::to_string(len) + where);
          }
        }
        return true;
      }
    }
    return fail("unknown move");
  }

  Word apply_move(CoxeterSystem const& sys, Word const& w, Move const& m) {
    std::string why;
    if (!is_applicable(sys, w, m, &why)) {
      throw InputError("cannot apply " + to_string(m) + " to [" + word_to_string(w)
                       + "]: " + why);
    }
    Word              out = w;
    std::size_t const k   = m.pos - 1;
    switch (m.kind) {
      case Move::Kind::hecke_nil:
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        break;
      case Move::Kind::double_letter:
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(k) + 1, w[k]);
        break;
      case Move::Kind::braid: {
        auto const len = static_cast<std::size_t>(sys.matrix()(m.first, m.second));
        for (std::size_t t = 0; t < len; ++t) {
          out[k + t] = (t % 2 == 0 ? m.second : m.first);
        }
        break;
      }
    }
    return out;
  }

  Word replay(CoxeterSystem const& sys, MoveSequence const& seq) {
    Word w = seq.start;
    for (auto const& m : seq.moves) {
      w = apply_move(sys, w, m);
    }
    return w;
  }

  std::vector<Move> applicable_braids(CoxeterSystem const& sys, Word const& w) {
    std::vector<Move> out;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      Letter const i = w[k];
      Letter const j = w[k + 1];
      if (i == j) {
        continue;
      }
      auto const len = static_cast<std::size_t>(sys.matrix()(i, j));
      if (k + len > w.size()) {
        continue;
      }
      bool ok = true;
      for (std::size_t t = 2; t < len && ok; ++t) {
        ok = w[k + t] == (t % 2 == 0 ? i : j);
      }
      if (ok) {
        out.push_back(Move::braid(k + 1, i, j));
      }
    }
    return out;
  }

  bool is_reduced(CoxeterSystem const& sys, Word const& w) {
    return sys.element_of_word(w).length() == w.size();
  }

  GroupElement demazure_product(CoxeterSystem const& sys, Word const& w) {
    GroupElement acc = sys.identity();
    for (Letter s : w) {
      if (!sys.is_right_descent(acc, s)) {
        acc = sys.multiply(acc, s, Side::right);
      }
    }
    return acc;
  }

  bool contains_reduced_expression(CoxeterSystem const& sys,
                                   Word const&          q,
                                   GroupElement const&  rho) {
    sys.check_word(q);
    // Elements reachable as a length-increasing product of a subword.
    std::unordered_set<GroupElement> reach{sys.identity()};
    for (Letter s : q) {
      std::vector<GroupElement> grown;
      for (auto const& x : reach) {
        if (!sys.is_right_descent(x, s)) {
          grown.push_back(sys.multiply(x, s, Side::right));
        }
      }
      reach.insert(grown.begin(), grown.end());
    }
    return reach.count(rho) > 0;
  }

  std::vector<Positions> enumerate_embeddings(CoxeterSystem const& sys,
                                              Word const&          q,
                                              GroupElement const&  rho) {
    sys.check_word(q);
    // State (k, r): positions k.. of q still to scan; r = what remains to be
    // spelled. A letter s may be taken iff s is a left descent of r, which
    // keeps the chosen letters a reduced prefix of rho.
    std::size_t const m = q.size();
    std::vector<std::unordered_map<GroupElement, bool>> memo(m + 1);

    std::function<bool(std::size_t, GroupElement const&)> feasible;
    feasible = [&](std::size_t k, GroupElement const& r) -> bool {
      if (r.length() == 0) {
        return true;
      }
      if (m - k < r.length()) {
        return false;
      }
      auto it = memo[k].find(r);
      if (it != memo[k].end()) {
        return it->second;
      }
      bool ok = feasible(k + 1, r);
      if (!ok && sys.is_left_descent(r, q[k])) {
        ok = feasible(k + 1, sys.multiply(r, q[k], Side::left));
      }
      memo[k].emplace(r, ok);
      return ok;
    };

    std::vector<Positions> out;
    Positions              chosen;
    std::function<void(std::size_t, GroupElement const&)> walk;
    walk = [&](std::size_t k, GroupElement const& r) {
      if (r.length() == 0) {
        out.push_back(chosen);
        return;
      }
      // Taking position k first keeps the output lexicographic.
      if (sys.is_left_descent(r, q[k])) {
        GroupElement next = sys.multiply(r, q[k], Side::left);
        if (feasible(k + 1, next)) {
          chosen.push_back(k + 1);
          walk(k + 1, next);
          chosen.pop_back();
        }
      }
      if (feasible(k + 1, r)) {
        walk(k + 1, r);
      }
    };
    if (feasible(0, rho)) {
      walk(0, rho);
    }
    return out;
  }

  MoveSequence hecke_reduce(CoxeterSystem const&      sys,
                            Word const&               q,
                            HeckeReduceOptions const& opts) {
    sys.check_word(q);
    MoveSequence seq{q, {}};
    Word         current = q;
    std::size_t  visited = 0;
    std::mt19937_64 rng(opts.seed);

    for (;;) {
      // Shortest non-reduced prefix current[0..k].
      GroupElement acc = sys.identity();
      std::size_t  k   = 0;
      for (; k < current.size(); ++k) {
        if (sys.is_right_descent(acc, current[k])) {
          break;
        }
        acc = sys.multiply(acc, current[k], Side::right);
      }
      if (k == current.size()) {
        return seq;
      }

      // Braid moves inside the prefix until an adjacent equal pair shows up.
      // Its reduced part current[0..k-1] has a reduced word ending in
      // current[k], so the search always succeeds.
      Word const prefix(current.begin(),
                        current.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      std::unordered_map<Word, std::pair<Word, Move>, WordHash> parent;
      std::deque<Word> queue{prefix};
      parent.emplace(prefix, std::pair{Word{}, Move{}});
      std::optional<Word>        found;
      std::optional<std::size_t> pair_at;
      while (!queue.empty() && !found) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (std::size_t t = 0; t + 1 < w.size(); ++t) {
          if (w[t] == w[t + 1]) {
            found   = w;
            pair_at = t + 1;
            break;
          }
        }
        if (found) {
          break;
        }
        auto moves = applicable_braids(sys, w);
        if (opts.seed != 0) {
          std::shuffle(moves.begin(), moves.end(), rng);
        }
        for (auto const& mv : moves) {
          Word next = apply_move(sys, w, mv);
          if (parent.count(next) > 0) {
            continue;
          }
          if (++visited > opts.budget) {
            throw ResourceError("hecke_reduce: braid search budget of "
                                + std::to_string(opts.budget)
                                + " words exhausted on ["
                                + word_to_string(q) + "]");
          }
          parent.emplace(next, std::pair{w, mv});
          queue.push_back(std::move(next));
        }
      }
      if (!found) {
        throw std::logic_error("hecke_reduce: no adjacent pair in braid class of ["
                               + word_to_string(prefix) + "]");
      }

      std::vector<Move> path;
      for (Word w = *found; w != prefix;) {
        auto const& [from, mv] = parent.at(w);
        path.push_back(mv);
        w = from;
      }
      std::reverse(path.begin(), path.end());
      path.push_back(Move::hecke_nil(*pair_at));
      for (auto const& mv : path) {
        current = apply_move(sys, current, mv);
        seq.moves.push_back(mv);
      }
    }
  }

  MoveSequence invert_sequence(CoxeterSystem const& sys,
                               MoveSequence const&  seq) {
    MoveSequence out{replay(sys, seq), {}};
    out.moves.reserve(seq.moves.size());
    for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it) {
      switch (it->kind) {
        case Move::Kind::hecke_nil:
          out.moves.push_back(Move::double_letter(it->pos));
          break;
        case Move::Kind::double_letter:
          out.moves.push_back(Move::hecke_nil(it->pos));
          break;
        case Move::Kind::braid:
          out.moves.push_back(Move::braid(it->pos, it->second, it->first));
          break;
      }
    }
    return out;
  }

  void check_coxeter_element_word(CoxeterSystem const& sys, Word const& c) {
    sys.check_word(c);
    std::vector<int> count(sys.rank() + 1, 0);
    for (Letter s : c) {
      ++count[s];
    }
    if (c.size() != sys.rank()
        || std::any_of(count.begin() + 1, count.end(),
                       [](int x) { return x != 1; })) {
      throw InputError("[" + word_to_string(c)
                       + "] is not a Coxeter element word: every generator "
                         "must occur exactly once");
    }
  }

  Word c_sorting_word(CoxeterSystem const& sys,
                      Word const&          c,
                      GroupElement const&  w) {
    check_coxeter_element_word(sys, c);
    Word         out;
    GroupElement r = w;
    while (r.length() > 0) {
      for (Letter s : c) {
        if (r.length() == 0) {
          break;
        }
        if (sys.is_left_descent(r, s)) {
          out.push_back(s);
          r = sys.multiply(r, s, Side::left);
        }
      }
    }
    return out;
  }

}  // namespace swc
