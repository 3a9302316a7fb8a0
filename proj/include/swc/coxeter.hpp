// Finite Coxeter systems with exact element arithmetic.
//
// An element is stored as the permutation it induces on the root system,
// together with its length (the number of positive roots it sends to
// negative ones). Roots are generated by closure from the simple roots in
// simple-root coordinates over Z[phi]; I2(m) uses its 2m roots indexed by
// angle instead, since cos(pi/m) is not in Z[phi] for general m.
//
// Generator labels are 1-based. Labelling of the Dynkin diagram:
//   A_n   1 - 2 - ... - n
//   B_n   1 - 2 - ... - (n-1) =4= n
//   D_n   1 - 2 - ... - (n-2), with n-1 and n both attached to n-2
//   E_n   1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//   F_4   1 - 2 =4= 3 - 4
//   H_n   1 =5= 2 - 3 (- 4)
//   I2(m) 1 =m= 2

#ifndef SWC_COXETER_HPP_
#define SWC_COXETER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "swc/golden.hpp"

namespace swc {

  using Letter = int;
  using Word   = std::vector<Letter>;

  enum class Family { A, B, D, E, F, H, I };

  enum class Side { left, right };

  struct CoxeterType {
    Family family = Family::A;
    int    rank   = 1;
    // Off-diagonal entry of the Coxeter matrix; only meaningful for I2.
    int m = 0;

    // Parses "A2", "B3", "D4", "E6", "F4", "H3", "I2(7)".
    static CoxeterType parse(std::string_view descriptor);

    // Throws InputError unless rank and m fit the family.
    void validate() const;

    std::string to_string() const;

    bool operator==(CoxeterType const&) const = default;
  };

  class CoxeterMatrix {
   public:
    CoxeterMatrix() = default;
    explicit CoxeterMatrix(CoxeterType const& type);

    std::size_t rank() const noexcept {
      return _rank;
    }

    // 1-based indices.
    int operator()(Letter i, Letter j) const {
      return _entries[(i - 1) * _rank + (j - 1)];
    }

    bool simply_laced() const noexcept;

   private:
    std::size_t      _rank = 0;
    std::vector<int> _entries;
  };

  class CoxeterSystem;

  class GroupElement {
   public:
    GroupElement() = default;

    std::size_t length() const noexcept {
      return _length;
    }

    bool operator==(GroupElement const& that) const noexcept {
      return _perm == that._perm;
    }
    // Arbitrary but fixed total order, for canonical containers.
    bool operator<(GroupElement const& that) const noexcept {
      return _perm < that._perm;
    }

    std::size_t hash() const noexcept;

   private:
    friend class CoxeterSystem;

    std::vector<std::uint16_t> _perm;  // root index -> image root index
    std::size_t                _length = 0;
  };

  class CoxeterSystem {
   public:
    // Builds the root system and checks the group order against the
    // known value; throws InputError on a bad type and std::logic_error if
    // the order check fails.
    explicit CoxeterSystem(CoxeterType const& type);

    static CoxeterSystem parse(std::string_view descriptor) {
      return CoxeterSystem(CoxeterType::parse(descriptor));
    }

    CoxeterType const& type() const noexcept {
      return _type;
    }
    std::string descriptor() const {
      return _type.to_string();
    }
    CoxeterMatrix const& matrix() const noexcept {
      return _matrix;
    }
    std::size_t rank() const noexcept {
      return _matrix.rank();
    }
    std::uint64_t order() const noexcept {
      return _order;
    }
    std::size_t num_roots() const noexcept {
      return _positive.size();
    }
    std::size_t num_positive_roots() const noexcept {
      return _positive.size() / 2;
    }

    // Throws InputError if i is not in 1..rank.
    void check_letter(Letter i) const;
    void check_word(Word const& w) const;

    GroupElement identity() const;
    GroupElement generator(Letter i) const;
    GroupElement multiply(GroupElement const& w, Letter i, Side side) const;
    // The product w * v.
    GroupElement multiply(GroupElement const& w, GroupElement const& v) const;
    GroupElement inverse(GroupElement const& w) const;
    // Left-to-right product of the letters.
    GroupElement element_of_word(Word const& w) const;
    GroupElement longest_element() const;

    bool is_left_descent(GroupElement const& w, Letter i) const;
    bool is_right_descent(GroupElement const& w, Letter i) const;

    // Lexicographically first reduced word for w.
    Word reduced_word(GroupElement const& w) const;

    // All elements by breadth-first search from the identity, ordered by
    // (length, lexicographically first reduced word). Throws ResourceError
    // if the group has more than `limit` elements.
    std::vector<GroupElement> elements(std::size_t limit = 1'000'000) const;

   private:
    std::size_t compute_length(std::vector<std::uint16_t> const& perm) const;
    bool        is_negative(std::uint16_t root) const {
      return !_positive[root];
    }

    CoxeterType                             _type;
    CoxeterMatrix                           _matrix;
    std::uint64_t                           _order = 0;
    std::vector<bool>                       _positive;
    std::vector<std::uint16_t>              _simple;      // letter-1 -> root
    std::vector<std::vector<std::uint16_t>> _reflection;  // letter-1 -> perm
  };

  // Known order of the finite Coxeter group of the given type.
  std::uint64_t known_group_order(CoxeterType const& type);

  // Cartan matrix A with A[i][j] = <alpha_i, alpha_j^vee> over Z[phi]; not
  // defined for I2(m) with m not in {3, 4, 5}. Row-major, 0-based.
  std::vector<std::vector<Golden>> cartan_matrix(CoxeterMatrix const& m);

  // |W| by orbit-stabilizer on fundamental weights: |W_J| = |W_J omega_k| *
  // |W_{J - k}|. Independent of the root-permutation model.
  std::uint64_t group_order_by_weights(
      std::vector<std::vector<Golden>> const& cartan);

  std::string word_to_string(Word const& w);
  // Parses "1,2,1"; the empty string is the empty word.
  Word parse_word(std::string_view text);

}  // namespace swc

template <>
struct std::hash<swc::GroupElement> {
  std::size_t operator()(swc::GroupElement const& w) const noexcept {
    return w.hash();
  }
};

#endif  // SWC_COXETER_HPP_
