#include "swc/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "swc/errors.hpp"

namespace swc {

  namespace {
    constexpr int kMaxRank = 16;

    int parse_int(std::string_view s, std::string_view whole) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw InputError("invalid Coxeter type descriptor \""
                         + std::string(whole) + "\"");
      }
      return value;
    }

    std::uint64_t factorial(int n) {
      std::uint64_t r = 1;
      for (int i = 2; i <= n; ++i) {
        r *= static_cast<std::uint64_t>(i);
      }
      return r;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CoxeterType
  ////////////////////////////////////////////////////////////////////////

  CoxeterType CoxeterType::parse(std::string_view descriptor) {
    std::string_view s = descriptor;
    while (!s.empty() && s.front() == ' ') {
      s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
      s.remove_suffix(1);
    }
    if (s.size() < 2) {
      throw InputError("invalid Coxeter type descriptor \""
                       + std::string(descriptor) + "\"");
    }
    CoxeterType t;
    switch (s.front()) {
      case 'A': t.family = Family::A; break;
      case 'B': t.family = Family::B; break;
      case 'D': t.family = Family::D; break;
      case 'E': t.family = Family::E; break;
      case 'F': t.family = Family::F; break;
      case 'H': t.family = Family::H; break;
      case 'I': t.family = Family::I; break;
      default:
        throw InputError("unknown Coxeter family in \""
                         + std::string(descriptor) + "\"");
    }
    s.remove_prefix(1);
    if (t.family == Family::I) {
      auto const open = s.find('(');
      if (open == std::string_view::npos || s.back() != ')') {
        throw InputError("expected I2(m), got \"" + std::string(descriptor)
                         + "\"");
      }
      t.rank = parse_int(s.substr(0, open), descriptor);
      t.m    = parse_int(s.substr(open + 1, s.size() - open - 2), descriptor);
    } else {
      t.rank = parse_int(s, descriptor);
    }
    t.validate();
    return t;
  }

  void CoxeterType::validate() const {
    auto fail = [this](std::string const& why) {
      throw InputError("invalid Coxeter type " + to_string() + ": " + why);
    };
    if (rank < 1 || rank > kMaxRank) {
      fail("rank must be in 1.." + std::to_string(kMaxRank));
    }
    switch (family) {
      case Family::A: break;
      case Family::B:
        if (rank < 2) {
          fail("B_n needs n >= 2");
        }
        break;
      case Family::D:
        if (rank < 4) {
          fail("D_n needs n >= 4");
        }
        break;
      case Family::E:
        if (rank < 6 || rank > 8) {
          fail("E_n needs n in {6, 7, 8}");
        }
        break;
      case Family::F:
        if (rank != 4) {
          fail("F has rank 4 only");
        }
        break;
      case Family::H:
        if (rank != 3 && rank != 4) {
          fail("H_n needs n in {3, 4}");
        }
        break;
      case Family::I:
        if (rank != 2) {
          fail("I has rank 2 only");
        }
        if (m < 3) {
          fail("I2(m) needs m >= 3");
        }
        break;
    }
  }

  std::string CoxeterType::to_string() const {
    static constexpr char letters[] = {'A', 'B', 'D', 'E', 'F', 'H', 'I'};
    std::string s(1, letters[static_cast<int>(family)]);
    s += std::to_string(rank);
    if (family == Family::I) {
      s += "(" + std::to_string(m) + ")";
    }
    return s;
  }

  std::uint64_t known_group_order(CoxeterType const& t) {
    int const n = t.rank;
    switch (t.family) {
      case Family::A: return factorial(n + 1);
      case Family::B: return (std::uint64_t{1} << n) * factorial(n);
      case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
      case Family::E:
        return n == 6 ? 51'840 : n == 7 ? 2'903'040 : 696'729'600;
      case Family::F: return 1'152;
      case Family::H: return n == 3 ? 120 : 14'400;
      case Family::I: return 2 * static_cast<std::uint64_t>(t.m);
    }
    throw std::logic_error("unreachable");
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterMatrix
  ////////////////////////////////////////////////////////////////////////

  CoxeterMatrix::CoxeterMatrix(CoxeterType const& t)
      : _rank(static_cast<std::size_t>(t.rank)),
        _entries(_rank * _rank, 2) {
    auto set = [this](int i, int j, int v) {
      _entries[(i - 1) * _rank + (j - 1)] = v;
      _entries[(j - 1) * _rank + (i - 1)] = v;
    };
    int const n = t.rank;
    for (int i = 1; i <= n; ++i) {
      set(i, i, 1);
    }
    switch (t.family) {
      case Family::A:
        for (int i = 1; i < n; ++i) {
          set(i, i + 1, 3);
        }
        break;
      case Family::B:
        for (int i = 1; i < n - 1; ++i) {
          set(i, i + 1, 3);
        }
        set(n - 1, n, 4);
        break;
      case Family::D:
        for (int i = 1; i < n - 1; ++i) {
          set(i, i + 1, 3);
        }
        set(n - 2, n, 3);
        break;
      case Family::E:
        set(1, 3, 3);
        set(2, 4, 3);
        for (int i = 3; i < n; ++i) {
          set(i, i + 1, 3);
        }
        break;
      case Family::F:
        set(1, 2, 3);
        set(2, 3, 4);
        set(3, 4, 3);
        break;
      case Family::H:
        set(1, 2, 5);
        for (int i = 2; i < n; ++i) {
          set(i, i + 1, 3);
        }
        break;
      case Family::I: set(1, 2, t.m); break;
    }
  }

  bool CoxeterMatrix::simply_laced() const noexcept {
    for (std::size_t i = 0; i < _rank; ++i) {
      for (std::size_t j = 0; j < _rank; ++j) {
        int const v = _entries[i * _rank + j];
        if (i != j && v != 2 && v != 3) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<Golden>> cartan_matrix(CoxeterMatrix const& m) {
    std::size_t const                n = m.rank();
    std::vector<std::vector<Golden>> a(n, std::vector<Golden>(n));
    for (std::size_t i = 0; i < n; ++i) {
      a[i][i] = 2;
      for (std::size_t j = i + 1; j < n; ++j) {
        int const mij = m(static_cast<Letter>(i + 1), static_cast<Letter>(j + 1));
        switch (mij) {
          case 2: break;
          case 3: a[i][j] = a[j][i] = -1; break;
          case 4:
            a[i][j] = -1;
            a[j][i] = -2;
            break;
          case 5: a[i][j] = a[j][i] = -Golden::phi(); break;
          default:
            throw InputError("no Cartan matrix over Z[phi] for m = "
                             + std::to_string(mij));
        }
      }
    }
    return a;
  }

  std::uint64_t group_order_by_weights(
      std::vector<std::vector<Golden>> const& cartan) {
    std::size_t const n = cartan.size();
    if (n == 0) {
      return 1;
    }
    // Orbit of the last fundamental weight; the stabilizer is the parabolic
    // subgroup on the remaining generators.
    using Weight = std::vector<Golden>;
    Weight start(n);
    start[n - 1] = 1;
    std::map<Weight, bool> seen{{start, true}};
    std::deque<Weight>     queue{start};
    while (!queue.empty()) {
      Weight const lambda = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < n; ++i) {
        if (lambda[i].is_zero()) {
          continue;
        }
        Weight mu = lambda;
        for (std::size_t j = 0; j < n; ++j) {
          mu[j] -= lambda[i] * cartan[i][j];
        }
        if (seen.emplace(mu, true).second) {
          queue.push_back(std::move(mu));
        }
      }
    }
    std::vector<std::vector<Golden>> sub(n - 1, std::vector<Golden>(n - 1));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = 0; j + 1 < n; ++j) {
        sub[i][j] = cartan[i][j];
      }
    }
    return static_cast<std::uint64_t>(seen.size()) * group_order_by_weights(sub);
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupElement
  ////////////////////////////////////////////////////////////////////////

  std::size_t GroupElement::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : _perm) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterSystem
  ////////////////////////////////////////////////////////////////////////

  CoxeterSystem::CoxeterSystem(CoxeterType const& type)
      : _type(type), _matrix((type.validate(), type)) {
    std::size_t const n = _matrix.rank();

    if (type.family == Family::I) {
      // Roots at angles k pi / m, k = 0..2m-1; alpha_1 at k = 0 and
      // alpha_2 at k = m - 1. Positive roots are k < m.
      int const m = type.m;
      _positive.assign(2 * m, false);
      for (int k = 0; k < m; ++k) {
        _positive[k] = true;
      }
      _simple = {0, static_cast<std::uint16_t>(m - 1)};
      _reflection.assign(2, std::vector<std::uint16_t>(2 * m));
      for (int k = 0; k < 2 * m; ++k) {
        _reflection[0][k] = static_cast<std::uint16_t>((m - k + 2 * m) % (2 * m));
        _reflection[1][k]
            = static_cast<std::uint16_t>((3 * m - 2 - k + 2 * m) % (2 * m));
      }
    } else {
      auto const cartan = cartan_matrix(_matrix);
      using Root        = std::vector<Golden>;
      std::vector<Root>        roots;
      std::map<Root, std::size_t> index;
      for (std::size_t i = 0; i < n; ++i) {
        Root r(n);
        r[i] = 1;
        index.emplace(r, roots.size());
        roots.push_back(std::move(r));
      }
      auto reflect = [&](Root const& beta, std::size_t i) {
        // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
        Golden c;
        for (std::size_t j = 0; j < n; ++j) {
          c += beta[j] * cartan[j][i];
        }
        Root out = beta;
        out[i] -= c;
        return out;
      };
      for (std::size_t next = 0; next < roots.size(); ++next) {
        for (std::size_t i = 0; i < n; ++i) {
          Root r = reflect(roots[next], i);
          if (index.find(r) == index.end()) {
            if (roots.size() >= 0xFFFF) {
              throw std::logic_error("root system too large");
            }
            index.emplace(r, roots.size());
            roots.push_back(std::move(r));
          }
        }
      }
      _positive.resize(roots.size());
      for (std::size_t k = 0; k < roots.size(); ++k) {
        int sg = 0;
        for (auto const& c : roots[k]) {
          if ((sg = c.sign()) != 0) {
            break;
          }
        }
        _positive[k] = sg > 0;
      }
      _simple.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        _simple[i] = static_cast<std::uint16_t>(i);
      }
      _reflection.assign(n, std::vector<std::uint16_t>(roots.size()));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < roots.size(); ++k) {
          _reflection[i][k]
              = static_cast<std::uint16_t>(index.at(reflect(roots[k], i)));
        }
      }
    }

    std::uint64_t const expected = known_group_order(type);
    std::uint64_t       computed = 0;
    if (type.family == Family::I) {
      computed = elements(expected + 1).size();
    } else {
      computed = group_order_by_weights(cartan_matrix(_matrix));
    }
    if (computed != expected) {
      throw std::logic_error("group order check failed for " + type.to_string()
                             + ": computed " + std::to_string(computed)
                             + ", expected " + std::to_string(expected));
    }
    _order = expected;
  }

  void CoxeterSystem::check_letter(Letter i) const {
    if (i < 1 || static_cast<std::size_t>(i) > rank()) {
      throw InputError("generator index " + std::to_string(i)
                       + " out of range 1.." + std::to_string(rank())
                       + " for " + descriptor());
    }
  }

  void CoxeterSystem::check_word(Word const& w) const {
    for (Letter i : w) {
      check_letter(i);
    }
  }

  std::size_t
  CoxeterSystem::compute_length(std::vector<std::uint16_t> const& perm) const {
    std::size_t len = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if (_positive[k] && is_negative(perm[k])) {
        ++len;
      }
    }
    return len;
  }

  GroupElement CoxeterSystem::identity() const {
    GroupElement e;
    e._perm.resize(_positive.size());
    for (std::size_t k = 0; k < e._perm.size(); ++k) {
      e._perm[k] = static_cast<std::uint16_t>(k);
    }
    return e;
  }

  GroupElement CoxeterSystem::generator(Letter i) const {
    return multiply(identity(), i, Side::right);
  }

  GroupElement CoxeterSystem::multiply(GroupElement const& w,
                                       Letter              i,
                                       Side                side) const {
    check_letter(i);
    auto const&  s = _reflection[i - 1];
    GroupElement out;
    out._perm.resize(w._perm.size());
    bool descent;
    if (side == Side::right) {
      // (w s)(beta) = w(s(beta))
      for (std::size_t k = 0; k < s.size(); ++k) {
        out._perm[k] = w._perm[s[k]];
      }
      descent = is_right_descent(w, i);
    } else {
      // (s w)(beta) = s(w(beta))
      for (std::size_t k = 0; k < s.size(); ++k) {
        out._perm[k] = s[w._perm[k]];
      }
      descent = is_left_descent(w, i);
    }
    out._length = descent ? w._length - 1 : w._length + 1;
    return out;
  }

  GroupElement CoxeterSystem::multiply(GroupElement const& w,
                                       GroupElement const& v) const {
    GroupElement out;
    out._perm.resize(w._perm.size());
    for (std::size_t k = 0; k < out._perm.size(); ++k) {
      out._perm[k] = w._perm[v._perm[k]];
    }
    out._length = compute_length(out._perm);
    return out;
  }

  GroupElement CoxeterSystem::inverse(GroupElement const& w) const {
    GroupElement out;
    out._perm.resize(w._perm.size());
    for (std::size_t k = 0; k < out._perm.size(); ++k) {
      out._perm[w._perm[k]] = static_cast<std::uint16_t>(k);
    }
    out._length = w._length;
    return out;
  }

  GroupElement CoxeterSystem::element_of_word(Word const& w) const {
    GroupElement out = identity();
    for (Letter i : w) {
      out = multiply(out, i, Side::right);
    }
    return out;
  }

  GroupElement CoxeterSystem::longest_element() const {
    GroupElement w = identity();
    for (;;) {
      Letter next = 0;
      for (Letter i = 1; static_cast<std::size_t>(i) <= rank(); ++i) {
        if (!is_right_descent(w, i)) {
          next = i;
          break;
        }
      }
      if (next == 0) {
        return w;
      }
      w = multiply(w, next, Side::right);
    }
  }

  bool CoxeterSystem::is_right_descent(GroupElement const& w, Letter i) const {
    check_letter(i);
    return is_negative(w._perm[_simple[i - 1]]);
  }

  bool CoxeterSystem::is_left_descent(GroupElement const& w, Letter i) const {
    check_letter(i);
    // l(s w) < l(w) iff w^{-1}(alpha_i) < 0
    auto const target = _simple[i - 1];
    for (std::size_t k = 0; k < w._perm.size(); ++k) {
      if (w._perm[k] == target) {
        return is_negative(static_cast<std::uint16_t>(k));
      }
    }
    throw std::logic_error("element is not a permutation of the roots");
  }

  Word CoxeterSystem::reduced_word(GroupElement const& w) const {
    Word         out;
    GroupElement r = w;
    while (r.length() > 0) {
      for (Letter i = 1; static_cast<std::size_t>(i) <= rank(); ++i) {
        if (is_left_descent(r, i)) {
          out.push_back(i);
          r = multiply(r, i, Side::left);
          break;
        }
      }
    }
    return out;
  }

  std::vector<GroupElement> CoxeterSystem::elements(std::size_t limit) const {
    std::vector<GroupElement>        out{identity()};
    std::unordered_set<GroupElement> seen{out.front()};
    for (std::size_t next = 0; next < out.size(); ++next) {
      for (Letter i = 1; static_cast<std::size_t>(i) <= rank(); ++i) {
        GroupElement w = multiply(out[next], i, Side::right);
        if (seen.insert(w).second) {
          if (out.size() >= limit) {
            throw ResourceError("group " + descriptor() + " has more than "
                                + std::to_string(limit) + " elements");
          }
          out.push_back(std::move(w));
        }
      }
    }
    // sorted by (length, lex-first reduced word)
    std::vector<std::pair<Word, GroupElement>> keyed;
    keyed.reserve(out.size());
    for (auto& w : out) {
      Word rw = reduced_word(w);
      keyed.emplace_back(std::move(rw), std::move(w));
    }
    std::sort(keyed.begin(), keyed.end(), [](auto const& x, auto const& y) {
      if (x.first.size() != y.first.size()) {
        return x.first.size() < y.first.size();
      }
      return x.first < y.first;
    });
    out.clear();
    for (auto& kv : keyed) {
      out.push_back(std::move(kv.second));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Word text form
  ////////////////////////////////////////////////////////////////////////

  std::string word_to_string(Word const& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0) {
        s += ',';
      }
      s += std::to_string(w[k]);
    }
    return s;
  }

  Word parse_word(std::string_view text) {
    Word out;
    while (!text.empty() && text.front() == ' ') {
      text.remove_prefix(1);
    }
    if (text.empty()) {
      return out;
    }
    std::size_t start = 0;
    for (;;) {
      auto const  comma = text.find(',', start);
      auto        piece = text.substr(start, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - start);
      while (!piece.empty() && piece.front() == ' ') {
        piece.remove_prefix(1);
      }
      while (!piece.empty() && piece.back() == ' ') {
        piece.remove_suffix(1);
      }
      int value = 0;
      auto [ptr, ec]
          = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (piece.empty() || ec != std::errc() || value < 1
          || ptr != piece.data() + piece.size()) {
        throw InputError("invalid word \"" + std::string(text) + "\"");
      }
      out.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return out;
  }

}  // namespace swc
