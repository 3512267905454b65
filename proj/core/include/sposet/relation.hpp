#ifndef SPOSET_RELATION_HPP_
#define SPOSET_RELATION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

namespace sposet {

//! A dense binary relation on {0, ..., n - 1}.
//!
//! This is the workhorse for partial orders, preorders and the closure
//! computations behind order congruences and tensor products.  Everything in
//! this project runs at desk scale (carriers of at most a few dozen
//! elements), so a flat boolean matrix with Floyd-Warshall closure is both
//! the simplest and an entirely adequate representation.
class Relation {
 public:
  Relation() = default;

  //! The empty relation on n points.
  explicit Relation(std::size_t n) : _n(n), _bits(n * n, 0) {}

  //! The identity (diagonal) relation on n points.
  static Relation identity(std::size_t n);

  //! Build from a pair list (indices must be < n).
  static Relation from_pairs(std::size_t n,
                             std::vector<std::pair<std::size_t, std::size_t>> const& pairs);

  std::size_t size() const noexcept {
    return _n;
  }

  bool operator()(std::size_t i, std::size_t j) const {
    return _bits[i * _n + j] != 0;
  }

  void set(std::size_t i, std::size_t j, bool val = true) {
    _bits[i * _n + j] = val ? 1 : 0;
  }

  //! Add the diagonal.
  void reflexive_close();

  //! Floyd-Warshall transitive closure in place.
  void transitive_close();

  bool is_reflexive() const;
  bool is_transitive() const;

  //! True if i R j and j R i imply i = j.
  bool is_antisymmetric() const;

  bool is_partial_order() const {
    return is_reflexive() && is_antisymmetric() && is_transitive();
  }

  //! True if the relation is exactly the diagonal.
  bool is_diagonal() const;

  Relation transposed() const;

  //! Pointwise intersection (sizes must agree).
  Relation meet(Relation const& other) const;

  //! All related pairs (i, j), i R j, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  //! Number of related pairs.
  std::size_t count() const;

  bool operator==(Relation const& other) const = default;

  //! Lexicographic comparison of (size, bits); used for canonical forms.
  bool operator<(Relation const& other) const;

 private:
  std::size_t        _n = 0;
  std::vector<char>  _bits;
};

}  // namespace sposet
#endif  // SPOSET_RELATION_HPP_
